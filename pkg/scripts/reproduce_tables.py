"""Print the family formulas with sample values and the consistency report.

Usage: python3 scripts/reproduce_tables.py [--n 1,2,3,42,577]
"""
import argparse

from etpoly.formulas import FAMILIES, consistency_suite, eval_family, fatness


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="1,2,3,13,42,577")
    args = ap.parse_args()
    ns = [int(x) for x in args.n.split(",")]
    for name, fam in FAMILIES.items():
        for d in ([4, 5, 6] if fam.needs_d else [None]):
            head = f"{name}" + (f" d={d}" if d else "")
            print(f"{head:<10} {fam.symbolic(d)}   [{fam.description}]")
            for n in ns:
                if n >= fam.min_n:
                    vals = eval_family(name, n, d)
                    extra = f"  fatness {float(fatness(vals)):.4f}" if len(vals) in (4, 5) and (d in (None, 4)) else ""
                    print(f"{'':<10} n={n:<5} {vals}{extra}")
    print()
    rep = consistency_suite()
    print("\n".join(rep.lines()))
    raise SystemExit(0 if rep.ok else 1)


if __name__ == "__main__":
    main()
