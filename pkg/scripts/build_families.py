"""Build the rational polytope families and print their flag vectors.

Usage: python3 scripts/build_families.py [--out DIR] [--max-n N]

With ``--out`` every built polytope is also written as a JSON document
(including its cut system when one exists).
"""
import argparse
import time
from pathlib import Path

from etpoly import codec
from etpoly.constructions.generators import cube
from etpoly.constructions.realization import et_realization
from etpoly.constructions.stacking import build_cross_stack, build_truncatable_stacked, cross_with_stacked_facets
from etpoly.constructions.truncation import truncate_all
from etpoly.et import d_construction
from etpoly.flags import flag_vector
from etpoly.formulas import eval_family


def report(name, P, expected=None, out=None, cuts=None):
    fv = flag_vector(P.lattice)
    line = f"{name:<28} {fv}"
    if expected is not None:
        line += "   ok" if fv.shape4()[: len(expected)] == tuple(expected) else f"   MISMATCH (expected {expected})"
    print(line)
    if out is not None:
        (out / f"{name}.json").write_text(codec.dumps(codec.polytope_to_doc(P, cuts)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=None)
    ap.add_argument("--max-n", type=int, default=3)
    args = ap.parse_args()
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()

    print("# truncated stacked 4-polytopes")
    for n in range(args.max_n + 1):
        fam = build_truncatable_stacked(4, [0] * n)
        report(f"stacked4_{n}", fam.polytope, out=args.out, cuts=fam.cuts)
        report(f"D1_stacked4_{n}", truncate_all(fam.polytope, fam.cuts), eval_family("D1P", n), args.out)

    print("# stacks of cross polytopes")
    for n in range(1, args.max_n + 1):
        fam = build_cross_stack(n)
        report(f"cross_stack_{n}", fam.polytope, eval_family("C4n", n), args.out, fam.cuts)
        if fam.cuts is not None:
            report(f"D1_cross_stack_{n}", truncate_all(fam.polytope, fam.cuts), eval_family("D1C", n), args.out)
        else:
            print(f"D1_cross_stack_{n:<14} no cut system, combinatorial: {flag_vector(d_construction(fam.polytope.lattice, 1))}")
        print(f"{'':<28} cut strategy: {fam.strategy}")

    print("# cross polytope with nine stacked facets")
    fam = cross_with_stacked_facets(9)
    report("cross_9_stacked", fam.polytope, (17, 60, 86, 43), args.out, fam.cuts)
    report("D1_cross_9_stacked", truncate_all(fam.polytope, fam.cuts), (60, 258, 258, 60), args.out)

    print("# tangent realization")
    report("E2_cube4", et_realization(cube(4), 2, 2), (24, 96, 96, 24, 144), args.out)

    print(f"# done in {time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main()
