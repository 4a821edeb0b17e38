"""Command-line pipelines over JSON documents.

Each verb reads one document (a file argument or stdin) and writes one
document or report to stdout, so verbs compose with shell pipes::

    etpoly generate simplex -d 4 | etpoly et -t 1 | etpoly flags

Errors are written to stderr as ``{"error": <class>, "kinds": [<class and
its library base classes>], "message": ...}`` with exit code 2; failed
certifications exit with code 1.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Sequence

from . import codec
from .constructions.generators import KINDS, generate
from .constructions.realization import et_realization
from .constructions.stacking import build_cross_stack, build_truncatable_stacked
from .constructions.truncation import certify_cuts, edge_tangent_cuts, midpoint_cuts, truncate_all
from .errors import BadParams, EtError, ParseError
from .et import d_construction, et
from .flags import flag_vector
from .formulas import FAMILIES, consistency_suite, eval_family
from .isomorphism import find_isomorphism
from .poset import is_eulerian, is_lattice, simpliciality_profile
from .subdivision import pi, pi_inverse, random_chain_point


def _read(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from exc
    return codec.loads(text)


def _emit(doc: dict) -> None:
    sys.stdout.write(codec.dumps(doc) + "\n")


def _load_any(path: str):
    """Return ``(lattice, polytope_or_None, doc)``."""
    doc = _read(path)
    kind = codec.doc_type(doc)
    if kind == "lattice":
        return codec.lattice_from_doc(doc), None, doc
    if kind == "polytope":
        P = codec.polytope_from_doc(doc)
        return P.lattice, P, doc
    raise ParseError(f"expected a lattice or polytope document, got {kind!r}")


def _load_polytope(path: str):
    doc = _read(path)
    if codec.doc_type(doc) != "polytope":
        raise ParseError("expected a polytope document")
    return codec.polytope_from_doc(doc), doc


# -- verbs ----------------------------------------------------------------


def cmd_generate(a) -> int:
    cuts = None
    if a.kind == "stacked":
        plan = json.loads(a.plan) if a.plan else [0] * a.n
        fam = build_truncatable_stacked(a.d, plan, base=a.base)
        P, cuts = fam.polytope, fam.cuts
    elif a.kind == "cross_stack":
        fam = build_cross_stack(a.n, a.d)
        P, cuts = fam.polytope, fam.cuts
    else:
        P = generate(a.kind, a.d, a.k)
    _emit(codec.polytope_to_doc(P, cuts))
    return 0


def cmd_et(a) -> int:
    L, _, _ = _load_any(a.input)
    _emit(codec.lattice_to_doc(et(L, a.t)))
    return 0


def cmd_dk(a) -> int:
    L, _, _ = _load_any(a.input)
    _emit(codec.lattice_to_doc(d_construction(L, a.k)))
    return 0


def cmd_truncate(a) -> int:
    P, doc = _load_polytope(a.input)
    if a.cuts:
        cs = codec.cuts_from_doc(_read(a.cuts), P)
    elif a.strategy == "midpoint":
        cs = midpoint_cuts(P)
    elif a.strategy == "edge-tangent":
        if a.r2 is None:
            raise BadParams("--strategy edge-tangent needs --r2")
        cs = edge_tangent_cuts(P, codec.parse_rat(a.r2, "--r2"))
    elif a.strategy == "inductive":
        if "cuts" not in doc:
            raise BadParams("the input polytope carries no cut system from an inductive build")
        cs = codec.cuts_from_doc(doc["cuts"], P)
    else:
        raise BadParams(f"unknown strategy {a.strategy!r}")
    cs = certify_cuts(cs)
    _emit(codec.polytope_to_doc(truncate_all(P, cs)))
    return 0


def cmd_realize(a) -> int:
    P, _ = _load_polytope(a.input)
    Q = et_realization(P, a.t, codec.parse_rat(a.r2, "--r2"))
    _emit(codec.polytope_to_doc(Q))
    return 0


def cmd_check(a) -> int:
    L, P, _ = _load_any(a.input)
    results = []
    if P is not None:
        results.append(("polytope data certified: Eulerian incidence lattice", True))
    if a.eulerian:
        results.append(("every nontrivial interval has as many odd as even ranks", is_eulerian(L)))
    if a.lattice:
        results.append(("all joins and meets exist", is_lattice(L)))
    needs_profile = a.simplicial is not None or a.simple is not None or a.two_s_two_s
    prof = simpliciality_profile(L) if needs_profile else None
    if a.simplicial is not None:
        results.append((f"{a.simplicial}-simplicial", prof.max_k_simplicial >= a.simplicial))
    if a.simple is not None:
        results.append((f"{a.simple}-simple", prof.max_h_simple >= a.simple))
    if a.two_s_two_s:
        fv = flag_vector(L)
        ok = L.dim == 4 and prof.max_k_simplicial >= 2 and prof.max_h_simple >= 2
        results.append(("2-simplicial and 2-simple", ok))
        if L.dim == 4:
            results.append(("f02 = 3 f2", fv[(0, 2)] == 3 * fv[2]))
    report = {
        "type": "report",
        "checks": [{"property": name, "passed": bool(ok)} for name, ok in results],
        "passed": all(ok for _, ok in results),
    }
    _emit(report)
    return 0 if report["passed"] else 1


def cmd_flags(a) -> int:
    L, _, _ = _load_any(a.input)
    extra = [tuple(int(x) for x in s.split(",")) for s in a.flag]
    fv = flag_vector(L, extra)
    if a.json:
        _emit({
            "type": "flags",
            "d": fv.d,
            "f": list(fv.fvector),
            "flags": {",".join(map(str, k)): v for k, v in sorted(fv.flags.items())},
        })
        return 0
    parts = [" ".join(str(x) for x in fv.fvector)]
    sel = []
    if fv.d >= 4:
        sel.append(f"f03={fv[(0, 3)]}")
    for S in extra:
        sel.append(f"f{''.join(map(str, S))}={fv[S]}")
    line = parts[0] + (" ; " + " ".join(sel) if sel else "")
    sys.stdout.write(line + "\n")
    return 0


def cmd_iso(a) -> int:
    A, _, _ = _load_any(a.first)
    B, _, _ = _load_any(a.second)
    phi = find_isomorphism(A, B)
    doc = {"type": "iso", "isomorphic": phi is not None}
    if phi is not None and a.witness:
        doc["witness"] = [phi[i] for i in range(len(A))]
    _emit(doc)
    return 0 if phi is not None else 1


def cmd_subdivide(a) -> int:
    L, _, _ = _load_any(a.input)
    E = et(L, a.t)
    if a.point:
        q = codec.chainpoint_from_doc(_read(a.point), L)
        p = pi_inverse(q, a.t, E)
        ok = pi(p) == q
        _emit({"type": "subdivide", "preimage": codec.chainpoint_to_doc(p), "round_trip": ok})
        return 0 if ok else 1
    seed = a.seed if a.seed is not None else int(os.environ.get("ET_SEED", "0"))
    rng = random.Random(seed)
    bad = 0
    for _ in range(a.random):
        q = random_chain_point(L, rng)
        p = pi_inverse(q, a.t, E)
        if pi(p) != q or sum(p.weights) != 1 or any(w < 0 for w in p.weights):
            bad += 1
    _emit({"type": "subdivide", "samples": a.random, "seed": seed, "failures": bad})
    return 0 if bad == 0 else 1


def cmd_tables(a) -> int:
    rows = []
    ns = [int(x) for x in a.n.split(",")] if a.n else None
    for name, fam in FAMILIES.items():
        dims = [4, 5, 6] if fam.needs_d else [None]
        for d in dims:
            for n in ns or [fam.min_n, fam.min_n + 1, fam.min_n + 2]:
                if n < fam.min_n:
                    continue
                rows.append({
                    "family": name,
                    "d": d,
                    "n": n,
                    "values": list(eval_family(name, n, d)),
                    "formula": fam.symbolic(d),
                    "source": fam.description,
                })
    rep = consistency_suite()
    if a.format == "json":
        _emit({
            "type": "tables",
            "rows": rows,
            "consistency": [{"check": c.name, "passed": c.ok, "detail": c.detail} for c in rep.checks],
            "notes": rep.notes,
        })
    else:
        out = sys.stdout
        out.write("family\td\tn\tvalues\tformula\tsource\n")
        for r in rows:
            d = "" if r["d"] is None else r["d"]
            out.write(f"{r['family']}\t{d}\t{r['n']}\t{tuple(r['values'])}\t{r['formula']}\t{r['source']}\n")
        out.write("\n" + "\n".join(rep.lines()) + "\n")
    return 0 if rep.ok else 1


# -- driver ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="etpoly", description="E_t constructions, truncations and flag vectors")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("generate", help="emit a polytope document")
    g.add_argument("kind", choices=list(KINDS) + ["stacked", "cross_stack"])
    g.add_argument("-d", type=int, default=4)
    g.add_argument("-k", type=int, default=None, help="hypersimplex parameter")
    g.add_argument("-n", type=int, default=1, help="stack length")
    g.add_argument("--plan", default=None, help="JSON list of facet indices for stacked builds")
    g.add_argument("--base", default="simplex", choices=["simplex", "cross"])
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("et", help="E_t of a lattice or polytope")
    e.add_argument("input", nargs="?", default="-")
    e.add_argument("-t", type=int, required=True)
    e.set_defaults(func=cmd_et)

    k = sub.add_parser("dk", help="combinatorial truncation of all k-faces")
    k.add_argument("input", nargs="?", default="-")
    k.add_argument("-k", type=int, required=True)
    k.set_defaults(func=cmd_dk)

    t = sub.add_parser("truncate", help="geometric vertex truncation")
    t.add_argument("input", nargs="?", default="-")
    t.add_argument("--cuts", default=None, help="cut system document")
    t.add_argument("--strategy", default="midpoint", choices=["midpoint", "inductive", "edge-tangent"])
    t.add_argument("--r2", default=None)
    t.set_defaults(func=cmd_truncate)

    r = sub.add_parser("realize", help="conv(P and its polar) for tangent t-faces")
    r.add_argument("input", nargs="?", default="-")
    r.add_argument("--t", type=int, required=True)
    r.add_argument("--r2", required=True)
    r.set_defaults(func=cmd_realize)

    c = sub.add_parser("check", help="certify properties; exit 0 iff all pass")
    c.add_argument("input", nargs="?", default="-")
    c.add_argument("--eulerian", action="store_true")
    c.add_argument("--lattice", action="store_true")
    c.add_argument("--simplicial", type=int, default=None)
    c.add_argument("--simple", type=int, default=None)
    c.add_argument("--2s2s", dest="two_s_two_s", action="store_true")
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("flags", help="print the f-vector and selected flag numbers")
    f.add_argument("input", nargs="?", default="-")
    f.add_argument("--flag", action="append", default=[], help="extra flag set, e.g. 0,2")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_flags)

    i = sub.add_parser("iso", help="test two documents for isomorphism")
    i.add_argument("first")
    i.add_argument("second")
    i.add_argument("--witness", action="store_true")
    i.set_defaults(func=cmd_iso)

    s = sub.add_parser("subdivide", help="invert the subdivision map")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--point", default=None, help="chain point document")
    s.add_argument("--random", type=int, default=100)
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_subdivide)

    tb = sub.add_parser("tables", help="family formulas and their consistency report")
    tb.add_argument("--format", default="tsv", choices=["tsv", "json"])
    tb.add_argument("--n", default=None, help="comma separated parameters")
    tb.set_defaults(func=cmd_tables)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EtError as exc:
        kinds = [c.__name__ for c in type(exc).__mro__ if issubclass(c, EtError)]
        sys.stderr.write(json.dumps({"error": kinds[0], "kinds": kinds, "message": str(exc)}) + "\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
