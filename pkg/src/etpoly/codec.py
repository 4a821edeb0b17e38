"""JSON documents for lattices, polytopes, cut systems and chain points.

Rationals are written as ``"p/q"`` strings (integers as ``"p"``).  Every
document carries a ``"type"`` field; lattice documents without one are still
recognised by their ``"elements"`` list.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .errors import EtError, ParseError
from .et import EtElement, EtLattice, EtPoset
from .geometry import Hyperplane, VHPolytope, validate
from .poset import GradedLattice, GradedPoset, is_lattice
from .subdivision import ChainPoint

_RAT = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


def rat_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(s: Any, where: str = "") -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise ParseError(f"{where}: expected a rational string, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RAT.match(s):
        raise ParseError(f"{where}: malformed rational {s!r}")
    try:
        return Fraction(s.replace(" ", ""))
    except ZeroDivisionError as exc:
        raise ParseError(f"{where}: zero denominator in {s!r}") from exc


def _vec_out(v) -> list[str]:
    return [rat_to_str(x) for x in v]


def _vec_in(v, where: str) -> tuple[Fraction, ...]:
    if not isinstance(v, list):
        raise ParseError(f"{where}: expected a list")
    return tuple(parse_rat(x, f"{where}[{k}]") for k, x in enumerate(v))


def _field(doc: dict, key: str, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    return doc[key]


# -- lattices -------------------------------------------------------------


def _label_out(lab) -> Any:
    if isinstance(lab, EtElement):
        return lab.to_json()
    if isinstance(lab, frozenset):
        return {"kind": "face", "vertices": sorted(lab)}
    return lab


def _label_in(obj, where: str):
    if isinstance(obj, dict):
        kind = obj.get("kind")
        if kind == "face":
            return frozenset(int(v) for v in _field(obj, "vertices", where))
        if kind == "interval":
            return EtElement.interval(int(_field(obj, "x", where)), int(_field(obj, "z", where)))
        if kind == "singleton":
            return EtElement.singleton(int(_field(obj, "y", where)))
        if kind == "empty":
            return EtElement.empty()
        raise ParseError(f"{where}: unknown label kind {kind!r}")
    if isinstance(obj, list):
        return tuple(obj)
    return obj


def lattice_to_doc(P: GradedPoset) -> dict:
    doc = {
        "type": "lattice",
        "length": P.length,
        "bottom": P.bottom,
        "top": P.top,
        "elements": [
            {"id": i, "rank": P.ranks[i], "covers": list(P.lower[i])}
            | ({"label": _label_out(P.labels[i])} if P.labels is not None else {})
            for i in range(len(P))
        ],
    }
    if isinstance(P, EtPoset) and P.base is not None:
        doc["t"] = P.t
        doc["base"] = lattice_to_doc(P.base)
    return doc


def lattice_from_doc(doc: dict) -> GradedPoset:
    """Rebuild a poset; gradedness errors from validation propagate as is."""
    where = "lattice"
    elements = _field(doc, "elements", where)
    if not isinstance(elements, list):
        raise ParseError("lattice.elements: expected a list")
    n = len(elements)
    ranks = [0] * n
    pairs = []
    labels = [None] * n
    has_labels = False
    for k, el in enumerate(elements):
        w = f"lattice.elements[{k}]"
        i = _field(el, "id", w)
        if not isinstance(i, int) or not 0 <= i < n:
            raise ParseError(f"{w}.id: ids must be 0..{n - 1}")
        ranks[i] = int(_field(el, "rank", w))
        for c in _field(el, "covers", w):
            if not isinstance(c, int) or not 0 <= c < n:
                raise ParseError(f"{w}.covers: bad element id {c!r}")
            pairs.append((c, i))
        if "label" in el:
            has_labels = True
            labels[i] = _label_in(el["label"], f"{w}.label")
    if sorted(_field(e, "id", "lattice.elements") for e in elements) != list(range(n)):
        raise ParseError("lattice.elements: ids must be exactly 0..n-1")
    labels = labels if has_labels else None
    if "base" in doc:
        base = lattice_from_doc(doc["base"])
        cls = EtLattice if isinstance(base, GradedLattice) else EtPoset
        P = cls.from_covers(ranks, pairs, labels, base=base, t=int(_field(doc, "t", where)))
    else:
        P = GradedPoset.from_covers(ranks, pairs, labels)
        if is_lattice(P):
            P = GradedLattice.from_covers(ranks, pairs, labels)
    for key in ("bottom", "top", "length"):
        if key in doc and doc[key] != getattr(P, key):
            raise ParseError(f"lattice.{key}: document says {doc[key]}, structure says {getattr(P, key)}")
    return P


# -- polytopes and cuts ---------------------------------------------------


def hyperplane_to_doc(H: Hyperplane) -> dict:
    return {"a": _vec_out(H.a), "b": rat_to_str(H.b)}


def hyperplane_from_doc(doc, where: str) -> Hyperplane:
    try:
        return Hyperplane(_vec_in(_field(doc, "a", where), f"{where}.a"), parse_rat(_field(doc, "b", where), f"{where}.b"))
    except ParseError:
        raise
    except EtError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def polytope_to_doc(P: VHPolytope, cuts=None) -> dict:
    doc = {
        "type": "polytope",
        "name": P.name,
        "ambient": P.ambient,
        "hull": [_vec_out(h.a) + [rat_to_str(h.b)] for h in P.hull],
        "vertices": [_vec_out(v) for v in P.vertices],
        "facets": [hyperplane_to_doc(H) for H in P.facets],
    }
    if P.center is not None:
        doc["center"] = _vec_out(P.center)
    if P.r2 is not None:
        doc["r2"] = rat_to_str(P.r2)
    if cuts is not None:
        doc["cuts"] = cuts_to_doc(cuts)
    return doc


def polytope_from_doc(doc: dict, certify: bool = True) -> VHPolytope:
    where = "polytope"
    m = _field(doc, "ambient", where)
    if not isinstance(m, int) or m < 1:
        raise ParseError("polytope.ambient: expected a positive integer")
    hull = []
    for k, row in enumerate(doc.get("hull", [])):
        vals = _vec_in(row, f"polytope.hull[{k}]")
        if len(vals) != m + 1:
            raise ParseError(f"polytope.hull[{k}]: expected {m + 1} entries")
        try:
            hull.append(Hyperplane(vals[:-1], vals[-1]))
        except EtError as exc:
            raise ParseError(f"polytope.hull[{k}]: {exc}") from exc
    verts = tuple(_vec_in(v, f"polytope.vertices[{k}]") for k, v in enumerate(_field(doc, "vertices", where)))
    facets = tuple(hyperplane_from_doc(f, f"polytope.facets[{k}]") for k, f in enumerate(_field(doc, "facets", where)))
    center = _vec_in(doc["center"], "polytope.center") if "center" in doc else None
    r2 = parse_rat(doc["r2"], "polytope.r2") if "r2" in doc else None
    P = VHPolytope(m, verts, facets, tuple(hull), center, r2, doc.get("name", ""))
    return validate(P) if certify else P


def cuts_to_doc(cs) -> dict:
    return {
        "type": "cuts",
        "strategy": cs.strategy,
        "cuts": [{"vertex": v} | hyperplane_to_doc(H) for v, H in sorted(cs.cuts.items())],
        "edge_points": [{"edge": list(e), "point": _vec_out(p)} for e, p in sorted(cs.edge_points.items())],
    }


def cuts_from_doc(doc: dict, polytope: VHPolytope):
    from .constructions.truncation import CutSystem

    cuts = {}
    for k, c in enumerate(_field(doc, "cuts", "cuts")):
        w = f"cuts.cuts[{k}]"
        cuts[int(_field(c, "vertex", w))] = hyperplane_from_doc(c, w)
    pts = {}
    for k, e in enumerate(doc.get("edge_points", [])):
        w = f"cuts.edge_points[{k}]"
        edge = _field(e, "edge", w)
        if not isinstance(edge, list) or len(edge) != 2:
            raise ParseError(f"{w}.edge: expected a vertex pair")
        pts[tuple(sorted(int(v) for v in edge))] = _vec_in(_field(e, "point", w), f"{w}.point")
    return CutSystem(polytope, cuts, pts, doc.get("strategy", "file"))


# -- chain points -----------------------------------------------------------


def chainpoint_to_doc(p: ChainPoint) -> dict:
    return {"type": "chainpoint", "chain": list(p.chain), "weights": [rat_to_str(w) for w in p.weights]}


def chainpoint_from_doc(doc: dict, poset: GradedPoset) -> ChainPoint:
    chain = _field(doc, "chain", "chainpoint")
    weights = [parse_rat(w, f"chainpoint.weights[{k}]") for k, w in enumerate(_field(doc, "weights", "chainpoint"))]
    return ChainPoint(poset, tuple(int(c) for c in chain), tuple(weights))


# -- generic ------------------------------------------------------------------


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    return doc


def doc_type(doc: dict) -> str:
    if "type" in doc:
        return doc["type"]
    if "elements" in doc:
        return "lattice"
    if "vertices" in doc:
        return "polytope"
    raise ParseError("cannot tell what kind of document this is")
