"""Simultaneous vertex truncation.

A cut system assigns to every vertex ``v`` a halfspace that excludes ``v``
and keeps every other vertex, such that for each edge ``vw`` the two cuts
meet the edge in one common point ``u_e``.  Cutting all vertices then leaves
exactly one point per edge; those points are the vertices of the truncated
polytope and the cuts become new facets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import CutInvariantViolated, CutSearchFailed, NotTangent
from ..geometry import (
    Hyperplane,
    Side,
    VHPolytope,
    ensure_valid,
    hyperplane_through,
    is_t_tangent,
    side,
    validate,
)
from ..linalg import RatVec, add, dot, scale, sub


@dataclass(eq=False)
class CutSystem:
    """Per-vertex cutting halfspaces and the per-edge points they share.

    ``cuts[v]`` is oriented so that ``v`` is beyond it.  ``edge_points``
    is keyed by sorted vertex-index pairs.
    """

    polytope: VHPolytope
    cuts: dict[int, Hyperplane]
    edge_points: dict[tuple[int, int], RatVec] = field(default_factory=dict)
    strategy: str = ""


def certify_cuts(cs: CutSystem) -> CutSystem:
    """Raise :class:`CutInvariantViolated` naming the first offending vertex or edge."""
    P = ensure_valid(cs.polytope)
    n = len(P.vertices)
    if sorted(cs.cuts) != list(range(n)):
        raise CutInvariantViolated("cuts must be given for every vertex")
    for v, H in cs.cuts.items():
        if side(H, P.vertices[v]) is not Side.BEYOND:
            raise CutInvariantViolated(f"vertex {v} is not beyond its own cut")
        for w in range(n):
            if w != v and side(H, P.vertices[w]) is not Side.BENEATH:
                raise CutInvariantViolated(f"cut of vertex {v} does not keep vertex {w} strictly inside")
    for v, w in P.edges:
        pv, pw = P.vertices[v], P.vertices[w]
        a = cs.cuts[v].meet_segment(pv, pw)
        b = cs.cuts[w].meet_segment(pv, pw)
        if a is None or b is None or a != b:
            raise CutInvariantViolated(f"cuts of {v} and {w} meet edge {(v, w)} in different points")
        stored = cs.edge_points.get((v, w))
        if stored is not None and stored != a:
            raise CutInvariantViolated(f"stored point of edge {(v, w)} is not on the cuts")
        cs.edge_points[(v, w)] = a
    extra = set(cs.edge_points) - set(P.edges)
    for e in extra:
        del cs.edge_points[e]
    cs.polytope = P
    return cs


def truncate_all(P: VHPolytope, cs: CutSystem) -> VHPolytope:
    """The vertex truncation: vertices are the edge points, facets are the
    old facets followed by the cuts (in vertex order)."""
    P = ensure_valid(P)
    if cs.polytope is not P:
        cs = CutSystem(P, dict(cs.cuts), dict(cs.edge_points), cs.strategy)
    certify_cuts(cs)
    verts = tuple(cs.edge_points[e] for e in P.edges)
    facets = tuple(P.facets) + tuple(cs.cuts[v] for v in range(len(P.vertices)))
    return validate(VHPolytope(P.ambient, verts, facets, P.hull, P.center, None, f"D1({P.name})"))


def cuts_from_edge_points(P: VHPolytope, points: dict[tuple[int, int], RatVec], strategy: str) -> CutSystem:
    """For each vertex, the hyperplane through the chosen points on its edges."""
    P = ensure_valid(P)
    cuts = {}
    for v in range(len(P.vertices)):
        pts = [points[e] for e in P.edges if v in e]
        H = hyperplane_through(pts, P.hull, beneath=P.center)
        if H is None or side(H, P.vertices[v]) is not Side.BEYOND:
            raise CutSearchFailed(f"no valid cut through the chosen edge points at vertex {v}")
        cuts[v] = H
    cs = CutSystem(P, cuts, dict(points), strategy)
    try:
        return certify_cuts(cs)
    except CutInvariantViolated as exc:
        raise CutSearchFailed(str(exc)) from exc


def midpoint_cuts(P: VHPolytope) -> CutSystem:
    """Cut each vertex through the midpoints of its edges, when these are coplanar."""
    P = ensure_valid(P)
    mids = {
        (v, w): scale(Fraction(1, 2), add(P.vertices[v], P.vertices[w])) for v, w in P.edges
    }
    return cuts_from_edge_points(P, mids, "midpoint")


def edge_tangent_cuts(P: VHPolytope, r2) -> CutSystem:
    """Cuts for a polytope whose edges touch a sphere: the cut at ``v`` is
    the polar hyperplane ``<v - c, y - c> = r2``, which passes through the
    touching points of all edges at ``v``."""
    P = ensure_valid(P)
    ok, points = is_t_tangent(P, 1, r2)
    if not ok:
        raise NotTangent("edges are not all tangent to the sphere")
    L = P.lattice
    c = P.center
    edge_pts = {tuple(sorted(L.labels[fid])): x for fid, x in points.items()}
    cuts = {}
    for v, pv in enumerate(P.vertices):
        a = sub(pv, c)
        cuts[v] = Hyperplane(a, Fraction(r2) + dot(a, c))
    return certify_cuts(CutSystem(P, cuts, edge_pts, "edge-tangent"))
