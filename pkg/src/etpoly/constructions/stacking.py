"""Stacked polytopes that stay truncatable while they grow.

The inductive build keeps a certified cut system at every step.  A new apex
over facet ``F`` is placed just beyond the truncated facet (the centroid of
the edge points of ``F`` pushed out along the facet normal) and beneath
every other facet and every existing cut.  The new vertex's cut is the
hyperplane through the points where the old cuts of the vertices of ``F``
meet the new edges.  Every step is certified exactly; the step length is
halved until the certificates hold.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..errors import (
    ApexNotBeneathOthers,
    ApexNotBeyond,
    BadParams,
    CutInvariantViolated,
    CutSearchFailed,
    EtError,
    PlacementFailed,
)
from ..geometry import (
    Hyperplane,
    Side,
    VHPolytope,
    ensure_valid,
    hyperplane_through,
    side,
    validate,
)
from ..linalg import RatVec, add, affine_rank, centroid, scale, sub, vec
from .generators import cross, simplex
from .truncation import CutSystem, certify_cuts, midpoint_cuts

MAX_HALVINGS = 60


def _ridges_of(P: VHPolytope, j: int) -> list[frozenset[int]]:
    """Vertex sets of the ridges contained in facet ``j``."""
    F = P.facet_vertices[j]
    cands = {F & G for k, G in enumerate(P.facet_vertices) if k != j}
    d = P.dim
    out = []
    for R in cands:
        if any(R < S for S in cands):
            continue
        if affine_rank([P.vertices[v] for v in R]) == d - 2:
            out.append(R)
    return sorted(out, key=sorted)


def stack(P: VHPolytope, facet: int, apex: Sequence | None = None) -> VHPolytope:
    """Convex hull of ``P`` and a point beyond exactly one facet.

    The facet is replaced by the pyramids over its ridges.  Without an
    explicit apex, ``centroid(F) + eps * a_F`` is tried with ``eps`` halved
    until the point is beneath all other facets.
    """
    P = ensure_valid(P)
    if not 0 <= facet < len(P.facets):
        raise BadParams(f"facet index {facet} out of range")
    F = P.facets[facet]
    others = [H for k, H in enumerate(P.facets) if k != facet]
    if apex is None:
        base = centroid([P.vertices[v] for v in P.facet_vertices[facet]])
        eps = Fraction(1)
        for _ in range(MAX_HALVINGS):
            cand = add(base, scale(eps, F.a))
            if all(side(H, cand) is Side.BENEATH for H in others):
                apex = cand
                break
            eps /= 2
        else:
            raise PlacementFailed("no apex found beneath the other facets")
    apex = vec(apex)
    if side(F, apex) is not Side.BEYOND:
        raise ApexNotBeyond("apex is not beyond the chosen facet")
    bad = [k for k, H in enumerate(P.facets) if k != facet and side(H, apex) is not Side.BENEATH]
    if bad:
        raise ApexNotBeneathOthers(f"apex is not beneath facets {bad}")
    verts = P.vertices + (apex,)
    new_facets = []
    for R in _ridges_of(P, facet):
        H = hyperplane_through([P.vertices[v] for v in R] + [apex], P.hull, beneath=P.center)
        if H is None:
            raise PlacementFailed("degenerate pyramid over a ridge")
        new_facets.append(H)
    return validate(
        VHPolytope(P.ambient, verts, tuple(others) + tuple(new_facets), P.hull, P.center, None, P.name + "+")
    )


@dataclass(eq=False)
class StackedFamily:
    """State of an inductive build: the polytope, its cut system, and how it
    was reached."""

    base_kind: str
    plan: list[int]
    polytope: VHPolytope
    cuts: CutSystem | None
    strategy: str = "inductive"
    log: list[str] = field(default_factory=list)


def _edge_key(v: int, w: int) -> tuple[int, int]:
    return (v, w) if v < w else (w, v)


def extend_stacked(fam: StackedFamily, facet: int) -> StackedFamily:
    """One inductive step keeping the realization truncatable."""
    P, cs = fam.polytope, fam.cuts
    if not 0 <= facet < len(P.facets):
        raise BadParams(f"facet index {facet} out of range")
    F = P.facets[facet]
    Fv = sorted(P.facet_vertices[facet])
    inside = [e for e in P.edges if e[0] in Fv and e[1] in Fv]
    base = centroid([cs.edge_points[e] for e in inside])
    blockers = [H for k, H in enumerate(P.facets) if k != facet] + list(cs.cuts.values())
    eps = Fraction(1)
    last = "apex never beneath all other facets and cuts"
    for _ in range(MAX_HALVINGS):
        apex = add(base, scale(eps, F.a))
        eps /= 2
        if side(F, apex) is not Side.BEYOND:
            last = "apex not beyond the truncated facet"
            continue
        if any(side(H, apex) is not Side.BENEATH for H in blockers):
            continue
        try:
            Q = stack(P, facet, apex)
        except EtError as exc:
            last = f"stacking rejected: {exc}"
            continue
        a = len(P.vertices)
        pts = {}
        for w in Fv:
            p = cs.cuts[w].meet_segment(Q.vertices[a], Q.vertices[w])
            if p is None:
                break
            pts[_edge_key(w, a)] = p
        else:
            cut = hyperplane_through(list(pts.values()), Q.hull, beneath=Q.center)
            if cut is None or side(cut, Q.vertices[a]) is not Side.BEYOND:
                last = "points on the new edges do not span a cut"
                continue
            cuts = dict(cs.cuts)
            cuts[a] = cut
            edge_points = dict(cs.edge_points)
            edge_points.update(pts)
            try:
                new_cs = certify_cuts(CutSystem(Q, cuts, edge_points, cs.strategy))
            except CutInvariantViolated as exc:
                last = str(exc)
                continue
            return StackedFamily(
                fam.base_kind, fam.plan + [facet], Q, new_cs, fam.strategy,
                fam.log + [f"facet {facet}: eps={eps * 2}"],
            )
        last = "an old cut misses a new edge"
    raise PlacementFailed(f"stacking on facet {facet}: {last}")


def seed_family(base: str, d: int = 4) -> StackedFamily:
    if base == "simplex":
        P = simplex(d)
    elif base == "cross":
        P = cross(d)
    else:
        raise BadParams(f"unknown base {base!r}")
    return StackedFamily(base, [], P, midpoint_cuts(P))


def build_truncatable_stacked(d: int, plan: Sequence[int], base: str = "simplex") -> StackedFamily:
    """Stack onto the listed facets (indices into the current facet list),
    starting from the regular simplex (or cross polytope) with midpoint cuts."""
    if d < 3:
        raise BadParams("stacked builds need d >= 3")
    fam = seed_family(base, d)
    for j in plan:
        fam = extend_stacked(fam, int(j))
    return fam


# -- stacks of cross polytopes ------------------------------------------


def _layer_facets(lower: Sequence[RatVec], upper: Sequence[RatVec], hull, center) -> list[tuple[int, Hyperplane]]:
    """Facets of the cross polytope spanned by two antipodal tuples, except
    the facet spanned by ``lower`` (the glued one); returned with the subset
    mask of upper vertices used."""
    n = len(lower)
    out = []
    for mask in range(1, 1 << n):
        pts = [upper[i] if mask >> i & 1 else lower[i] for i in range(n)]
        H = hyperplane_through(pts, hull, beneath=center)
        if H is None:
            raise PlacementFailed("degenerate facet in a cross-polytope layer")
        out.append((mask, H))
    return out


def _glue_layer(P: VHPolytope, top: list[int], new_pts: list[RatVec]) -> VHPolytope:
    """Glue the cross polytope ``conv(top layer, new_pts)`` onto the facet
    spanned by the top layer (``new_pts[i]`` is antipodal to ``top[i]``)."""
    Fset = frozenset(top)
    j = P.facet_vertices.index(Fset)
    lower = [P.vertices[v] for v in top]
    lateral = [H for _, H in _layer_facets(lower, new_pts, P.hull, P.center)]
    facets = tuple(H for k, H in enumerate(P.facets) if k != j) + tuple(lateral)
    return validate(VHPolytope(P.ambient, P.vertices + tuple(new_pts), facets, P.hull, P.center, None, P.name))


def _layer_cuts(P: VHPolytope, cs: CutSystem, top: list[int], new_ids: list[int]) -> CutSystem | None:
    """Symmetric cuts for a freshly glued layer: the cut at new vertex
    ``n_j`` passes through the old cuts' points on edges ``[n_j, w_i]``
    (``i != j``) and the midpoints of the edges ``[n_j, n_k]``."""
    cuts = dict(cs.cuts)
    pts: dict[tuple[int, int], RatVec] = dict(cs.edge_points)
    for j, nj in enumerate(new_ids):
        mine = []
        for i, wi in enumerate(top):
            if i == j:
                continue
            p = cs.cuts[wi].meet_segment(P.vertices[nj], P.vertices[wi])
            if p is None:
                return None
            pts[_edge_key(wi, nj)] = p
            mine.append(p)
        for k, nk in enumerate(new_ids):
            if k != j:
                mid = scale(Fraction(1, 2), add(P.vertices[nj], P.vertices[nk]))
                pts[_edge_key(nj, nk)] = mid
                mine.append(mid)
        H = hyperplane_through(mine, P.hull, beneath=P.center)
        if H is None or side(H, P.vertices[nj]) is not Side.BEYOND:
            return None
        cuts[nj] = H
    try:
        return certify_cuts(CutSystem(P, cuts, pts, "inductive"))
    except CutInvariantViolated:
        return None


def build_cross_stack(n: int, d: int = 4) -> StackedFamily:
    """A stack of ``n`` cross polytopes with the symmetries of a regular
    ``(d-1)``-simplex.

    Level 0 is ``-e_i`` and level 1 is ``e_i``.  Each further level is the
    previous one shrunk towards its centroid ``c`` and lifted along the
    facet normal: ``c + eps * u - delta * (w - c)``, so that new vertex
    ``i`` is antipodal to old vertex ``i`` in the new cross polytope.  The
    parameters are halved until the glued body certifies and a symmetric
    cut system for it exists.  When no cut system is found the polytope is
    still returned with ``cuts=None`` and ``strategy="none"``.
    """
    if d != 4:
        raise BadParams("cross stacks are implemented for d = 4")
    if n < 1:
        raise BadParams("n must be at least 1")
    fam = seed_family("cross", d)
    P, cs = fam.polytope, fam.cuts
    top = [P.vertices.index(tuple(Fraction(int(i == j)) for j in range(d))) for i in range(d)]
    log = []
    with_cuts = True
    for level in range(2, n + 1):
        j = P.facet_vertices.index(frozenset(top))
        F = P.facets[j]
        w = [P.vertices[v] for v in top]
        c = centroid(w)
        found = None
        for delta in (Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)):
            eps = Fraction(1)
            for _ in range(MAX_HALVINGS):
                new_pts = [add(add(c, scale(eps, F.a)), scale(-delta, sub(wi, c))) for wi in w]
                eps /= 2
                blockers = [H for k, H in enumerate(P.facets) if k != j]
                if with_cuts:
                    blockers += list(cs.cuts.values())
                if any(side(H, p) is not Side.BENEATH for H in blockers for p in new_pts):
                    continue
                if any(side(F, p) is not Side.BEYOND for p in new_pts):
                    continue
                try:
                    Q = _glue_layer(P, top, new_pts)
                except EtError:
                    continue
                new_ids = list(range(len(P.vertices), len(P.vertices) + d))
                new_cs = _layer_cuts(Q, cs, top, new_ids) if with_cuts else None
                if with_cuts and new_cs is None:
                    continue
                found = (Q, new_cs, new_ids, f"level {level}: delta={delta}, eps={eps * 2}")
                break
            if found:
                break
        if found is None and with_cuts:
            with_cuts = False
            log.append(f"level {level}: no symmetric cut system; continuing without cuts")
            cs = None
            # retry the same level without the cut constraints
            found = _place_without_cuts(P, top, j)
        if found is None:
            raise PlacementFailed(f"could not glue cross polytope level {level}")
        P, cs, top, note = found
        log.append(note)
    strategy = "midpoint" if n == 1 else ("inductive" if cs is not None else "none")
    if cs is not None and n > 1:
        try:
            cs = midpoint_cuts(P)
            strategy = "midpoint"
        except CutSearchFailed:
            pass
    return StackedFamily("cross-stack", [n], P, cs, strategy, log)


def _place_without_cuts(P: VHPolytope, top: list[int], j: int):
    F = P.facets[j]
    w = [P.vertices[v] for v in top]
    c = centroid(w)
    blockers = [H for k, H in enumerate(P.facets) if k != j]
    eps = Fraction(1)
    for _ in range(MAX_HALVINGS):
        new_pts = [add(add(c, scale(eps, F.a)), scale(-Fraction(1, 4), sub(wi, c))) for wi in w]
        eps /= 2
        if any(side(H, p) is not Side.BENEATH for H in blockers for p in new_pts):
            continue
        try:
            Q = _glue_layer(P, top, new_pts)
        except EtError:
            continue
        ids = list(range(len(P.vertices), len(P.vertices) + len(w)))
        return Q, None, ids, f"eps={eps * 2} without cuts"
    return None


def cross_with_stacked_facets(k: int, facets: Sequence[int] | None = None) -> StackedFamily:
    """The 4-dimensional cross polytope with simplices stacked onto ``k`` of
    its facets, built inductively so that it stays truncatable.

    By default the first ``k`` original facets are used; each original
    facet keeps its position at the front of the facet list until it is
    stacked on, so index 0 always names the next untouched original facet.
    """
    plan = list(facets) if facets is not None else [0] * k
    return build_truncatable_stacked(4, plan, base="cross")
