"""Exact polytopes given by vertices, facets and incidence.

A :class:`VHPolytope` carries both descriptions.  No convex hull is ever
computed: the facets come from the construction, and :func:`validate`
certifies that the two descriptions agree and that the incidence closes up
to an Eulerian face lattice.  That last test is a strong necessary condition
for the data to describe a polytope, not a full proof.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CenterNotInterior,
    DanglingFacet,
    DegenerateFace,
    DimensionMismatch,
    NotEulerianIncidence,
    NotGraded,
    VertexOutside,
    BadParams,
)
from .faces import face_lattice_from_incidence
from .linalg import (
    Q,
    RatVec,
    add,
    affine_rank,
    centroid,
    dot,
    independent_rows,
    nullspace,
    project_onto_span,
    rank,
    scale,
    sub,
    vec,
)
from .lp import in_relative_interior
from .poset import GradedLattice, is_eulerian


class Side(enum.Enum):
    BEYOND = "beyond"
    BENEATH = "beneath"
    ON = "on"


@dataclass(frozen=True)
class Hyperplane:
    """The closed halfspace ``<a, x> <= b``; the hyperplane is its boundary."""

    a: RatVec
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", vec(self.a))
        object.__setattr__(self, "b", Q(self.b))
        if all(x == 0 for x in self.a):
            raise BadParams("hyperplane normal must be nonzero")

    def value(self, p: Sequence[Fraction]) -> Fraction:
        if len(p) != len(self.a):
            raise DimensionMismatch(f"point has {len(p)} coordinates, hyperplane {len(self.a)}")
        return dot(self.a, p) - self.b

    def normalized(self) -> "Hyperplane":
        """Scale so that the first nonzero coefficient of ``(a, b)`` is +-1
        while keeping the orientation."""
        lead = next(x for x in self.a if x != 0)
        s = abs(lead)
        return Hyperplane(tuple(x / s for x in self.a), self.b / s)

    def flipped(self) -> "Hyperplane":
        return Hyperplane(tuple(-x for x in self.a), -self.b)

    def meet_segment(self, p: Sequence[Fraction], q: Sequence[Fraction]) -> RatVec | None:
        """Point where the segment ``[p, q]`` crosses the hyperplane, or None
        if both ends are strictly on the same side or the segment lies in it."""
        vp, vq = self.value(p), self.value(q)
        if vp == vq:
            return None
        lam = vp / (vp - vq)
        if not 0 <= lam <= 1:
            return None
        return add(p, scale(lam, sub(q, p)))


def side(H: Hyperplane, p: Sequence[Fraction]) -> Side:
    v = H.value(vec(p))
    if v > 0:
        return Side.BEYOND
    if v < 0:
        return Side.BENEATH
    return Side.ON


def hyperplane_through(
    points: Sequence[Sequence[Fraction]],
    hull: Sequence[Hyperplane] = (),
    beneath: Sequence[Fraction] | None = None,
) -> Hyperplane | None:
    """The unique hyperplane (within the affine hull given by ``hull``)
    through ``points``, oriented so that ``beneath`` is strictly inside.

    Returns None when the points do not determine a unique hyperplane
    (too few, affinely dependent, or not coplanar).
    """
    m = len(points[0])
    rows = [list(p) + [Fraction(-1)] for p in points]
    free = nullspace(rows, m + 1)
    # directions (a, b) that are multiples of hull equations are not hyperplanes
    hull_rows = [list(h.a) + [h.b] for h in hull]
    base_rank = rank(hull_rows) if hull_rows else 0
    if rank(hull_rows + [list(f) for f in free]) - base_rank != 1:
        return None
    cand = None
    for f in free:
        if rank(hull_rows + [list(f)]) > base_rank:
            cand = f
            break
    a, b = cand[:m], cand[m]
    if hull:
        a = _project_normal(a, hull)
        if all(x == 0 for x in a):
            return None
        b = dot(a, points[0])
    H = Hyperplane(a, b)
    if beneath is not None:
        s = H.value(beneath)
        if s == 0:
            return None
        if s > 0:
            H = H.flipped()
    return H.normalized()


def _hull_normals(hull: Sequence[Hyperplane]) -> list[RatVec]:
    return independent_rows([h.a for h in hull])


def _project_normal(a: Sequence[Fraction], hull: Sequence[Hyperplane]) -> RatVec:
    """Component of ``a`` orthogonal to the hull equations' normals."""
    normals = _hull_normals(hull)
    if not normals:
        return tuple(a)
    return sub(a, project_onto_span(a, normals))


@dataclass(eq=False)
class VHPolytope:
    """Vertices, facet halfspaces and (derived) incidence of a polytope.

    ``hull`` lists equations ``<a, x> = b`` (stored as :class:`Hyperplane`)
    cutting out the affine hull when it is not the whole space.  ``center``
    is the reference point for polarity; ``r2`` an optional squared radius.
    """

    ambient: int
    vertices: tuple[RatVec, ...]
    facets: tuple[Hyperplane, ...]
    hull: tuple[Hyperplane, ...] = ()
    center: RatVec | None = None
    r2: Fraction | None = None
    name: str = ""
    certified: bool = field(default=False, compare=False)

    def __post_init__(self):
        self.vertices = tuple(vec(v) for v in self.vertices)
        self.facets = tuple(self.facets)
        self.hull = tuple(self.hull)
        if self.center is not None:
            self.center = vec(self.center)
        if self.r2 is not None:
            self.r2 = Q(self.r2)

    @property
    def dim(self) -> int:
        return self.ambient - len(_hull_normals(self.hull))

    @cached_property
    def incidence(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(H.value(v) == 0 for H in self.facets) for v in self.vertices)

    @cached_property
    def facet_vertices(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(i for i, row in enumerate(self.incidence) if row[j])
            for j in range(len(self.facets))
        )

    @cached_property
    def vertex_facets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(j for j, hit in enumerate(row) if hit) for row in self.incidence)

    @cached_property
    def lattice(self) -> GradedLattice:
        """Face lattice; element labels are frozensets of vertex indices."""
        return face_lattice_from_incidence(self.incidence)

    def faces(self, dim: int) -> list[frozenset[int]]:
        """Vertex sets of all faces of dimension ``dim``."""
        L = self.lattice
        return [L.labels[i] for i in L.level(dim + 1)]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(tuple(sorted(e)) for e in self.faces(1)))

    def fvector(self) -> tuple[int, ...]:
        L = self.lattice
        return tuple(len(L.level(r)) for r in range(1, L.length))


def validate(P: VHPolytope) -> VHPolytope:
    """Check every invariant and return a certified copy.

    Facet normals are projected into the direction space of the affine
    hull, incidence is recomputed, and the face lattice is built and checked
    to be Eulerian with faces of the right dimensions.
    """
    m = P.ambient
    for v in P.vertices:
        if len(v) != m:
            raise DimensionMismatch(f"vertex {v} has {len(v)} coordinates, expected {m}")
    for H in (*P.facets, *P.hull):
        if len(H.a) != m:
            raise DimensionMismatch("hyperplane dimension differs from the ambient dimension")
    if P.center is not None and len(P.center) != m:
        raise DimensionMismatch("center dimension differs from the ambient dimension")
    if not P.vertices:
        raise VertexOutside("no vertices")
    for v in P.vertices:
        for E in P.hull:
            if E.value(v) != 0:
                raise VertexOutside(f"vertex {v} is off the affine hull")
    facets = []
    for H in P.facets:
        a = _project_normal(H.a, P.hull) if P.hull else H.a
        if all(x == 0 for x in a):
            raise DanglingFacet(f"facet {H} is parallel to the affine hull")
        facets.append(Hyperplane(a, _shift_offset(H, a, P.vertices[0])))
    for v in P.vertices:
        for H in facets:
            if H.value(v) > 0:
                raise VertexOutside(f"vertex {v} violates facet {H}")
    d = m - len(_hull_normals(P.hull))
    if len(set(P.vertices)) != len(P.vertices):
        raise NotEulerianIncidence("repeated vertex")
    if len(set(H.normalized() for H in facets)) != len(facets):
        raise NotEulerianIncidence("repeated facet")
    if affine_rank(list(P.vertices)) != d:
        raise NotEulerianIncidence(f"vertices span less than dimension {d}")
    Q_ = VHPolytope(m, P.vertices, tuple(facets), P.hull, P.center, P.r2, P.name)
    for j, fv in enumerate(Q_.facet_vertices):
        pts = [P.vertices[i] for i in fv]
        if len(pts) < d or affine_rank(pts) != d - 1:
            raise DanglingFacet(f"facet {j} is supported by too few vertices")
    for i, vf in enumerate(Q_.vertex_facets):
        if len(vf) < d:
            raise NotEulerianIncidence(f"vertex {i} lies on only {len(vf)} facets")
    try:
        L = Q_.lattice
    except NotGraded as exc:
        raise NotEulerianIncidence(f"incidence does not close to a graded lattice: {exc}") from exc
    if L.length != d + 1:
        raise NotEulerianIncidence(f"face lattice has length {L.length}, expected {d + 1}")
    if len(L.level(1)) != len(P.vertices) or any(len(L.labels[a]) != 1 for a in L.level(1)):
        raise NotEulerianIncidence("some vertex is not a face")
    if len(L.level(d)) != len(facets):
        raise NotEulerianIncidence("some facet column is not a maximal face")
    for i, lab in enumerate(L.labels):
        if i in (L.bottom, L.top):
            continue
        if affine_rank([P.vertices[v] for v in lab]) != L.ranks[i] - 1:
            raise NotEulerianIncidence(f"face {sorted(lab)} has the wrong dimension")
    if not is_eulerian(L):
        raise NotEulerianIncidence("face lattice is not Eulerian")
    if Q_.center is None:
        Q_.center = centroid(list(P.vertices))
    Q_.certified = True
    return Q_


def _shift_offset(H: Hyperplane, a: RatVec, p: RatVec) -> Fraction:
    """Offset for the projected normal ``a`` giving the same halfspace as
    ``H`` on the affine hull (``p`` is any point of the hull)."""
    return dot(a, p) - H.value(p)


def ensure_valid(P: VHPolytope) -> VHPolytope:
    return P if P.certified else validate(P)


def polar(P: VHPolytope, r2) -> VHPolytope:
    """Polar about ``P.center`` with squared radius ``r2`` inside the affine hull.

    Facet ``<a, y> <= b`` becomes the vertex ``c + r2 a / (b - <a, c>)``;
    vertex ``v`` becomes the facet ``<v - c, y - c> <= r2``.  Vertex ``j`` of
    the result corresponds to facet ``j`` of ``P`` and vice versa.
    """
    P = ensure_valid(P)
    r2 = Q(r2)
    if r2 <= 0:
        raise BadParams("r2 must be positive")
    c = P.center
    verts = []
    for H in P.facets:
        gap = H.b - dot(H.a, c)
        if gap <= 0:
            raise CenterNotInterior(f"center is not strictly beneath facet {H}")
        verts.append(add(c, scale(r2 / gap, H.a)))
    facets = []
    for v in P.vertices:
        a = sub(v, c)
        facets.append(Hyperplane(a, r2 + dot(a, c)))
    return validate(VHPolytope(P.ambient, tuple(verts), tuple(facets), P.hull, c, r2, f"polar({P.name})"))


def foot_of_perpendicular(c: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> RatVec:
    """Closest point to ``c`` on the affine hull of ``points``."""
    if not points:
        raise DegenerateFace("empty face")
    p0 = vec(points[0])
    basis = independent_rows([sub(p, p0) for p in points[1:]])
    return add(p0, project_onto_span(sub(c, p0), basis))


def tangency_point(P: VHPolytope, face: Iterable[int], r2) -> RatVec | None:
    """The point where the sphere of squared radius ``r2`` about the center
    touches the face, if it touches at a single relative-interior point."""
    P = ensure_valid(P)
    r2 = Q(r2)
    ids = sorted(face)
    if not ids:
        raise DegenerateFace("empty face")
    pts = [P.vertices[i] for i in ids]
    x = foot_of_perpendicular(P.center, pts)
    if dot(sub(x, P.center), sub(x, P.center)) != r2:
        return None
    if len(pts) == 1:
        return x
    return x if in_relative_interior(x, pts) else None


def distance2_to_hyperplane(c: Sequence[Fraction], H: Hyperplane) -> Fraction:
    v = H.value(c)
    return v * v / dot(H.a, H.a)


def is_t_tangent(P: VHPolytope, t: int, r2) -> tuple[bool, dict[int, RatVec]]:
    """Whether every ``t``-face touches the sphere in a relative-interior
    point, every vertex is strictly outside (``t >= 1``), and every facet
    hyperplane strictly cuts the sphere (``t <= d - 2``).

    Returns the verdict and the tangency points keyed by face id in
    ``P.lattice``.
    """
    P = ensure_valid(P)
    r2 = Q(r2)
    d = P.dim
    c = P.center
    L = P.lattice
    points: dict[int, RatVec] = {}
    if not 0 <= t <= d - 1:
        return False, points
    ok = True
    for fid in L.level(t + 1):
        x = tangency_point(P, L.labels[fid], r2)
        if x is None:
            ok = False
        else:
            points[fid] = x
    if t >= 1 and any(dot(sub(v, c), sub(v, c)) <= r2 for v in P.vertices):
        ok = False
    if t <= d - 2 and any(distance2_to_hyperplane(c, H) >= r2 for H in P.facets):
        ok = False
    return ok, points
