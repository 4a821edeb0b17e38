"""Realizing ``E_t`` of a polytope whose ``t``-faces touch a sphere.

If every ``t``-face ``F`` of ``P`` touches the sphere at a relative-interior
point ``x_F``, then ``conv(P u P*)`` (with ``P*`` the polar for that sphere)
has one facet per ``t``-face: the tangent hyperplane at ``x_F``.  It
contains ``F`` and the polar face of ``F``, and nothing else.
"""
from __future__ import annotations

from ..errors import FacetViolated, NotTangent
from ..geometry import Hyperplane, VHPolytope, ensure_valid, is_t_tangent, polar, validate
from ..linalg import Q, dot, sub


def et_realization(P: VHPolytope, t: int, r2) -> VHPolytope:
    """Vertices of ``P`` first, then the polar vertices (one per facet of
    ``P``, in facet order); facets follow the ``t``-faces of ``P`` in
    lattice order."""
    P = ensure_valid(P)
    r2 = Q(r2)
    ok, points = is_t_tangent(P, t, r2)
    if not ok:
        raise NotTangent(f"the {t}-faces are not all tangent for r2 = {r2}")
    star = polar(P, r2)
    c = P.center
    nv = len(P.vertices)
    verts = P.vertices + star.vertices
    L = P.lattice
    facets = []
    for fid in L.level(t + 1):
        x = points[fid]
        a = sub(x, c)
        H = Hyperplane(a, r2 + dot(a, c))
        face = L.labels[fid]
        expected = set(face)
        expected |= {nv + j for j, fv in enumerate(P.facet_vertices) if face <= fv}
        hit = set()
        for i, v in enumerate(verts):
            val = H.value(v)
            if val > 0:
                raise FacetViolated(f"vertex {i} is beyond the tangent facet of face {sorted(face)}")
            if val == 0:
                hit.add(i)
        if hit != expected:
            raise FacetViolated(f"tangent facet of face {sorted(face)} has unexpected incidences")
        facets.append(H)
    return validate(VHPolytope(P.ambient, verts, tuple(facets), P.hull, c, r2, f"E{t}({P.name})"))
