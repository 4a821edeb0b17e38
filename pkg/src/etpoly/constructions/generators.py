"""Exact generators for the standard polytopes used throughout the package.

Each generator lists candidate vertices and the known facet inequalities,
keeps the candidates that really are vertices (their tight inequalities
have full rank) and the inequalities that really are facets, and returns a
validated :class:`VHPolytope`.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from ..errors import BadParams
from ..geometry import Hyperplane, VHPolytope, validate
from ..linalg import affine_rank, rank, vec

KINDS = ("simplex", "cube", "cross", "hypersimplex", "M", "halfcube_N", "demicube", "prism_over_simplex")


def _assemble(
    ambient: int,
    candidates,
    inequalities,
    hull=(),
    center=None,
    name: str = "",
) -> VHPolytope:
    d = ambient - rank([h.a for h in hull]) if hull else ambient
    ineqs = [Hyperplane(a, b) for a, b in inequalities]
    verts = []
    for p in dict.fromkeys(vec(c) for c in candidates):
        if any(H.value(p) > 0 for H in ineqs):
            continue
        tight = [H.a for H in ineqs if H.value(p) == 0]
        if rank(tight + [h.a for h in hull]) == ambient:
            verts.append(p)
    facets = []
    for H in ineqs:
        on = [v for v in verts if H.value(v) == 0]
        if len(on) >= d and affine_rank(on) == d - 1:
            facets.append(H)
    return validate(VHPolytope(ambient, tuple(verts), tuple(facets), tuple(hull), center, None, name))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def simplex(d: int) -> VHPolytope:
    """Regular ``d``-simplex ``conv(e_0..e_d)`` in the hyperplane ``sum x = 1``."""
    _require(d >= 1, "simplex needs d >= 1")
    n = d + 1
    verts = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    ineqs = [(tuple(-int(i == j) for j in range(n)), 0) for i in range(n)]
    hull = (Hyperplane((1,) * n, 1),)
    return _assemble(n, verts, ineqs, hull, (Fraction(1, n),) * n, f"simplex({d})")


def cube(d: int) -> VHPolytope:
    """``[-1, 1]^d``."""
    _require(d >= 1, "cube needs d >= 1")
    verts = list(product((-1, 1), repeat=d))
    ineqs = [(tuple(s * int(i == j) for j in range(d)), 1) for i in range(d) for s in (1, -1)]
    return _assemble(d, verts, ineqs, name=f"cube({d})")


def cross(d: int) -> VHPolytope:
    """``conv(+-e_i)`` with facets ``sum eps_i x_i <= 1``."""
    _require(d >= 2, "cross polytope needs d >= 2")
    verts = [tuple(s * int(i == j) for j in range(d)) for i in range(d) for s in (1, -1)]
    ineqs = [(eps, 1) for eps in product((-1, 1), repeat=d)]
    return _assemble(d, verts, ineqs, name=f"cross({d})")


def hypersimplex(d: int, k: int) -> VHPolytope:
    """0/1 points of ``R^(d+1)`` with coordinate sum ``k``, in that hyperplane."""
    _require(d >= 2 and 1 <= k <= d, "hypersimplex needs d >= 2 and 1 <= k <= d")
    n = d + 1
    verts = [tuple(int(j in S) for j in range(n)) for S in combinations(range(n), k)]
    ineqs = []
    for i in range(n):
        e = tuple(int(i == j) for j in range(n))
        ineqs.append((tuple(-x for x in e), 0))
        ineqs.append((e, 1))
    hull = (Hyperplane((1,) * n, k),)
    return _assemble(n, verts, ineqs, hull, (Fraction(k, n),) * n, f"hypersimplex({d},{k})")


def M(d: int) -> VHPolytope:
    """``{x : |x_i| <= 1, sum |x_i| <= d - 2}``; vertices have two zero
    coordinates and all others equal to +-1."""
    _require(d >= 4, "M needs d >= 4")
    verts = []
    for zeros in combinations(range(d), 2):
        rest = [i for i in range(d) if i not in zeros]
        for signs in product((-1, 1), repeat=d - 2):
            p = [0] * d
            for i, s in zip(rest, signs):
                p[i] = s
            verts.append(tuple(p))
    ineqs = [(tuple(s * int(i == j) for j in range(d)), 1) for i in range(d) for s in (1, -1)]
    ineqs += [(eps, d - 2) for eps in product((-1, 1), repeat=d)]
    return _assemble(d, verts, ineqs, name=f"M({d})")


def halfcube_N(d: int) -> VHPolytope:
    """``{x : sum eps_i x_i <= d - 2}`` over sign vectors with an odd number
    of ``+1`` entries.

    Its vertices are the even +-1 points together with ``+-(d-2) e_i``
    whenever those are vertices; combinatorially it is polar to the
    demicube of the same dimension.
    """
    _require(d >= 3, "halfcube_N needs d >= 3")
    odd = [eps for eps in product((-1, 1), repeat=d) if eps.count(1) % 2 == 1]
    even_pts = [eps for eps in product((-1, 1), repeat=d) if eps.count(1) % 2 == 0]
    axis = [tuple(s * (d - 2) * int(i == j) for j in range(d)) for i in range(d) for s in (1, -1)]
    return _assemble(d, even_pts + axis, [(eps, d - 2) for eps in odd], name=f"halfcube_N({d})")


def demicube(d: int) -> VHPolytope:
    """Convex hull of the +-1 points with an even number of ``+1`` entries."""
    _require(d >= 3, "demicube needs d >= 3")
    even_pts = [eps for eps in product((-1, 1), repeat=d) if eps.count(1) % 2 == 0]
    odd = [eps for eps in product((-1, 1), repeat=d) if eps.count(1) % 2 == 1]
    ineqs = [(tuple(s * int(i == j) for j in range(d)), 1) for i in range(d) for s in (1, -1)]
    ineqs += [(w, d - 2) for w in odd]
    return _assemble(d, even_pts, ineqs, name=f"demicube({d})")


def prism_over_simplex(d: int) -> VHPolytope:
    """``conv(0, e_1..e_{d-1}) x [0, 1]`` in ``R^d``."""
    _require(d >= 2, "prism needs d >= 2")
    base = [tuple(int(i == j) for j in range(d - 1)) for i in range(d - 1)] + [(0,) * (d - 1)]
    verts = [b + (h,) for b in base for h in (0, 1)]
    ineqs = [(tuple(-int(i == j) for j in range(d)), 0) for i in range(d)]
    ineqs.append((tuple([1] * (d - 1) + [0]), 1))
    ineqs.append((tuple([0] * (d - 1) + [1]), 1))
    center = tuple([Fraction(1, d + 1)] * (d - 1) + [Fraction(1, 2)])
    return _assemble(d, verts, ineqs, center=center, name=f"prism_over_simplex({d})")


def generate(kind: str, d: int, k: int | None = None) -> VHPolytope:
    """Dispatch by name; ``k`` is only used by the hypersimplex."""
    if kind == "hypersimplex":
        _require(k is not None, "hypersimplex needs k")
        return hypersimplex(d, k)
    table = {
        "simplex": simplex,
        "cube": cube,
        "cross": cross,
        "M": M,
        "halfcube_N": halfcube_N,
        "demicube": demicube,
        "prism_over_simplex": prism_over_simplex,
    }
    if kind not in table:
        raise BadParams(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    return table[kind](d)
