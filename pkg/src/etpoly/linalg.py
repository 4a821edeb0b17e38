"""Exact linear algebra over :class:`fractions.Fraction`.

Vectors are tuples of Fractions.  Nothing here ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

RatVec = tuple[Fraction, ...]


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction; floats are refused."""
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(xs: Iterable) -> RatVec:
    return tuple(Q(x) for x in xs)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a, b) -> RatVec:
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b) -> RatVec:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a) -> RatVec:
    return tuple(c * x for x in a)


def norm2(a) -> Fraction:
    return dot(a, a)


def centroid(points: Sequence[Sequence[Fraction]]) -> RatVec:
    n = len(points)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*points))


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(map(Q, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[RatVec]:
    """Basis of ``{x : rows x = 0}``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> RatVec | None:
    """One solution of ``A x = b`` (free variables zero) or None if inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(r) + [Q(v)] for r, v in zip(A, b)]
    red, piv = rref(aug, ncols + 1)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, piv):
        x[p] = row[ncols]
    return tuple(x)


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull (-1 for no points)."""
    if not points:
        return -1
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]])


def independent_rows(rows: Sequence[Sequence[Fraction]]) -> list[RatVec]:
    """A maximal linearly independent subset of ``rows``, in input order."""
    chosen: list[RatVec] = []
    for r in rows:
        if rank(chosen + [tuple(r)]) > len(chosen):
            chosen.append(tuple(r))
    return chosen


def project_onto_span(v: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> RatVec:
    """Orthogonal projection of ``v`` onto the span of independent ``basis``
    vectors, via the Gram system."""
    if not basis:
        return tuple(Fraction(0) for _ in v)
    gram = [[dot(a, b) for b in basis] for a in basis]
    rhs = [dot(a, v) for a in basis]
    coef = solve(gram, rhs)
    out = [Fraction(0)] * len(v)
    for c, b in zip(coef, basis):
        for k, x in enumerate(b):
            out[k] += c * x
    return tuple(out)
