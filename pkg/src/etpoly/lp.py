"""Exact two-phase simplex method with Bland's anti-cycling rule.

Solves ``maximize c.x subject to A x = b, x >= 0`` over the rationals.
The problems met in this package have a few dozen variables at most, so a
dense tableau is plenty.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Q


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    inv = 1 / T[r][c]
    T[r] = [v * inv for v in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], T[r])]
    basis[r] = c


def _run(T: list[list[Fraction]], basis: list[int], ncols: int) -> bool:
    """Maximize the objective stored in the last row as reduced costs
    (``T[-1][j] < 0`` means column ``j`` improves).  Returns False when
    unbounded."""
    m = len(T) - 1
    while True:
        enter = next((j for j in range(ncols) if T[-1][j] < 0), None)
        if enter is None:
            return True
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], enter)


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    n = len(c)
    rows = [[Q(v) for v in r] for r in A]
    rhs = [Q(v) for v in b]
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    m = len(rows)
    # phase one: artificial variables n..n+m-1
    T = [rows[i] + [Fraction(int(k == i)) for k in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n):
            obj[j] -= T[i][j]
        obj[-1] -= T[i][-1]
    T.append(obj)
    _run(T, basis, n + m)
    if T[-1][-1] != 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, basis, i, col)
    keep = [i for i in range(m) if basis[i] < n]
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    # phase two
    obj = [-Q(v) for v in c] + [Fraction(0)]
    for i, bcol in enumerate(basis):
        f = obj[bcol]
        if f != 0:
            obj = [a - f * r for a, r in zip(obj, T[i])]
    T.append(obj)
    if not _run(T, basis, n):
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, bcol in enumerate(basis):
        x[bcol] = T[i][-1]
    return LPResult("optimal", T[-1][-1], tuple(x))


def in_relative_interior(point: Sequence[Fraction], vertices: Sequence[Sequence[Fraction]]) -> bool:
    """Whether ``point`` is a convex combination of ``vertices`` with every
    weight strictly positive.

    Weights are written ``mu_v = s + w_v`` with ``w_v >= 0`` and the slack
    ``s`` is maximized; the answer is yes iff the optimum is positive.
    """
    k = len(vertices)
    if k == 0:
        return False
    dim = len(point)
    A = []
    b = []
    for ell in range(dim):
        col = [v[ell] for v in vertices]
        A.append([sum(col, Fraction(0))] + col)
        b.append(point[ell])
    A.append([Fraction(k)] + [Fraction(1)] * k)
    b.append(Fraction(1))
    res = maximize([1] + [0] * k, A, b)
    return res.status == "optimal" and res.value > 0
