"""Piecewise-linear maps between the order complexes of ``L`` and ``E_t(L)``.

Points of an order complex are convex combinations of a chain of proper
elements.  ``pi`` is the linear extension of the vertex map

* ``{y}`` goes to ``y``,
* ``[x, z]`` with both ends proper goes to the midpoint of ``x`` and ``z``,
* ``[x, top]`` goes to ``x`` and ``[bottom, z]`` goes to ``z``,

and ``pi_inverse`` writes a point of a chain simplex of ``L`` back as a
point of ``E_t(L)`` using the staircase overlap coefficients below.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadT, NoMiddleRankPath, NotAChain, RankCollision
from .et import EtElement, EtPoset, et
from .linalg import Q
from .poset import GradedPoset, lowest_bit


@dataclass(frozen=True, eq=False)
class ChainPoint:
    """Weights on a chain of proper elements of ``poset``.

    Zero weights are allowed (padding); equality ignores them.
    """

    poset: GradedPoset
    chain: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        P = self.poset
        chain = tuple(int(c) for c in self.chain)
        weights = tuple(Q(w) for w in self.weights)
        if len(chain) != len(weights):
            raise NotAChain("chain and weights differ in length")
        if any(w < 0 for w in weights):
            raise NotAChain("negative weight")
        if sum(weights, Fraction(0)) != 1:
            raise NotAChain("weights do not sum to 1")
        for c in chain:
            if not 0 <= c < len(P) or c in (P.bottom, P.top):
                raise NotAChain(f"element {c} is not a proper element")
        order = sorted(range(len(chain)), key=lambda k: P.ranks[chain[k]])
        chain = tuple(chain[k] for k in order)
        weights = tuple(weights[k] for k in order)
        ranks = [P.ranks[c] for c in chain]
        if len(set(ranks)) != len(ranks):
            raise RankCollision("two chain elements share a rank")
        for a, b in zip(chain, chain[1:]):
            if not P.leq(a, b):
                raise NotAChain(f"elements {a} and {b} are incomparable")
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "weights", weights)

    def support(self) -> dict[int, Fraction]:
        return {c: w for c, w in zip(self.chain, self.weights) if w != 0}

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainPoint):
            return NotImplemented
        return self.poset is other.poset and self.support() == other.support()

    def __hash__(self) -> int:
        return hash((id(self.poset), frozenset(self.support().items())))


def vertex_image(E: EtPoset, e: int) -> dict[int, Fraction]:
    """Image of a single proper element of ``E_t(L)`` as weights on ``L``."""
    L = E.base
    lab: EtElement = E.labels[e]
    half = Fraction(1, 2)
    if lab.kind == "singleton":
        return {lab.y: Fraction(1)}
    if lab.kind != "interval":
        raise NotAChain("the empty set is not a proper element")
    x_proper = lab.x != L.bottom
    z_proper = lab.z != L.top
    if x_proper and z_proper:
        return {lab.x: half, lab.z: half}
    if x_proper:
        return {lab.x: Fraction(1)}
    if z_proper:
        return {lab.z: Fraction(1)}
    raise NotAChain("the whole interval is the bottom of E_t(L)")


def pi(p: ChainPoint) -> ChainPoint:
    """Map a point of the order complex of ``E_t(L)`` to that of ``L``."""
    E = p.poset
    if not isinstance(E, EtPoset) or E.base is None:
        raise NotAChain("pi expects a point over an E_t poset")
    acc: dict[int, Fraction] = {}
    for e, w in zip(p.chain, p.weights):
        if w == 0:
            continue
        for y, c in vertex_image(E, e).items():
            acc[y] = acc.get(y, Fraction(0)) + w * c
    chain = tuple(acc)
    return ChainPoint(E.base, chain, tuple(acc[c] for c in chain))


def _padded_chain(L: GradedPoset, support: dict[int, Fraction], t: int) -> list[int]:
    """A maximal chain ``c[0] = bottom < ... < c[d+1] = top`` through the
    support; the element at rank ``t + 1`` is chosen inside the gap it
    falls in."""
    fixed = {L.ranks[x]: x for x in support}
    fixed[0] = L.bottom
    fixed[L.length] = L.top
    ranks = sorted(fixed)
    chain = [None] * (L.length + 1)
    for r in ranks:
        chain[r] = fixed[r]
    for lo, hi in zip(ranks, ranks[1:]):
        cur = fixed[lo]
        for r in range(lo + 1, hi):
            m = L.up[cur] & L.down[fixed[hi]] & L.rank_masks[r]
            if not m:
                raise NoMiddleRankPath(f"no rank {r} element between {fixed[lo]} and {fixed[hi]}")
            cur = lowest_bit(m)
            chain[r] = cur
    return chain


def staircase_coefficients(lam: Sequence[Fraction], t: int) -> dict[tuple[int, int], Fraction]:
    """Overlaps ``alpha_{i,j}`` of the staircase intervals.

    ``lam`` has entries ``0..d+1`` with ``lam[0] = lam[d+1] = 1``.  With
    ``f(i) = lam_i + ... + lam_t`` and ``g(j) = lam_{t+2} + ... + lam_j``
    (both zero at ``t + 1``), ``alpha_{i,j}`` is the length of the overlap
    of ``[f(i+1), f(i)]`` and ``[g(j-1), g(j)]`` for ``0 <= i <= t`` and
    ``t + 2 <= j <= d + 1``.
    """
    d = len(lam) - 2
    f = {i: sum(lam[i : t + 1], Fraction(0)) for i in range(0, t + 2)}
    g = {j: sum(lam[t + 2 : j + 1], Fraction(0)) for j in range(t + 1, d + 2)}
    out = {}
    for i in range(0, t + 1):
        for j in range(t + 2, d + 2):
            a = min(f[i], g[j]) - max(f[i + 1], g[j - 1])
            if a > 0:
                out[(i, j)] = a
    return out


def pi_inverse(q: ChainPoint, t: int, E: EtPoset | None = None) -> ChainPoint:
    """Inverse of :func:`pi` on the chain simplex carrying ``q``.

    The singleton at rank ``t + 1`` gets ``lam_{t+1}``; each interval
    ``[x_i, z_j]`` with both ends proper gets ``2 alpha_{i,j}``; the
    intervals ``[bottom, z_j]`` and ``[x_i, top]`` get ``alpha_{i,j}``.
    The interior range is ``1 <= i <= t`` and ``t + 2 <= j <= d``; with
    this range the coefficients always sum to one.
    """
    L = q.poset
    d = L.dim
    if not 0 <= t <= d - 1:
        raise BadT(f"t = {t} outside 0..{d - 1}")
    if E is None:
        E = et(L, t)
    elif E.base is not L or E.t != t:
        raise BadT("E is not E_t of the point's poset")
    support = q.support()
    chain = _padded_chain(L, support, t)
    lam = [Fraction(0)] * (d + 2)
    for x, w in support.items():
        lam[L.ranks[x]] = w
    lam[0] = lam[d + 1] = Fraction(1)
    out: dict[int, Fraction] = {}
    if lam[t + 1] > 0:
        out[E.index[EtElement.singleton(chain[t + 1])]] = lam[t + 1]
    for (i, j), a in staircase_coefficients(lam, t).items():
        if i == 0 and j == d + 1:
            continue
        coef = a if i == 0 or j == d + 1 else 2 * a
        key = EtElement.interval(chain[i], chain[j])
        out[E.index[key]] = out.get(E.index[key], Fraction(0)) + coef
    ids = tuple(out)
    return ChainPoint(E, ids, tuple(out[e] for e in ids))


def random_chain_point(L: GradedPoset, rng, max_den: int = 12) -> ChainPoint:
    """A random rational point on a random maximal chain of ``L`` (some
    weights may be zero)."""
    chain = []
    cur = L.bottom
    for r in range(1, L.length):
        ups = [u for u in L.upper[cur]]
        cur = ups[rng.randrange(len(ups))]
        chain.append(cur)
    raw = [rng.randrange(0, max_den + 1) for _ in chain]
    if sum(raw) == 0:
        raw[rng.randrange(len(raw))] = 1
    total = sum(raw)
    return ChainPoint(L, tuple(chain), tuple(Fraction(r, total) for r in raw))
