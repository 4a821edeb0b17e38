"""The interval construction ``E_t`` on graded posets.

For a poset ``L`` of length ``d + 1`` and ``0 <= t <= d - 1`` the elements
of ``E_t(L)`` are

* intervals ``[x, z]`` of ``L`` that strictly contain some element of
  dimension ``t`` (rank ``t + 1``) in their interior,
* singletons ``{y}`` with ``y`` of dimension ``t``,
* the empty set,

ordered by reversed inclusion.  The whole interval ``[bottom, top]`` is the
new bottom and the empty set is the new top.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from .errors import BadT
from .flags import FlagVector, flag_number, flag_vector
from .poset import (
    GradedPoset,
    GradedLattice,
    iter_bits,
    opposite,
    simpliciality_profile,
)


@dataclass(frozen=True, order=True)
class EtElement:
    """One element of ``E_t(L)``; ``kind`` is ``"interval"``,
    ``"singleton"`` or ``"empty"``.  Ids refer to the base poset."""

    kind: str
    x: int | None = None
    z: int | None = None
    y: int | None = None

    @classmethod
    def empty(cls) -> "EtElement":
        return cls("empty")

    @classmethod
    def singleton(cls, y: int) -> "EtElement":
        return cls("singleton", y=y)

    @classmethod
    def interval(cls, x: int, z: int) -> "EtElement":
        return cls("interval", x=x, z=z)

    def to_json(self) -> dict:
        if self.kind == "interval":
            return {"kind": "interval", "x": self.x, "z": self.z}
        if self.kind == "singleton":
            return {"kind": "singleton", "y": self.y}
        return {"kind": "empty"}

    def __str__(self) -> str:
        if self.kind == "interval":
            return f"[{self.x},{self.z}]"
        if self.kind == "singleton":
            return f"{{{self.y}}}"
        return "{}"


@dataclass(frozen=True, eq=False, repr=False)
class EtPoset(GradedPoset):
    """``E_t`` of ``base``; labels are :class:`EtElement` values."""

    base: GradedPoset | None = None
    t: int = 0

    @cached_property
    def index(self) -> dict[EtElement, int]:
        return {lab: i for i, lab in enumerate(self.labels)}


class EtLattice(EtPoset, GradedLattice):
    """``E_t`` of a lattice, which is again a lattice."""


def _check_t(L: GradedPoset, t: int, lo: int = 0, hi: int | None = None) -> int:
    d = L.dim
    hi = d - 1 if hi is None else hi
    if not lo <= t <= hi:
        raise BadT(f"t = {t} outside {lo}..{hi} for d = {d}")
    return d


def et_elements(L: GradedPoset, t: int) -> list[EtElement]:
    """All elements of ``E_t(L)`` in a fixed order (by new rank, then ids)."""
    _check_t(L, t)
    mid = L.rank_masks[t + 1]
    high = 0
    for r in range(t + 2, L.length + 1):
        high |= L.rank_masks[r]
    out = []
    for r in range(0, t + 1):
        for x in L.level(r):
            ux = L.up[x]
            for z in iter_bits(ux & high):
                if ux & L.down[z] & mid:
                    out.append(EtElement.interval(x, z))
    out.extend(EtElement.singleton(y) for y in L.level(t + 1))
    out.append(EtElement.empty())

    def new_rank(e: EtElement) -> int:
        return et_rank(L, e)

    out.sort(key=lambda e: (new_rank(e), e.kind, e.x or 0, e.z or 0, e.y or 0))
    return out


def et_rank(L: GradedPoset, e: EtElement) -> int:
    d = L.dim
    if e.kind == "interval":
        return L.ranks[e.x] + d + 1 - L.ranks[e.z]
    if e.kind == "singleton":
        return d
    return d + 1


def et(L: GradedPoset, t: int) -> EtPoset:
    """Build ``E_t(L)``, re-validated through :meth:`GradedPoset.from_covers`.

    Covers of ``[x, z]``: shrink one end by a cover step while keeping a
    witness of dimension ``t`` strictly inside; intervals of length two
    with middle ``y`` in dimension ``t`` are covered by ``{y}``; every
    singleton is covered by the empty set.
    """
    _check_t(L, t)
    elements = et_elements(L, t)
    index = {e: i for i, e in enumerate(elements)}
    pairs = []
    top = index[EtElement.empty()]
    for e, i in index.items():
        if e.kind == "singleton":
            pairs.append((i, top))
        elif e.kind == "interval":
            x, z = e.x, e.z
            for x2 in L.upper[x]:
                j = index.get(EtElement.interval(x2, z))
                if j is not None:
                    pairs.append((i, j))
            for z2 in L.lower[z]:
                j = index.get(EtElement.interval(x, z2))
                if j is not None:
                    pairs.append((i, j))
            if L.ranks[z] - L.ranks[x] == 2:
                for y in iter_bits(L.between(x, z) & L.rank_masks[t + 1]):
                    pairs.append((i, index[EtElement.singleton(y)]))
    ranks = [et_rank(L, e) for e in elements]
    cls = EtLattice if isinstance(L, GradedLattice) else EtPoset
    return cls.from_covers(ranks, pairs, elements, base=L, t=t)


def et_fvector_formula(L: GradedPoset, t: int, fv: FlagVector | None = None) -> tuple[int, ...]:
    """``(f_{-1}, ..., f_d)`` of ``E_t(L)`` predicted from pair flag numbers of ``L``.

    For ``k < d - 1``, ``f_k`` sums ``f_ij(L)`` over ``-1 <= i < t < j <= d``
    with ``j - i = d - k``; ``f_{d-1} = f_t(L)`` and ``f_d = 1``.
    """
    d = _check_t(L, t)
    fv = fv if fv is not None else flag_vector(L)
    out = []
    for k in range(-1, d + 1):
        if k == d:
            out.append(1)
        elif k == d - 1:
            out.append(fv[t])
        else:
            gap = d - k
            out.append(
                sum(fv[(i, i + gap)] for i in range(-1, t) if t < i + gap <= d)
            )
    return tuple(out)


def et_two_simple_criterion(L: GradedPoset, t: int) -> bool:
    """Flag test for 2-simplicity of ``E_t(L)``: ``f_{t-2,t,t+2} = 6 f_{t-2,t+2}``."""
    _check_t(L, t, 1, L.dim - 2)
    return flag_number(L, (t - 2, t, t + 2)) == 6 * flag_number(L, (t - 2, t + 2))


def predicted_max_simplicial(L: GradedPoset, t: int) -> int:
    """Largest ``k <= d - 2`` such that ``L`` is ``min(k, t-1)``-simplicial
    and ``min(k, d-t-2)``-simple; ``E_t(L)`` is then ``k``-simplicial and
    never ``(d-1)``-simplicial."""
    d = _check_t(L, t, 1, L.dim - 2)
    prof = simpliciality_profile(L)
    best = -1
    for k in range(0, d - 1):
        s, r = min(k, t - 1), min(k, d - t - 2)
        if s <= prof.max_k_simplicial and r <= prof.max_h_simple:
            best = k
        else:
            break
    return best


def d_construction(L: GradedPoset, k: int) -> GradedPoset:
    """Combinatorial model of truncating all ``k``-faces: ``E_k(L)`` reversed."""
    _check_t(L, k)
    return opposite(et(L, k))


def binomial_lower_bound_holds(L: GradedPoset) -> bool:
    """An Eulerian lattice of length ``l`` has at least ``C(l, i)`` elements
    of every rank ``i``."""
    ell = L.length
    return all(len(L.level(i)) >= comb(ell, i) for i in range(ell + 1))
