"""Finite bounded graded posets.

Elements are dense integer ids ``0..n-1``.  The order relation is stored as
Python-int bitsets: ``down[i]`` has bit ``j`` set iff ``j <= i``, and
``up[i]`` has bit ``j`` set iff ``i <= j``.  Comparability tests and interval
extraction are single ``&`` operations, which is what every scan below relies
on.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    NoBoundedBottom,
    NoBoundedTop,
    NotComparable,
    NotEulerian,
    NotGraded,
    RankSkip,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True, eq=False)
class GradedPoset:
    """A validated bounded graded poset.

    Build instances with :meth:`from_covers`; the constructor does not
    validate.  ``lower[i]`` lists the elements covered by ``i``.
    """

    ranks: tuple[int, ...]
    lower: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    labels: tuple | None = None

    @classmethod
    def from_covers(
        cls,
        ranks: Sequence[int] | None,
        cover_pairs: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
        n: int | None = None,
        **extra,
    ):
        """Validate cover data and build the poset.

        ``cover_pairs`` holds ``(low, high)`` pairs with ``high`` covering
        ``low``.  When ``ranks`` is None they are computed as longest-chain
        lengths from the bottom, and any cover that then spans more than one
        rank means the poset is not graded.
        """
        pairs = sorted(set((int(a), int(b)) for a, b in cover_pairs))
        if ranks is not None:
            n = len(ranks)
        elif n is None:
            n = 1 + max((max(p) for p in pairs), default=-1)
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise NotGraded(f"bad cover pair {(a, b)}")
        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for a, b in pairs:
            lower[b].append(a)
            upper[a].append(b)

        minimal = [i for i in range(n) if not lower[i]]
        maximal = [i for i in range(n) if not upper[i]]
        if len(minimal) != 1:
            raise NoBoundedBottom(f"{len(minimal)} minimal elements")
        if len(maximal) != 1:
            raise NoBoundedTop(f"{len(maximal)} maximal elements")
        bottom, top = minimal[0], maximal[0]

        if ranks is None:
            ranks = _longest_chain_ranks(n, lower, upper, bottom)
            for a, b in pairs:
                if ranks[b] - ranks[a] != 1:
                    raise NotGraded(
                        f"maximal chains of different lengths through cover {(a, b)}"
                    )
        else:
            ranks = [int(r) for r in ranks]
            for a, b in pairs:
                step = ranks[b] - ranks[a]
                if step >= 2:
                    raise RankSkip(f"cover {(a, b)} spans {step} ranks")
                if step != 1:
                    raise NotGraded(f"cover {(a, b)} does not raise the rank")
            if ranks[bottom] != 0:
                raise NotGraded("bottom element must have rank 0")

        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise NotGraded("labels do not match the number of elements")
        return cls(
            ranks=tuple(ranks),
            lower=tuple(tuple(sorted(c)) for c in lower),
            bottom=bottom,
            top=top,
            labels=labels,
            **extra,
        )

    # -- basic shape ------------------------------------------------------
    def __len__(self) -> int:
        return len(self.ranks)

    def __repr__(self) -> str:
        counts = [len(self.level(r)) for r in range(self.length + 1)]
        return f"{type(self).__name__}(length={self.length}, rank_sizes={counts})"

    @property
    def length(self) -> int:
        return self.ranks[self.top]

    @property
    def dim(self) -> int:
        """``d`` for a poset of length ``d + 1``."""
        return self.length - 1

    @cached_property
    def upper(self) -> tuple[tuple[int, ...], ...]:
        up: list[list[int]] = [[] for _ in self.ranks]
        for b, lows in enumerate(self.lower):
            for a in lows:
                up[a].append(b)
        return tuple(tuple(sorted(u)) for u in up)

    @cached_property
    def by_rank(self) -> tuple[tuple[int, ...], ...]:
        levels: list[list[int]] = [[] for _ in range(self.length + 1)]
        for i, r in enumerate(self.ranks):
            levels[r].append(i)
        return tuple(tuple(lv) for lv in levels)

    def level(self, r: int) -> tuple[int, ...]:
        if 0 <= r <= self.length:
            return self.by_rank[r]
        return ()

    @cached_property
    def rank_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << i for i in lv) for lv in self.by_rank)

    @cached_property
    def parity_masks(self) -> tuple[int, int]:
        even = sum(m for r, m in enumerate(self.rank_masks) if r % 2 == 0)
        odd = sum(m for r, m in enumerate(self.rank_masks) if r % 2 == 1)
        return even, odd

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * len(self)
        for lv in self.by_rank:
            for i in lv:
                m = 1 << i
                for c in self.lower[i]:
                    m |= down[c]
                down[i] = m
        return tuple(down)

    @cached_property
    def up(self) -> tuple[int, ...]:
        up = [0] * len(self)
        for lv in reversed(self.by_rank):
            for i in lv:
                m = 1 << i
                for c in self.upper[i]:
                    m |= up[c]
                up[i] = m
        return tuple(up)

    @cached_property
    def label_index(self) -> dict:
        if self.labels is None:
            return {}
        return {lab: i for i, lab in enumerate(self.labels)}

    def label(self, i: int):
        return i if self.labels is None else self.labels[i]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def between(self, a: int, b: int) -> int:
        """Bitmask of the closed interval ``[a, b]`` (empty if a is not <= b)."""
        return self.up[a] & self.down[b]

    def covers(self) -> Iterator[tuple[int, int]]:
        for b, lows in enumerate(self.lower):
            for a in lows:
                yield a, b

    def is_chain(self, elements: Iterable[int]) -> bool:
        els = list(elements)
        for i, a in enumerate(els):
            for b in els[i + 1:]:
                if a == b or not self.comparable(a, b):
                    return False
        return True

    def proper_part(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self)) if i not in (self.bottom, self.top))


class GradedLattice(GradedPoset):
    """A graded poset known to be a lattice; meets and joins always exist."""

    def join(self, a: int, b: int) -> int:
        return join(self, a, b)

    def meet(self, a: int, b: int) -> int:
        return meet(self, a, b)


def _longest_chain_ranks(n, lower, upper, bottom) -> list[int]:
    indeg = [len(lower[i]) for i in range(n)]
    ranks = [0] * n
    stack = [bottom]
    seen = 0
    while stack:
        a = stack.pop()
        seen += 1
        for b in upper[a]:
            ranks[b] = max(ranks[b], ranks[a] + 1)
            indeg[b] -= 1
            if indeg[b] == 0:
                stack.append(b)
    if seen != n:
        raise NotGraded("cover relation has a cycle")
    return ranks


def from_covers(ranks, cover_pairs, labels=None) -> GradedPoset:
    return GradedPoset.from_covers(ranks, cover_pairs, labels)


def boolean_lattice(n: int) -> GradedLattice:
    """Subsets of an ``n``-set ordered by inclusion (the face lattice of an
    ``(n-1)``-simplex); element ``i`` is the subset with bitmask ``i``."""
    size = 1 << n
    ranks = [bin(s).count("1") for s in range(size)]
    pairs = [(s, s | (1 << k)) for s in range(size) for k in range(n) if not s >> k & 1]
    labels = [frozenset(k for k in range(n) if s >> k & 1) for s in range(size)]
    return GradedLattice.from_covers(ranks, pairs, labels)


def chain_poset(n: int) -> GradedPoset:
    """The chain ``0 < 1 < ... < n``."""
    return GradedPoset.from_covers(list(range(n + 1)), [(i, i + 1) for i in range(n)])


def opposite(P: GradedPoset) -> GradedPoset:
    """Same elements with the order reversed; ``rank_op = length - rank``."""
    L = P.length
    cls = GradedLattice if isinstance(P, GradedLattice) else GradedPoset
    return cls.from_covers(
        [L - r for r in P.ranks],
        [(b, a) for a, b in P.covers()],
        P.labels,
    )


def interval(P: GradedPoset, x: int, z: int) -> GradedPoset:
    """The closed interval ``[x, z]`` re-ranked from 0.

    Labels of the result are the element ids in ``P``.
    """
    if not P.leq(x, z):
        raise NotComparable(f"{x} is not below {z}")
    ids = list(iter_bits(P.between(x, z)))
    index = {e: k for k, e in enumerate(ids)}
    r0 = P.ranks[x]
    pairs = [
        (index[a], index[b]) for b in ids for a in P.lower[b] if a in index
    ]
    cls = GradedLattice if isinstance(P, GradedLattice) else GradedPoset
    return cls.from_covers([P.ranks[e] - r0 for e in ids], pairs, ids)


def join(P: GradedPoset, a: int, b: int) -> int | None:
    """Least upper bound of ``a`` and ``b``, or None when it is not unique."""
    common = P.up[a] & P.up[b]
    for r in range(max(P.ranks[a], P.ranks[b]), P.length + 1):
        m = common & P.rank_masks[r]
        if m:
            u = lowest_bit(m)
            return u if P.up[u] == common else None
    return None


def meet(P: GradedPoset, a: int, b: int) -> int | None:
    """Greatest lower bound of ``a`` and ``b``, or None when it is not unique."""
    common = P.down[a] & P.down[b]
    for r in range(min(P.ranks[a], P.ranks[b]), -1, -1):
        m = common & P.rank_masks[r]
        if m:
            u = lowest_bit(m)
            return u if P.down[u] == common else None
    return None


def is_lattice(P: GradedPoset) -> bool:
    n = len(P)
    for a in range(n):
        for b in range(a + 1, n):
            if P.comparable(a, b):
                continue
            if join(P, a, b) is None or meet(P, a, b) is None:
                return False
    return True


def as_lattice(P: GradedPoset) -> GradedLattice:
    """Re-type ``P`` as a :class:`GradedLattice` after checking the lattice property."""
    from .errors import NotALattice

    if isinstance(P, GradedLattice):
        return P
    if not is_lattice(P):
        raise NotALattice("some pair lacks a unique join or meet")
    return GradedLattice.from_covers(P.ranks, P.covers(), P.labels)


def is_eulerian(P: GradedPoset) -> bool:
    """Every interval ``[x, y]`` with ``x < y`` has as many odd-rank as
    even-rank elements.  All intervals are scanned directly."""
    even, odd = P.parity_masks
    for x in range(len(P)):
        ux = P.up[x]
        for y in iter_bits(ux & ~(1 << x)):
            m = ux & P.down[y]
            if (m & even).bit_count() != (m & odd).bit_count():
                return False
    return True


def moebius(P: GradedPoset, x: int, y: int) -> int:
    if not P.leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    table = _moebius_row(P, x)
    return table[y]


def _moebius_row(P: GradedPoset, x: int) -> dict[int, int]:
    cache = P.__dict__.setdefault("_moebius_rows", {})
    if x in cache:
        return cache[x]
    mu = {x: 1}
    ux = P.up[x]
    for r in range(P.ranks[x] + 1, P.length + 1):
        for z in iter_bits(ux & P.rank_masks[r]):
            mu[z] = -sum(mu[w] for w in iter_bits(ux & P.down[z] & ~(1 << z)))
    cache[x] = mu
    return mu


def is_boolean_interval(P: GradedPoset, x: int, z: int) -> bool:
    """Boolean test by counting: ``length`` atoms and ``2**length`` elements."""
    m = P.between(x, z)
    ell = P.ranks[z] - P.ranks[x]
    if ell == 0:
        return m.bit_count() == 1
    atoms = (m & P.rank_masks[P.ranks[x] + 1]).bit_count()
    return atoms == ell and m.bit_count() == 1 << ell


class SimplicialityProfile(NamedTuple):
    max_k_simplicial: int
    max_h_simple: int
    is_boolean: bool


def simpliciality_profile(L: GradedPoset) -> SimplicialityProfile:
    """Largest ``k`` with every ``[0, z]``, ``rank(z) = k + 1``, boolean; the
    dual quantity for upper intervals; and whether ``L`` itself is boolean."""
    if not is_eulerian(L):
        raise NotEulerian("simpliciality is defined for Eulerian lattices")
    d = L.dim
    max_k = -1
    for k in range(d):
        if all(is_boolean_interval(L, L.bottom, z) for z in L.level(k + 1)):
            max_k = k
        else:
            break
    max_h = -1
    for h in range(d):
        if all(is_boolean_interval(L, x, L.top) for x in L.level(d - h)):
            max_h = h
        else:
            break
    return SimplicialityProfile(max_k, max_h, is_boolean_interval(L, L.bottom, L.top))


def is_k_simplicial(L: GradedPoset, k: int) -> bool:
    return all(is_boolean_interval(L, L.bottom, z) for z in L.level(k + 1))


def is_h_simple(L: GradedPoset, h: int) -> bool:
    return all(is_boolean_interval(L, x, L.top) for x in L.level(L.dim - h))


def relabel(P: GradedPoset, perm: Sequence[int]) -> GradedPoset:
    """Copy of ``P`` with element ``i`` renamed ``perm[i]``."""
    n = len(P)
    ranks = [0] * n
    labels = [None] * n
    for i in range(n):
        ranks[perm[i]] = P.ranks[i]
        labels[perm[i]] = P.label(i)
    pairs = [(perm[a], perm[b]) for a, b in P.covers()]
    return type(P).from_covers(ranks, pairs, labels)
