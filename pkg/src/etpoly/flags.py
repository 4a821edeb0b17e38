"""Flag numbers and flag vectors.

Flag numbers are indexed by *dimension* ``i`` in ``-1..d``; the element
rank is ``i + 1``.  ``f_S`` counts chains that meet exactly the dimensions in
``S``, so ``f_{()} = 1`` and ``f_{(i,)} = f_i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import BadRankIndex, WrongDimension
from .poset import GradedPoset, iter_bits


def _key(S: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(int(i) for i in S)))


def flag_number(L: GradedPoset, S: Iterable[int]) -> int:
    """Number of chains with exactly one element in each dimension of ``S``."""
    dims = _key(S)
    d = L.dim
    for i in dims:
        if not -1 <= i <= d:
            raise BadRankIndex(f"dimension {i} outside -1..{d}")
    if not dims:
        return 1
    ranks = [i + 1 for i in dims]
    counts = {x: 1 for x in L.level(ranks[0])}
    for prev, r in zip(ranks, ranks[1:]):
        prev_mask = L.rank_masks[prev]
        counts = {
            y: sum(counts[x] for x in iter_bits(L.down[y] & prev_mask))
            for y in L.level(r)
        }
    return sum(counts.values())


@dataclass(frozen=True)
class FlagVector:
    """Face numbers plus selected flag numbers of a rank ``d + 1`` poset.

    ``f`` runs over dimensions ``-1..d`` (so ``f[0]`` is ``f_{-1}``).
    ``flags`` maps sorted dimension tuples to counts and always contains
    every pair.
    """

    d: int
    f: tuple[int, ...]
    flags: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __getitem__(self, S) -> int:
        if isinstance(S, int):
            S = (S,)
        key = _key(S)
        if not key:
            return 1
        if len(key) == 1:
            return self.f[key[0] + 1]
        return self.flags[key]

    def fi(self, i: int) -> int:
        return self.f[i + 1]

    @property
    def fvector(self) -> tuple[int, ...]:
        """``(f_0, ..., f_{d-1})``."""
        return self.f[1:-1]

    @property
    def f03(self) -> int:
        return self[(0, 3)]

    def shape4(self) -> tuple[int, int, int, int, int]:
        """``(f0, f1, f2, f3, f03)`` for a 4-dimensional object."""
        if self.d != 4:
            raise WrongDimension(f"expected d = 4, got {self.d}")
        return (*self.fvector, self.f03)

    def __str__(self) -> str:
        body = " ".join(str(x) for x in self.fvector)
        if self.d == 4:
            return f"{body} ; f03={self.f03}"
        return body


def flag_vector(L: GradedPoset, extra: Iterable[Iterable[int]] = ()) -> FlagVector:
    """All ``f_i``, all pairs ``f_ij`` (``-1 <= i < j <= d``), the triples
    ``f_{t-2,t,t+2}`` used by the 2-simplicity test, and any ``extra`` sets."""
    d = L.dim
    f = tuple(len(L.level(i + 1)) for i in range(-1, d + 1))
    flags: dict[tuple[int, ...], int] = {}
    for i, j in combinations(range(-1, d + 1), 2):
        flags[(i, j)] = flag_number(L, (i, j))
    for t in range(1, d - 1):
        key = (t - 2, t, t + 2)
        flags[key] = flag_number(L, key)
    for S in extra:
        key = _key(S)
        if len(key) > 1 and key not in flags:
            flags[key] = flag_number(L, key)
    return FlagVector(d, f, flags)


def flag_vector_from_f(d: int, fvec: Sequence[int], f03: int | None = None) -> FlagVector:
    """A partial flag vector built from ``(f_0..f_{d-1})`` and optionally ``f03``."""
    f = (1, *[int(x) for x in fvec], 1)
    if len(f) != d + 2:
        raise WrongDimension(f"need {d} face numbers, got {len(fvec)}")
    flags = {} if f03 is None else {(0, 3): int(f03)}
    return FlagVector(d, f, flags)


def dehn_sommerville_residuals(fv: FlagVector) -> dict[tuple[str, int], int]:
    """Residuals of the two families of generalized Dehn-Sommerville
    relations on pairs; all are zero for an Eulerian poset.

    ``("lower", j)``: sum over ``i = -1..j`` of ``(-1)^i f_ij``.
    ``("upper", i)``: sum over ``j = i..d`` of ``(-1)^j f_ij`` minus
    ``(-1)^d`` when ``i = d``.
    """
    d = fv.d
    out = {}
    for j in range(0, d + 1):
        out[("lower", j)] = sum((-1) ** (i % 2) * fv[(i, j)] for i in range(-1, j + 1))
    for i in range(-1, d + 1):
        delta = (-1) ** d if i == d else 0
        out[("upper", i)] = sum((-1) ** (j % 2) * fv[(i, j)] for j in range(i, d + 1)) - delta
    return out


def fatness(fv) -> Fraction:
    """``(f1 + f2) / (f0 + f3)`` for a 4-dimensional flag vector.

    Accepts a :class:`FlagVector` or a plain tuple ``(f0, f1, f2, f3)``
    (an optional fifth entry ``f03`` is ignored).
    """
    if isinstance(fv, FlagVector):
        if fv.d != 4:
            raise WrongDimension(f"fatness needs d = 4, got {fv.d}")
        f0, f1, f2, f3 = fv.fvector
    else:
        vals = tuple(fv)
        if len(vals) not in (4, 5):
            raise WrongDimension(f"fatness needs 4 face numbers, got {len(vals)}")
        f0, f1, f2, f3 = vals[:4]
    return Fraction(f1 + f2, f0 + f3)
