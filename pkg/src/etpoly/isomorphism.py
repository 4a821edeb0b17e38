"""Rank-preserving isomorphism of graded posets.

Colour refinement runs on the disjoint union of the two Hasse diagrams so
both sides share one colour vocabulary.  Colours start from the rank; each
round a node's new colour is its old colour together with the multisets of
colours of its upper and of its lower covers.  When the stable partition
still has non-singleton classes, a node of the smallest such class on the
left is individualized together with each candidate partner on the right,
and refinement resumes.  Any complete matching is re-checked edge by edge
before it is returned.
"""
from __future__ import annotations

from .poset import GradedPoset


def _refine(colours: list[int], up: list[list[int]], down: list[list[int]]) -> list[int]:
    n_classes = len(set(colours))
    while True:
        sigs = [
            (colours[v], tuple(sorted(colours[u] for u in up[v])), tuple(sorted(colours[u] for u in down[v])))
            for v in range(len(colours))
        ]
        palette = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == n_classes:
            return new
        colours, n_classes = new, len(palette)


def _balanced(colours: list[int], n: int) -> bool:
    left: dict[int, int] = {}
    for c in colours[:n]:
        left[c] = left.get(c, 0) + 1
    right: dict[int, int] = {}
    for c in colours[n:]:
        right[c] = right.get(c, 0) + 1
    return left == right


def _is_witness(A: GradedPoset, B: GradedPoset, phi: dict[int, int]) -> bool:
    if sorted(phi.values()) != list(range(len(B))):
        return False
    if any(A.ranks[a] != B.ranks[phi[a]] for a in phi):
        return False
    for a in range(len(A)):
        if sorted(phi[c] for c in A.lower[a]) != list(B.lower[phi[a]]):
            return False
    return True


def find_isomorphism(A: GradedPoset, B: GradedPoset) -> dict[int, int] | None:
    """Return an order isomorphism ``A -> B`` as a dict, or None."""
    n = len(A)
    if n != len(B) or A.length != B.length:
        return None
    if [len(A.level(r)) for r in range(A.length + 1)] != [len(B.level(r)) for r in range(B.length + 1)]:
        return None
    up = [list(u) for u in A.upper] + [[x + n for x in u] for u in B.upper]
    down = [list(l) for l in A.lower] + [[x + n for x in l] for l in B.lower]
    colours = _refine(list(A.ranks) + list(B.ranks), up, down)

    def search(colours: list[int]) -> dict[int, int] | None:
        if not _balanced(colours, n):
            return None
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colours[:n]):
            classes.setdefault(c, []).append(v)
        open_classes = [vs for vs in classes.values() if len(vs) > 1]
        if not open_classes:
            where = {c: v for v, c in enumerate(colours[n:])}
            phi = {a: where[colours[a]] for a in range(n)}
            return phi if _is_witness(A, B, phi) else None
        target = min(open_classes, key=len)
        a = target[0]
        col = colours[a]
        for b in range(n, 2 * n):
            if colours[b] != col:
                continue
            trial = list(colours)
            # refinement renumbers colours into 0..2n-1, so 2n is unused
            trial[a] = trial[b] = 2 * n
            found = search(_refine(trial, up, down))
            if found is not None:
                return found
        return None

    return search(colours)


def are_isomorphic(A: GradedPoset, B: GradedPoset) -> bool:
    return find_isomorphism(A, B) is not None
