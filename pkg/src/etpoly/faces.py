"""Face lattices from vertex-facet incidence.

Every proper face of a polytope is an intersection of facets, so the
proper part of the face lattice is the intersection closure of the facet
vertex sets.  Vertex sets are held as int bitmasks.
"""
from __future__ import annotations

from typing import Sequence

from .errors import NotGraded
from .poset import GradedLattice, iter_bits


def facet_masks(incidence: Sequence[Sequence[bool]]) -> list[int]:
    """Column bitmasks of a vertex-by-facet boolean matrix."""
    if not incidence:
        return []
    nf = len(incidence[0])
    masks = [0] * nf
    for v, row in enumerate(incidence):
        if len(row) != nf:
            raise NotGraded("ragged incidence matrix")
        for j, hit in enumerate(row):
            if hit:
                masks[j] |= 1 << v
    return masks


def intersection_closure(facets: Sequence[int]) -> set[int]:
    """All nonempty intersections of nonempty facet subsets, by breadth-first
    intersection with one facet at a time."""
    seen = set(facets)
    frontier = list(seen)
    while frontier:
        nxt = []
        for face in frontier:
            for g in facets:
                h = face & g
                if h and h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def face_lattice_from_incidence(incidence: Sequence[Sequence[bool]]) -> GradedLattice:
    """Face lattice whose elements are labelled by frozensets of vertex indices.

    The empty set is the bottom and the full vertex set the top.  The lower
    covers of a face ``F`` are the inclusion-maximal sets ``F & G`` over
    facets ``G`` not containing ``F``; this is where a non-polytopal
    incidence shows up as a rank inconsistency.
    """
    nv = len(incidence)
    if nv == 0:
        raise NotGraded("no vertices")
    fm = facet_masks(incidence)
    if len(set(fm)) != len(fm):
        raise NotGraded("repeated facet columns")
    rows = [tuple(r) for r in incidence]
    if len(set(rows)) != len(rows):
        raise NotGraded("repeated vertex rows")
    if any(not any(r) for r in rows):
        raise NotGraded("vertex on no facet")
    full = (1 << nv) - 1
    faces = intersection_closure(fm)
    faces.discard(full)
    faces.add(0)
    faces.add(full)
    # every single vertex must appear (each vertex is an intersection of facets)
    ordered = sorted(faces, key=lambda m: (m.bit_count(), m))
    index = {m: i for i, m in enumerate(ordered)}

    pairs = []
    for face in ordered:
        if face == 0:
            continue
        if face == full:
            cands = set(fm)
        else:
            cands = {face & g for g in fm if face & g != face}
        maximal = [c for c in cands if not any(c != o and c & o == c for o in cands)]
        for c in maximal:
            pairs.append((index[c], index[face]))
    labels = [frozenset(iter_bits(m)) for m in ordered]
    return GradedLattice.from_covers(None, pairs, labels, n=len(ordered))


def vertex_mask(label) -> int:
    return sum(1 << v for v in label)
