from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from etpoly.errors import NoBoundedBottom, NoBoundedTop, NotComparable, NotEulerian, NotGraded, RankSkip
from etpoly.constructions.generators import cross, cube, simplex
from etpoly.faces import face_lattice_from_incidence
from etpoly.isomorphism import are_isomorphic
from etpoly.poset import (
    GradedPoset,
    boolean_lattice,
    chain_poset,
    interval,
    is_boolean_interval,
    is_eulerian,
    is_lattice,
    moebius,
    opposite,
    simpliciality_profile,
)
from etpoly.et import et


def octahedron_incidence():
    verts = [tuple(s * int(i == j) for j in range(3)) for i in range(3) for s in (1, -1)]
    signs = [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    return [[sum(x * e for x, e in zip(v, s)) == 1 for s in signs] for v in verts]


def transitive_order(P):
    """Independent order relation: closure of the cover pairs."""
    n = len(P)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in P.covers():
        leq[a][b] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return leq


def test_three_chain_is_valid():
    P = GradedPoset.from_covers([0, 1, 2], [(0, 1), (1, 2)])
    assert P.length == 2 and len(P) == 3


def test_boolean_lattice_b3():
    B = boolean_lattice(3)
    assert len(B) == 8 and B.length == 3


def test_rank_skip_detected():
    with pytest.raises(RankSkip):
        GradedPoset.from_covers([0, 2], [(0, 1)])
    assert issubclass(RankSkip, NotGraded)


def test_missing_bounds():
    with pytest.raises(NoBoundedTop):
        GradedPoset.from_covers([0, 1, 1], [(0, 1), (0, 2)])
    with pytest.raises(NoBoundedBottom):
        GradedPoset.from_covers([0, 0, 1], [(0, 2), (1, 2)])


def test_unequal_chain_lengths_are_not_graded():
    # bottom < a < b < top and bottom < c < top, ranks inferred
    with pytest.raises(NotGraded):
        GradedPoset.from_covers(None, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def test_square_face_lattice():
    inc = [[True, False, False, True], [True, True, False, False], [False, True, True, False], [False, False, True, True]]
    assert len(face_lattice_from_incidence(inc)) == 10


def test_tetrahedron_face_lattice_is_b4():
    inc = [[i != j for j in range(4)] for i in range(4)]
    L = face_lattice_from_incidence(inc)
    assert len(L) == 16 and are_isomorphic(L, boolean_lattice(4))


def test_octahedron_closure_matches_brute_force():
    inc = octahedron_incidence()
    L = face_lattice_from_incidence(inc)
    facet_sets = [frozenset(v for v in range(6) if inc[v][j]) for j in range(8)]
    brute = {frozenset(range(6)), frozenset()}
    for r in range(1, 9):
        for S in combinations(facet_sets, r):
            brute.add(frozenset.intersection(*S))
    assert len(brute) == 28
    assert set(L.labels) == brute
    assert [len(L.level(r)) for r in range(5)] == [1, 6, 12, 8, 1]


def test_opposite_reverses_fvector_and_b3_selfdual():
    B = boolean_lattice(3)
    assert are_isomorphic(opposite(B), B)
    L = cube(4).lattice
    f = [len(L.level(r)) for r in range(L.length + 1)]
    g = [len(opposite(L).level(r)) for r in range(L.length + 1)]
    assert g == f[::-1]


def test_interval_cases():
    B = boolean_lattice(3)
    assert are_isomorphic(interval(B, B.bottom, B.top), B)
    L = cube(3).lattice
    v = L.level(1)[0]
    I = interval(L, v, L.top)
    assert [len(I.level(r)) for r in range(I.length + 1)] == [1, 3, 3, 1]
    assert len(interval(L, v, v)) == 1
    with pytest.raises(NotComparable):
        interval(L, L.level(1)[0], L.level(1)[1])


def test_is_lattice_cases():
    assert is_lattice(boolean_lattice(4))
    bowtie = GradedPoset.from_covers([0, 1, 1, 2, 2, 3], [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])
    assert not is_lattice(bowtie)
    for P in (simplex(4), cube(4), cross(4)):
        assert is_lattice(P.lattice)


def test_is_eulerian_cases():
    for n in range(1, 6):
        assert is_eulerian(boolean_lattice(n))
    assert not is_eulerian(chain_poset(2))


def test_octahedron_eulerian_by_brute_force():
    L = face_lattice_from_incidence(octahedron_incidence())
    leq = transitive_order(L)
    ok = True
    for x in range(len(L)):
        for y in range(len(L)):
            if x != y and leq[x][y]:
                between = [z for z in range(len(L)) if leq[x][z] and leq[z][y]]
                odd = sum(L.ranks[z] % 2 for z in between)
                ok &= odd * 2 == len(between)
    assert ok and is_eulerian(L)


def test_moebius_cases():
    for n in range(1, 6):
        B = boolean_lattice(n)
        assert moebius(B, B.bottom, B.top) == (-1) ** n
        assert moebius(B, 3 % len(B), 3 % len(B)) == 1
    C = chain_poset(2)
    assert moebius(C, 0, 2) == 0
    with pytest.raises(NotComparable):
        moebius(C, 2, 0)


def test_moebius_matches_naive_recursion_on_cube():
    L = cube(3).lattice
    leq = transitive_order(L)
    memo = {}

    def mu(x, y):
        if (x, y) not in memo:
            if x == y:
                memo[(x, y)] = 1
            else:
                memo[(x, y)] = -sum(mu(x, z) for z in range(len(L)) if leq[x][z] and leq[z][y] and z != y)
        return memo[(x, y)]

    for x in range(len(L)):
        for y in range(len(L)):
            if leq[x][y]:
                assert moebius(L, x, y) == mu(x, y) == (-1) ** (L.ranks[y] - L.ranks[x])


def test_simpliciality_profiles():
    for d in (3, 4, 5):
        assert simpliciality_profile(simplex(d).lattice) == (d - 1, d - 1, True)
    assert simpliciality_profile(cross(4).lattice) == (3, 1, False)
    assert simpliciality_profile(et(boolean_lattice(5), 1)) == (2, 2, False)
    with pytest.raises(NotEulerian):
        simpliciality_profile(chain_poset(2))


@given(st.integers(min_value=1, max_value=6))
def test_boolean_intervals_in_boolean_lattice(n):
    B = boolean_lattice(n)
    assert is_boolean_interval(B, B.bottom, B.top)


def test_binomial_bound_and_equality_forces_boolean(corpus):
    from math import comb

    for name, L in corpus:
        ell = L.length
        for i in range(ell + 1):
            assert len(L.level(i)) >= comb(ell, i), name
        if any(len(L.level(i)) == comb(ell, i) for i in range(1, ell)):
            assert simpliciality_profile(L).is_boolean, name


def test_moebius_sign_on_eulerian_corpus(corpus):
    for name, L in corpus[:8]:
        for x in range(0, len(L), 7):
            for y in range(len(L)):
                if L.leq(x, y):
                    assert moebius(L, x, y) == (-1) ** (L.ranks[y] - L.ranks[x]), name
