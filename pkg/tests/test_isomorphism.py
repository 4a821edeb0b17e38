import random

from hypothesis import given, strategies as st

from etpoly.constructions.generators import cross, cube, simplex
from etpoly.et import et
from etpoly.isomorphism import are_isomorphic, find_isomorphism
from etpoly.poset import boolean_lattice, opposite, relabel


def test_cube_is_not_cross_but_is_its_dual():
    assert not are_isomorphic(cube(4).lattice, cross(4).lattice)
    assert are_isomorphic(cube(4).lattice, opposite(cross(4).lattice))


def test_e2_of_cube_is_self_dual():
    E = et(cube(4).lattice, 2)
    phi = find_isomorphism(E, opposite(E))
    assert phi is not None and len(phi) == len(E)


def test_simplex_face_lattice_is_boolean():
    assert are_isomorphic(simplex(5).lattice, boolean_lattice(6))


def test_witness_preserves_covers():
    A = cube(3).lattice
    B = opposite(cross(3).lattice)
    phi = find_isomorphism(A, B)
    assert {(phi[a], phi[b]) for a, b in A.covers()} == set(B.covers())


@given(st.integers(min_value=0, max_value=10**6), st.sampled_from(["cube", "cross", "e1"]))
def test_random_relabelling_is_isomorphic(seed, kind):
    L = {"cube": cube(3).lattice, "cross": cross(4).lattice, "e1": et(simplex(4).lattice, 1)}[kind]
    perm = list(range(len(L)))
    random.Random(seed).shuffle(perm)
    M = relabel(L, perm)
    assert are_isomorphic(L, M)
    assert not are_isomorphic(opposite(L), M) or are_isomorphic(L, opposite(L))
