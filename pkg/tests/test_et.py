from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from etpoly.constructions.generators import cross, cube, prism_over_simplex, simplex
from etpoly.errors import BadT
from etpoly.et import (
    EtElement,
    binomial_lower_bound_holds,
    d_construction,
    et,
    et_fvector_formula,
    et_rank,
    et_two_simple_criterion,
    predicted_max_simplicial,
)
from etpoly.flags import flag_vector
from etpoly.isomorphism import are_isomorphic
from etpoly.poset import GradedPoset, boolean_lattice, is_eulerian, opposite


def brute_et_b(n, t):
    """E_t of the boolean lattice on ``n`` atoms, built from subsets directly.

    Each element is recorded as the set of ``(t+1)``-subsets it contains:
    the empty set, singletons ``{y}``, and the sets cut out by intervals
    ``[x, z]`` of subsets.  Larger sets sit lower in the order.
    """
    atoms = range(n)
    mids = [frozenset(c) for c in combinations(atoms, t + 1)]
    subsets = [frozenset(c) for r in range(n + 1) for c in combinations(atoms, r)]
    elements = {frozenset()}
    for y in mids:
        elements.add(frozenset([y]))
    for x in subsets:
        for z in subsets:
            if len(x) < t + 1 < len(z) and x < z:
                elements.add(frozenset(y for y in mids if x <= y <= z))
    return elements


def subset_model_poset(n, t):
    """The subset model as a graded poset ordered by reverse inclusion."""
    elems = sorted(brute_et_b(n, t), key=len, reverse=True)
    below = {a: [b for b in elems if a < b] for a in elems}
    covers = []
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if b < a and not any(b < c < a for c in below[b]):
                covers.append((i, j))
    return GradedPoset.from_covers(None, covers)


def test_e1_of_b4_counts():
    E = et(boolean_lattice(4), 1)
    assert [len(E.level(r)) for r in range(5)] == [1, 8, 12, 6, 1]


@pytest.mark.parametrize("n,t", [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3)])
def test_matches_subset_model(n, t):
    E = et(boolean_lattice(n), t)
    assert len(E) == len(brute_et_b(n, t))
    assert are_isomorphic(E, subset_model_poset(n, t))


def test_bad_t():
    with pytest.raises(BadT):
        et(boolean_lattice(4), 3)
    with pytest.raises(BadT):
        et(boolean_lattice(4), -1)
    with pytest.raises(BadT):
        et_two_simple_criterion(boolean_lattice(5), 0)


def test_rank_of_elements():
    L = boolean_lattice(4)
    assert et_rank(L, EtElement.empty()) == 4
    assert et_rank(L, EtElement.singleton(L.level(2)[0])) == 3
    assert et_rank(L, EtElement.interval(L.bottom, L.top)) == 0


def test_atoms_and_coatoms():
    L = cube(4).lattice
    E = et(L, 1)
    assert all(E.labels[c].kind == "singleton" for c in E.level(4))
    assert all(E.labels[a].kind == "interval" for a in E.level(1))
    assert len(E.level(4)) == len(L.level(2))
    # a coatom {y} covers [x, z] for the two vertices x and three squares z of the edge y
    y = E.level(4)[0]
    assert len(E.lower[y]) == 2 * 3


def test_formula_matches_construction_on_polytopes():
    for P in (simplex(4), cube(4), cross(4), prism_over_simplex(4), cube(5)):
        L = P.lattice
        for t in range(L.dim):
            E = et(L, t)
            assert et_fvector_formula(L, t) == tuple(len(E.level(r)) for r in range(E.length + 1))


def test_two_simple_examples():
    assert et_two_simple_criterion(simplex(4).lattice, 1)
    assert not et_two_simple_criterion(cube(4).lattice, 1)
    assert et_two_simple_criterion(cube(4).lattice, 2)


def test_predicted_simpliciality():
    assert predicted_max_simplicial(simplex(4).lattice, 1) == 2
    assert predicted_max_simplicial(cube(4).lattice, 1) == 2
    assert predicted_max_simplicial(cube(5).lattice, 1) == 3
    assert predicted_max_simplicial(cross(5).lattice, 1) == 1


def test_d_construction_examples():
    D = d_construction(simplex(3).lattice, 1)
    assert [len(D.level(r)) for r in range(1, 4)] == [6, 12, 8]
    assert flag_vector(d_construction(simplex(4).lattice, 1)).shape4() == (10, 30, 30, 10, 50)
    assert are_isomorphic(d_construction(cube(4).lattice, 0), cube(4).lattice)
    with pytest.raises(BadT):
        d_construction(cube(4).lattice, 4)


@given(st.integers(min_value=3, max_value=6), st.data())
def test_eulerian_preserved_on_boolean(n, data):
    t = data.draw(st.integers(min_value=0, max_value=n - 2))
    E = et(boolean_lattice(n), t)
    assert is_eulerian(E) and binomial_lower_bound_holds(E)


@given(st.integers(min_value=3, max_value=5), st.data())
def test_duality_on_cubes(d, data):
    t = data.draw(st.integers(min_value=0, max_value=d - 1))
    L = cube(d).lattice
    assert are_isomorphic(et(L, t), et(opposite(L), d - 1 - t))
