from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from etpoly.linalg import Q, affine_rank, nullspace, rank, rref, solve
from etpoly.lp import in_relative_interior, maximize

small = st.integers(min_value=-4, max_value=4)
matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda m: st.integers(min_value=1, max_value=5).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def test_q_refuses_floats():
    assert Q(3) == 3 and Q("1/3") == Fraction(1, 3)
    with pytest.raises(TypeError):
        Q(0.5)


@given(matrices)
def test_rank_matches_sympy(rows):
    assert rank([[Fraction(x) for x in r] for r in rows]) == sympy.Matrix(rows).rank()


@given(matrices)
def test_nullspace_matches_sympy(rows):
    n = len(rows[0])
    ns = nullspace([[Fraction(x) for x in r] for r in rows], n)
    assert len(ns) == len(sympy.Matrix(rows).nullspace())
    for v in ns:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@given(matrices)
def test_rref_matches_sympy(rows):
    R, piv = rref([[Fraction(x) for x in r] for r in rows])
    S, spiv = sympy.Matrix(rows).rref()
    assert tuple(piv) == tuple(spiv)
    for i in range(len(piv)):
        assert [sympy.Rational(x.numerator, x.denominator) for x in R[i]] == list(S.row(i))


def test_solve_and_affine_rank():
    assert solve([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]], [Fraction(3), Fraction(5)]) == (
        Fraction(4, 5),
        Fraction(7, 5),
    )
    assert solve([[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]], [Fraction(1), Fraction(3)]) is None
    assert affine_rank([(0, 0, 0), (1, 0, 0), (2, 0, 0)]) == 1


def test_lp_small_problems():
    # max x + y s.t. x + y + s = 4, x + t = 3
    res = maximize([1, 1, 0, 0], [[1, 1, 1, 0], [1, 0, 0, 1]], [4, 3])
    assert res.status == "optimal" and res.value == 4
    assert maximize([1], [[1]], [-1]).status == "infeasible"
    assert maximize([1, 0], [[1, -1]], [0]).status == "unbounded"


@given(st.lists(st.integers(min_value=-6, max_value=6), min_size=3, max_size=3))
def test_lp_over_a_scaled_simplex(c):
    # the simplex x1 + x2 + x3 = 2: the optimum is 2 * max(c)
    res = maximize(c, [[1, 1, 1]], [2])
    assert res.value == 2 * max(c)


def test_relative_interior():
    tri = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    assert in_relative_interior((Fraction(1, 3), Fraction(1, 3)), tri)
    assert not in_relative_interior((Fraction(1, 2), Fraction(0)), tri)
    assert not in_relative_interior((Fraction(1), Fraction(1)), tri)
    seg = [(Fraction(0),), (Fraction(2),)]
    assert in_relative_interior((Fraction(1),), seg)
