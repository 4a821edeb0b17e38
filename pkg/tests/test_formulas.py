
import pytest
from hypothesis import given, strategies as st

from etpoly.constructions.generators import cross
from etpoly.errors import OutOfDomain
from etpoly.et import et
from etpoly.formulas import (
    FAMILIES,
    consistency_suite,
    d1_of_4polytope,
    euler_ok,
    eval_family,
    general_q_line,
    q_table,
    simplicial_flags_via_formula,
)


def test_published_values():
    assert eval_family("D1P", 1) == (14, 48, 48, 14, 76)
    assert eval_family("D1C", 1) == (24, 96, 96, 24, 144)
    assert eval_family("D1C", 3)[:4] == (60, 264, 264, 60)
    assert eval_family("D1C", 42)[:4] == (762, 3540, 3540, 762)
    assert eval_family("D1C", 577)[0] == 10392
    assert eval_family("C4n", 2) == (12, 42, 60, 30, 120)
    assert eval_family("EKZ", 13) == (8712, 43920, 43920, 8712)
    for n in range(1, 101):
        assert eval_family("EQ", n, 4) == (54 * n - 30, 252 * n - 156, 252 * n - 156, 54 * n - 30)


@pytest.mark.parametrize("d", [4, 5, 6, 7])
def test_q_at_one_is_the_cross_polytope(d):
    assert eval_family("Q", 1, d) == cross(d).fvector()


@pytest.mark.parametrize("d", [4, 5])
def test_eq_at_one_is_e_of_the_cross_polytope(d):
    E = et(cross(d).lattice, d - 3)
    assert eval_family("EQ", 1, d) == tuple(len(E.level(r)) for r in range(1, d + 1))


def test_ridge_line():
    assert q_table(4)[2] == (-52, 84)
    a, b = general_q_line(4, 2)
    broken = list(eval_family("Q", 3, 4))
    broken[2] = a * 3 + b * 2
    assert not euler_ok(broken)


@given(st.integers(min_value=4, max_value=9), st.integers(min_value=1, max_value=200))
def test_euler_relation(d, n):
    assert euler_ok(eval_family("Q", n, d))
    assert euler_ok(eval_family("EQ", n, d))
    assert eval_family("EQ", n, d) == simplicial_flags_via_formula(eval_family("Q", n, d), d - 3)


def test_truncation_formula():
    # vertex truncation of the cross polytope and of a 4-simplex
    assert d1_of_4polytope(8, 24, 32, 16, 64) == (24, 96, 96, 24)
    assert d1_of_4polytope(5, 10, 10, 5, 20) == (10, 30, 30, 10)


def test_domain_errors():
    with pytest.raises(OutOfDomain):
        eval_family("D1C", 0)
    with pytest.raises(OutOfDomain):
        eval_family("Q", 2)
    with pytest.raises(OutOfDomain):
        eval_family("nope", 1)


def test_symbolic_forms():
    assert "84n-52" in FAMILIES["Q"].symbolic(4)
    assert FAMILIES["D1P"].symbolic().startswith("(4n+10")


def test_consistency_report():
    rep = consistency_suite(built={("D1C", 3): (60, 264, 264, 60)})
    assert rep.ok
    assert all(line.startswith(("PASS", "NOTE")) for line in rep.lines())
