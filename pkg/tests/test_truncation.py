from fractions import Fraction

import pytest

from etpoly.constructions.generators import cross, cube, simplex
from etpoly.constructions.stacking import build_cross_stack, build_truncatable_stacked, stack
from etpoly.constructions.truncation import (
    CutSystem,
    certify_cuts,
    edge_tangent_cuts,
    midpoint_cuts,
    truncate_all,
)
from etpoly.errors import ApexNotBeneathOthers, ApexNotBeyond, BadParams, CutInvariantViolated, CutSearchFailed
from etpoly.et import d_construction
from etpoly.flags import flag_vector
from etpoly.geometry import Hyperplane
from etpoly.isomorphism import are_isomorphic
from etpoly.linalg import add, centroid, scale
from etpoly.poset import is_eulerian, simpliciality_profile


def test_stack_simplex():
    P = stack(simplex(4), 0)
    assert P.fvector()[0] == 6
    assert simpliciality_profile(P.lattice).max_k_simplicial == 3


def test_two_stackings():
    P = stack(stack(simplex(4), 0), 0)
    assert P.fvector()[0] == 7 and P.fvector()[3] == 11


def test_apex_beyond_two_facets_is_rejected():
    S = simplex(3)
    # a point beyond the facets opposite vertices 0 and 1
    far = add(centroid(S.vertices), scale(Fraction(3), (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))))
    F = next(j for j, fv in enumerate(S.facet_vertices) if 0 not in fv)
    with pytest.raises(ApexNotBeyond) as info:
        stack(S, F, far)
    assert isinstance(info.value, ApexNotBeneathOthers)
    with pytest.raises(ApexNotBeyond):
        stack(S, F, centroid(S.vertices))
    with pytest.raises(BadParams):
        stack(S, 99)


def test_midpoint_truncations():
    assert truncate_all(simplex(3), midpoint_cuts(simplex(3))).fvector() == (6, 12, 8)
    D = truncate_all(simplex(4), midpoint_cuts(simplex(4)))
    assert flag_vector(D.lattice).shape4() == (10, 30, 30, 10, 50)
    assert flag_vector(truncate_all(cross(4), midpoint_cuts(cross(4))).lattice).shape4() == (24, 96, 96, 24, 144)


def test_truncation_matches_combinatorial_model():
    for P in (simplex(3), cube(3), cube(4), cross(4)):
        D = truncate_all(P, midpoint_cuts(P))
        assert are_isomorphic(D.lattice, d_construction(P.lattice, 1))


def test_edge_tangent_cuts_on_cross():
    D = truncate_all(cross(4), edge_tangent_cuts(cross(4), Fraction(1, 2)))
    assert D.fvector() == (24, 96, 96, 24)


def test_bad_cut_systems():
    S = simplex(3)
    cs = midpoint_cuts(S)
    cuts = dict(cs.cuts)
    H = cuts[0]
    # move the cut of vertex 0 towards it: it now meets its edges elsewhere
    cuts[0] = Hyperplane(H.a, H.b + H.value(S.vertices[0]) / 10)
    with pytest.raises(CutInvariantViolated):
        certify_cuts(CutSystem(S, cuts))
    flipped = dict(cs.cuts)
    flipped[1] = cs.cuts[1].flipped()
    with pytest.raises(CutInvariantViolated):
        truncate_all(S, CutSystem(S, flipped))
    with pytest.raises(CutInvariantViolated):
        certify_cuts(CutSystem(S, {0: cs.cuts[0]}))


def test_midpoint_cuts_fail_after_stacking():
    P = stack(stack(simplex(3), 0), 0)
    with pytest.raises(CutSearchFailed):
        midpoint_cuts(P)
    fam = build_truncatable_stacked(3, [0, 0])
    assert fam.cuts is not None


def test_stacked_3d_plan_of_length_two():
    fam = build_truncatable_stacked(3, [0, 0])
    assert fam.polytope.fvector() == (6, 12, 8)
    D = truncate_all(fam.polytope, fam.cuts)
    assert are_isomorphic(D.lattice, d_construction(fam.polytope.lattice, 1))
    assert D.fvector() == (12, 24, 14)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_stacked_4d_flags(n):
    fam = build_truncatable_stacked(4, [0] * n)
    D = truncate_all(fam.polytope, fam.cuts)
    assert flag_vector(D.lattice).shape4() == (10 + 4 * n, 30 + 18 * n, 30 + 18 * n, 10 + 4 * n, 50 + 26 * n)


def test_other_stacking_plans():
    fam = build_truncatable_stacked(4, [0, 3, 5])
    D = truncate_all(fam.polytope, fam.cuts)
    assert D.fvector() == (22, 84, 84, 22)
    assert is_eulerian(D.lattice)


def test_cross_stacks():
    one = build_cross_stack(1)
    assert one.strategy == "midpoint"
    two = build_cross_stack(2)
    assert flag_vector(two.polytope.lattice).shape4() == (12, 42, 60, 30, 120)
    D = truncate_all(two.polytope, two.cuts)
    assert flag_vector(D.lattice).shape4() == (42, 180, 180, 42, 264)
