#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for LCT-polytopes, thresholds and their transforms
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from geometry import HalfSpace, HPolyhedron, box, canonicalize, contains_polyhedron, hull
from lct import (LctManager, LctPolytope, ResolutionData, ResolutionDataError, containment_bounds,
                 cor1_shift_check, embed_coordinates, expected_line_and_parabola, expected_two_cusps,
                 is_down_closed, lct_polytope_from_resolution, lct_polytope_monomial,
                 lct_polytope_principal, lct_threshold, line_and_parabola, membership_oracle,
                 mixed_threshold_profile, order_bounds_check, plane_curve_bound_check, power_rescale,
                 prism_extend, toric_resolution_data, two_cusps)
from monomial import (ImproperIdealError, MonomialIdeal, MonomialIdealError, lift_with_power,
                      maximal_ideal_power, power, product, pullback)

F = Fraction
X = MonomialIdeal.of((1, 0))
Y = MonomialIdeal.of((0, 1))
X2Y3 = MonomialIdeal.of((2, 0), (0, 3))
X3Y2 = MonomialIdeal.of((3, 0), (0, 2))


def polytope(*rows, nonnegative=True):
    return canonicalize(HPolyhedron(len(rows[0][0]), tuple(HalfSpace(n, b) for n, b in rows), nonnegative))


# ---------------------------------------------------------------- membership

def test_membership_oracle():
    assert membership_oracle((X, Y), (0, 0))
    assert membership_oracle((X, Y), (1, 1))
    assert not membership_oracle((X, Y), (1, 1 + F(1, 1000)))
    assert membership_oracle((X2Y3,), (F(5, 6),))
    assert not membership_oracle((X2Y3,), (F(5, 6) + F(1, 1000),))


def test_membership_oracle_rejects_bad_input():
    with pytest.raises(ImproperIdealError):
        membership_oracle((MonomialIdeal(2, ()),), (0,))
    with pytest.raises(MonomialIdealError):
        membership_oracle((X, MonomialIdeal.of((1,))), (0, 0))
    with pytest.raises(ValueError):
        membership_oracle((X,), (-1,))


# ---------------------------------------------------------------- constructions

def test_lct_polytope_of_coordinate_ideals():
    P = lct_polytope_monomial((X, Y))
    assert P.h == canonicalize(box((1, 1)))
    assert P.provenance == "monomial"


def test_lct_polytope_of_single_ideal():
    assert lct_polytope_monomial((X2Y3,)).h == polytope(((6,), 5))


def test_lct_polytope_of_two_ideals_has_the_threshold_box():
    P = lct_polytope_monomial((X2Y3, X3Y2))
    assert P.contains((F(5, 6), 0)) and P.contains((0, F(5, 6)))
    assert not P.contains((F(5, 6), F(5, 6)))


def test_principal_polytope():
    assert lct_polytope_principal(((1, 0), (0, 1))).h == canonicalize(box((1, 1)))
    assert lct_polytope_principal(((1, 0), (1, 2))).h == polytope(((1, 1), 1), ((0, 2), 1))
    assert lct_polytope_principal(((2, 3),)).h == polytope(((3,), 1))
    with pytest.raises(ImproperIdealError):
        lct_polytope_principal(((0, 0),))


def test_principal_matches_monomial_path():
    rows = ((1, 0), (1, 2))
    ideals = tuple(MonomialIdeal.of(row) for row in rows)
    assert lct_polytope_principal(rows) == lct_polytope_monomial(ideals)


def test_resolution_fixtures():
    assert lct_polytope_from_resolution(line_and_parabola()).h == expected_line_and_parabola()
    assert lct_polytope_from_resolution(two_cusps()).h == expected_two_cusps()
    single = ResolutionData.from_rows([("E", 0, (1,))])
    assert lct_polytope_from_resolution(single).h == canonicalize(box((1,)))


def test_resolution_local_and_global():
    data = ResolutionData.from_rows([("D", 0, (1,)), ("F", 0, (2,))], through_x=[0])
    assert lct_polytope_from_resolution(data, local=True).h == canonicalize(box((1,)))
    assert lct_polytope_from_resolution(data, local=False).h == canonicalize(box((F(1, 2),)))


def test_resolution_data_validation():
    with pytest.raises(ResolutionDataError):
        ResolutionData((0,), ((1,), (1,)), (0,))
    with pytest.raises(ResolutionDataError):
        ResolutionData((-1,), ((1,),), (0,))
    with pytest.raises(ResolutionDataError):
        ResolutionData((0, 0), ((1, 0), (1, 0)), (0, 1))


@pytest.mark.parametrize("ideals", [(X, Y), (X2Y3,), (X2Y3, X3Y2), (maximal_ideal_power(2, 3), X)])
def test_toric_data_reproduces_the_monomial_polytope(ideals):
    assert lct_polytope_from_resolution(toric_resolution_data(ideals)) == lct_polytope_monomial(ideals)


def test_embed_coordinates():
    segment = embed_coordinates(polytope(((6,), 5)), [1], 2)
    assert segment.contains((0, F(5, 6)))
    assert not segment.contains((F(1, 10), 0))
    origin = embed_coordinates(polytope(((6,), 5)), [], 2)
    assert origin.contains((0, 0)) and not origin.contains((0, F(1, 2)))


# ---------------------------------------------------------------- thresholds

@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_threshold_of_maximal_ideal_power(n, d):
    assert lct_threshold(maximal_ideal_power(n, d)) == F(n, d)


@pytest.mark.parametrize("m", range(2, 7))
def test_threshold_of_binomial_ideal(m):
    assert lct_threshold(MonomialIdeal.of((2, 0), (0, m))) == F(1, 2) + F(1, m)


def test_order_bounds():
    for a in (X2Y3, maximal_ideal_power(3, 2), MonomialIdeal.of((1, 1)), MonomialIdeal.of((4, 0), (1, 3))):
        assert order_bounds_check(a)


def test_mixed_threshold_profile():
    assert mixed_threshold_profile(X2Y3, 0) == F(6, 5)
    x = MonomialIdeal.of((1,))
    for t in (F(0), F(1, 2), F(3)):
        assert mixed_threshold_profile(x, t) == 1 + t
    with pytest.raises(ValueError):
        mixed_threshold_profile(x, -1)


# ---------------------------------------------------------------- transforms

def test_power_rescale():
    square = lct_polytope_monomial((X, Y))
    rescaled = power_rescale(square, (2, 3))
    assert rescaled == lct_polytope_monomial((MonomialIdeal.of((2, 0)), MonomialIdeal.of((0, 3))))
    assert power_rescale(lct_polytope_monomial((X2Y3,)), (2,)).h == polytope(((12,), 5))
    with pytest.raises(ValueError):
        power_rescale(square, (0, 1))


def test_containment_bounds():
    report = containment_bounds((X, Y))
    assert report.holds
    report = containment_bounds((X2Y3, X3Y2))
    assert report.holds
    assert report.thresholds == (F(5, 6), F(5, 6))


def test_down_closedness():
    assert is_down_closed(lct_polytope_monomial((X, Y)))
    assert is_down_closed(LctPolytope(expected_line_and_parabola()))
    assert not is_down_closed(LctPolytope(hull([(0, 1), (1, 1), (1, 0)])))


def test_prism_extend():
    segment = lct_polytope_monomial((MonomialIdeal.of((1, 0)),))
    assert prism_extend(segment, 1, 0) == lct_polytope_monomial((lift_with_power(segment.source[0], 1),))
    square = lct_polytope_monomial((X, Y))
    prism = prism_extend(square, 2, 0)
    assert prism.h == canonicalize(box((F(3, 2), 1)))
    assert prism == lct_polytope_monomial((lift_with_power(X, 2), pullback(Y)))


def test_cor1_shift():
    a = (MonomialIdeal.of((2, 0)),)
    b = (MonomialIdeal.of((2, 0), (0, 4)),)
    assert cor1_shift_check(a, b, 4)
    with pytest.raises(MonomialIdealError):
        cor1_shift_check((X,), (Y,), 2)


def test_plane_curve_bounds():
    assert plane_curve_bound_check(LctPolytope(expected_line_and_parabola()))
    assert plane_curve_bound_check(LctPolytope(expected_two_cusps()))
    assert plane_curve_bound_check(lct_polytope_monomial((X, Y)))
    assert plane_curve_bound_check(lct_polytope_principal(((1, 0), (1, 0))))
    assert not plane_curve_bound_check(LctPolytope(canonicalize(box((2, 1)))))


# ---------------------------------------------------------------- manager

def test_manager_queries():
    manager = LctManager()
    assert manager.from_ideals((X, Y)) is manager.from_ideals((X, Y))
    assert manager.threshold((X2Y3,)) == F(5, 6)
    assert manager.threshold((X, X2Y3), coordinate=1) == F(5, 6)
    with pytest.raises(ValueError):
        manager.threshold((X, Y))
    square = manager.from_ideals((X, Y))
    assert manager.distance_sq(square, LctPolytope(expected_line_and_parabola())) == F(1, 8)
    assert all(manager.sanity_report((X2Y3, X3Y2)).values())


# ---------------------------------------------------------------- properties

@st.composite
def ideal_tuples(draw):
    n = draw(st.integers(min_value=1, max_value=2))
    r = draw(st.integers(min_value=1, max_value=2))
    exponent = st.tuples(*[st.integers(min_value=0, max_value=4)] * n).filter(any)
    return tuple(MonomialIdeal(n, tuple(draw(st.lists(exponent, min_size=1, max_size=3)))) for _ in range(r))


@settings(max_examples=20, deadline=None)
@given(ideal_tuples(), st.data())
def test_oracle_agrees_with_facet_description(ideals, data):
    P = lct_polytope_monomial(ideals)
    quarter = st.integers(min_value=0, max_value=8).map(lambda k: F(k, 4))
    lam = data.draw(st.tuples(*[quarter] * len(ideals)))
    assert P.contains(lam) == membership_oracle(ideals, lam)
    for v in P.vertices():
        assert membership_oracle(ideals, v)


@settings(max_examples=20, deadline=None)
@given(ideal_tuples())
def test_structural_properties(ideals):
    P = lct_polytope_monomial(ideals)
    n = ideals[0].n
    assert P.contains((0,) * len(ideals))
    assert is_down_closed(P)
    assert contains_polyhedron(canonicalize(box((n,) * len(ideals))), P.h)
    assert containment_bounds(ideals).holds


@settings(max_examples=15, deadline=None)
@given(ideal_tuples(), st.data())
def test_powers_rescale_the_polytope(ideals, data):
    m = data.draw(st.tuples(*[st.integers(min_value=1, max_value=3)] * len(ideals)))
    rescaled = power_rescale(lct_polytope_monomial(ideals), m)
    assert rescaled == lct_polytope_monomial(tuple(power(a, k) for a, k in zip(ideals, m)))


@settings(max_examples=15, deadline=None)
@given(ideal_tuples(), st.data())
def test_smaller_ideals_give_smaller_polytopes(ideals, data):
    n = ideals[0].n
    i = data.draw(st.integers(min_value=0, max_value=len(ideals) - 1))
    j = data.draw(st.integers(min_value=0, max_value=n - 1))
    x_j = MonomialIdeal(n, (tuple(int(k == j) for k in range(n)),))
    smaller = ideals[:i] + (product(ideals[i], x_j),) + ideals[i + 1:]
    assert contains_polyhedron(lct_polytope_monomial(ideals).h, lct_polytope_monomial(smaller).h)


@st.composite
def principal_rows(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    r = draw(st.integers(min_value=1, max_value=3))
    row = st.tuples(*[st.integers(min_value=0, max_value=5)] * n).filter(any)
    return tuple(draw(row) for _ in range(r))


@settings(max_examples=20, deadline=None)
@given(principal_rows())
def test_principal_paths_agree(rows):
    ideals = tuple(MonomialIdeal(len(rows[0]), (row,)) for row in rows)
    P = lct_polytope_principal(rows)
    assert P == lct_polytope_monomial(ideals)
    assert P == lct_polytope_from_resolution(toric_resolution_data(ideals))
