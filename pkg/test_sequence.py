#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for polytope sequences, limit detection and probes
"""

from fractions import Fraction

import pytest

from geometry import box, canonicalize, contains_polyhedron
from lct import LctPolytope, lct_polytope_monomial
from monomial import MonomialIdeal, maximal_ideal_power, power, truncate
from sequence import (SequenceError, SequenceLab, ascending_family, constant_family, cor2_check,
                      cor2_values, descending, detect_stationary_limit, ex11_family, function_family,
                      limit_membership_bound_check, order_divergence_probe, tail_intersection,
                      truncation_family)

F = Fraction
X = MonomialIdeal.of((1, 0))
Y = MonomialIdeal.of((0, 1))
X2Y3 = MonomialIdeal.of((2, 0), (0, 3))


def square(side):
    return LctPolytope(canonicalize(box((side, side))))


def test_sequence_indices_are_validated():
    with pytest.raises(SequenceError):
        function_family(square, [])
    with pytest.raises(SequenceError):
        function_family(square, [2, 1])
    seq = function_family(square, range(1, 4))
    with pytest.raises(SequenceError):
        seq.term(7)


def test_threaded_materialization_matches_sequential():
    seq = truncation_family((X2Y3,), range(1, 7))
    threaded = truncation_family((X2Y3,), range(1, 7)).materialize(threads=4)
    assert threaded == seq.materialize()


def test_tail_intersection_of_nested_boxes():
    seq = function_family(lambda m: square(1 + F(1, m)), range(1, 6))
    assert tail_intersection(seq, 1) == square(F(6, 5)).h
    assert descending(seq.materialize())


def test_constant_sequence_is_stationary_from_the_start():
    report = detect_stationary_limit(constant_family(square(1), range(1, 5)), window=2)
    assert report.stationary
    assert report.m0 == 1
    assert report.sq_distance_profile == (0, 0, 0, 0)


def test_eventually_constant_sequence():
    seq = function_family(lambda m: square(F(1, 2)) if m == 1 else square(1), range(1, 6))
    report = detect_stationary_limit(seq, window=3)
    assert report.stationary
    assert report.m0 == 2
    assert report.candidate_limit == square(1).h
    assert report.sq_distance_profile[0] == F(1, 2)


def test_truncation_family_stabilizes():
    seq = truncation_family((X2Y3,), range(1, 7))
    assert [P.h for P in seq.materialize()[:3]] == [canonicalize(box((2,))), canonicalize(box((1,))),
                                                   canonicalize(box((F(5, 6),)))]
    report = detect_stationary_limit(seq, window=3)
    assert report.stationary
    assert report.m0 == 3
    assert report.candidate_limit == lct_polytope_monomial((X2Y3,)).h
    assert report.support == (0,)


def test_window_validation():
    seq = truncation_family((X2Y3,), range(1, 3))
    with pytest.raises(SequenceError):
        detect_stationary_limit(seq, window=3)
    with pytest.raises(SequenceError):
        detect_stationary_limit(seq, window=0)


def test_ascending_family():
    seq = ascending_family((X2Y3,), range(1, 5), start=4)
    terms = seq.materialize()
    assert terms[0].h == canonicalize(box((F(5, 6),)))
    assert terms[-1].h == canonicalize(box((2,)))
    assert not descending(terms)


def test_ascending_family_reaches_a_stationary_tail():
    seq = ascending_family((X2Y3,), range(1, 7))
    terms = seq.materialize()
    assert all(contains_polyhedron(Q.h, P.h) for P, Q in zip(terms, terms[1:]))
    report = detect_stationary_limit(seq, window=3)
    assert report.stationary
    assert report.m0 == 3
    assert report.candidate_limit == canonicalize(box((2,)))
    assert SequenceLab().run("ascending", (X2Y3,)).report.stationary
    with pytest.raises(SequenceError):
        ascending_family((X2Y3,), range(1, 4), start=0)


def test_window_must_leave_a_term_before_it():
    seq = constant_family(square(1), range(1, 4))
    with pytest.raises(SequenceError):
        detect_stationary_limit(seq, window=3)
    assert detect_stationary_limit(seq, window=2).stationary
    with pytest.raises(SequenceError):
        SequenceLab(window=4, prefix=4).run("truncate", (X2Y3,))


def test_ex11_family_is_strictly_descending():
    seq = ex11_family((X, Y), range(1, 5), axis=0)
    terms = seq.materialize()
    assert terms[1].h == canonicalize(box((F(3, 2), 1)))
    assert descending(terms)
    assert len(set(P.h for P in terms)) == 4
    with pytest.raises(SequenceError):
        ex11_family((X, Y), range(1, 5), axis=2)


def test_lab_runs_ex11_without_stationarity():
    run = SequenceLab(window=2, prefix=4).run("ex11", (X, Y))
    assert not run.report.stationary
    assert run.report.m0 is None
    assert run.base_sq_distance_profile == (1, F(1, 4), F(1, 9), F(1, 16))


def test_lab_rejects_bad_requests():
    lab = SequenceLab(window=5, prefix=8)
    with pytest.raises(SequenceError):
        lab.run("truncate", (X2Y3,), prefix=3)
    with pytest.raises(SequenceError):
        lab.run("spiral", (X2Y3,))


def test_truncation_of_non_primary_ideal_never_stabilizes():
    run = SequenceLab(window=3, prefix=6).run("truncate", (MonomialIdeal.of((2, 0)),))
    assert not run.report.stationary
    assert run.report.candidate_limit == canonicalize(box((F(1, 2) + F(1, 6),)))


def test_limit_membership_bound():
    seq = truncation_family((X2Y3,), range(1, 6))
    assert limit_membership_bound_check(seq, lct_polytope_monomial((X2Y3,)).h)
    assert not limit_membership_bound_check(seq, canonicalize(box((F(1, 2),))))
    prisms = ex11_family((X, Y), range(1, 5), axis=0)
    assert not limit_membership_bound_check(prisms, canonicalize(box((1, 1))))


def test_cor2_bound():
    a = (MonomialIdeal.of((2, 0)),)
    b = (MonomialIdeal.of((2, 0), (0, 4)),)
    assert cor2_values(a, b, 4) == (F(1, 16), F(1, 4))
    assert cor2_check(a, b, 4)
    assert cor2_values((X2Y3,), (X2Y3,), 3) == (0, F(4, 9))
    with pytest.raises(SequenceError):
        cor2_values((X,), (Y,), 2)


def test_cor2_holds_for_truncations():
    for N in range(1, 6):
        a = (X2Y3, MonomialIdeal.of((1, 1)))
        assert cor2_check(a, tuple(truncate(c, N) for c in a), N)


def test_order_divergence_probe():
    constant = [X2Y3] * 4
    growing = [maximal_ideal_power(2, m) for m in range(1, 5)]
    probes = order_divergence_probe([constant, growing])
    assert [p.flagged for p in probes] == [False, True]
    assert probes[1].orders == (1, 2, 3, 4)
    assert probes[1].lct_upper_bounds[-1] == F(1, 2)
    assert probes[1].max_order == 4
    powers = order_divergence_probe([[power(X, m) for m in range(1, 4)]])
    assert powers[0].flagged
    with pytest.raises(SequenceError):
        order_divergence_probe([[]])
