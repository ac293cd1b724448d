#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Limit Detection

Finite-prefix evidence for the stationary limit Q = intersection of P_m for
m >= m0. Only what the materialized prefix shows is reported.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from geometry import HPolyhedron, contains_polyhedron, hausdorff_sq, intersect, vertices_of_bounded

from .polytope_sequence import PolytopeSequence, SequenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LimitReport:
    """Outcome of stationary-limit detection on a prefix

    ``support`` holds the coordinates i for which Q is not contained in the
    hyperplane x_i = 0.
    """

    candidate_limit: HPolyhedron
    m0: Optional[int]
    sq_distance_profile: Tuple[Fraction, ...]
    stationary: bool
    indices: Tuple[int, ...]
    window: int
    support: Tuple[int, ...]


def tail_intersection(seq: PolytopeSequence, m0: int) -> HPolyhedron:
    """Canonical intersection of P_m0, ..., P_end"""
    if m0 not in seq.indices:
        raise SequenceError(f"m0 = {m0} is outside the prefix {seq.indices[0]}..{seq.indices[-1]}")
    tail = [seq.term(m).h for m in seq.indices if m >= m0]
    return intersect(*tail)


def limit_support(Q: HPolyhedron) -> Tuple[int, ...]:
    vertices = vertices_of_bounded(Q)
    return tuple(i for i in range(Q.dim) if any(v[i] != 0 for v in vertices))


def detect_stationary_limit(seq: PolytopeSequence, window: int, threads: Optional[int] = None) -> LimitReport:
    """Look for a stationary tail in the prefix

    Q is the intersection of the last ``window`` terms. The prefix counts as
    stationary when each of those terms equals Q. At least one term must
    precede the window. When stationary, m0 is the earliest
    index from which every term equals Q. Otherwise Q is the intersection of
    the whole prefix and m0 is None.

    Args:
        seq: Sequence prefix
        window: Number of trailing terms that must agree
        threads: Worker threads for materializing terms

    Returns:
        LimitReport: Candidate limit, m0 and the profile of d^2(P_m, Q)
    """
    if window < 1:
        raise SequenceError(f"window must be positive, got {window}")
    if seq.prefix_length < window + 1:
        raise SequenceError(f"a window of {window} needs at least {window + 1} terms, got {seq.prefix_length}")

    terms = seq.materialize(threads)
    trailing = [P.h for P in terms[-window:]]
    Q = intersect(*trailing)
    stationary = all(h == Q for h in trailing)

    m0 = None
    if stationary:
        m0 = seq.indices[-1]
        for m, P in zip(reversed(seq.indices), reversed(terms)):
            if P.h != Q:
                break
            m0 = m
    else:
        Q = intersect(*(P.h for P in terms))

    profile = tuple(hausdorff_sq(P.h, Q) for P in terms)
    report = LimitReport(Q, m0, profile, stationary, tuple(seq.indices), window, limit_support(Q))
    logger.info(f"Limit detection on {seq!r}: stationary={stationary}, m0={m0}")
    return report


def limit_membership_bound_check(seq: PolytopeSequence, Q: HPolyhedron) -> bool:
    """Whether the intersection of the prefix lies inside Q"""
    return contains_polyhedron(Q, tail_intersection(seq, seq.indices[0]))


def descending(terms: List) -> bool:
    """Whether each term contains the next"""
    return all(contains_polyhedron(a.h, b.h) for a, b in zip(terms, terms[1:]))
