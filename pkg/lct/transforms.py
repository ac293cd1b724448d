#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
LCT-Polytope Transforms and Bounds

Rescaling under powers, the inner simplex and outer box, down-closedness,
prisms over coordinate segments and the truncation shift.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from geometry import (HalfSpace, HPolyhedron, affine_image_diagonal, box, canonicalize,
                      contains_polyhedron, minkowski_segment)
from monomial import MonomialIdeal, MonomialIdealError, truncate

from .lct_polytope import LctPolytope, check_ideals, lct_polytope_monomial
from .thresholds import lct_threshold

logger = logging.getLogger(__name__)


def power_rescale(P: LctPolytope, m: Sequence[int]) -> LctPolytope:
    """LCT(a_1^{m_1}, ..., a_r^{m_r}) from LCT(a_1, ..., a_r)

    The image of P under u -> (u_1/m_1, ..., u_r/m_r).
    """
    m = list(m)
    if len(m) != P.r:
        raise ValueError(f"{len(m)} exponents for a polytope in R^{P.r}")
    if any(isinstance(k, bool) or not isinstance(k, int) or k < 1 for k in m):
        raise ValueError(f"exponents must be positive integers, got {m}")
    h = affine_image_diagonal(P.h, [Fraction(1, k) for k in m])
    return LctPolytope(h, "derived", ("power_rescale", P.source, tuple(m)))


@dataclass(frozen=True)
class ContainmentReport:
    """Inner simplex and outer box around an LCT-polytope, with the verdicts"""

    polytope: LctPolytope
    simplex: HPolyhedron
    box: HPolyhedron
    thresholds: tuple
    simplex_inside: bool
    inside_box: bool
    box_inside_cube: bool

    @property
    def holds(self) -> bool:
        return self.simplex_inside and self.inside_box and self.box_inside_cube


def containment_bounds(ideals: Sequence[MonomialIdeal]) -> ContainmentReport:
    """{sum lam_i/lct(a_i) <= 1} inside LCT(a) inside prod [0, lct(a_i)] inside [0, n]^r"""
    n = check_ideals(ideals)
    P = lct_polytope_monomial(ideals)
    thresholds = tuple(lct_threshold(a) for a in ideals)
    simplex = canonicalize(HPolyhedron(len(ideals), (HalfSpace(tuple(1 / c for c in thresholds), 1),),
                                       includes_nonnegativity=True))
    outer = canonicalize(box(thresholds))
    report = ContainmentReport(
        polytope=P,
        simplex=simplex,
        box=outer,
        thresholds=thresholds,
        simplex_inside=contains_polyhedron(P.h, simplex),
        inside_box=contains_polyhedron(outer, P.h),
        box_inside_cube=all(c <= n for c in thresholds),
    )
    if not report.holds:
        logger.warning(f"Containment bounds fail for {', '.join(map(str, ideals))}")
    return report


def _down_closed(h: HPolyhedron, vertices: List) -> bool:
    for v in vertices:
        for i in range(len(v)):
            if v[i] != 0 and not h.contains(v[:i] + (Fraction(0),) + v[i + 1:]):
                return False
    return True


def is_down_closed(P: LctPolytope) -> bool:
    """Whether every vertex stays in P when any coordinate is set to 0

    For a convex polytope this is equivalent to being down-closed in R_+^r.
    """
    return _down_closed(P.h, P.vertices())


def prism_extend(P: LctPolytope, d: int, axis: int) -> LctPolytope:
    """{lam + t e_axis : lam in P, 0 <= t <= 1/d}"""
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    h = minkowski_segment(P.h, axis, Fraction(1, d))
    return LctPolytope(h, "derived", ("prism", P.source, d, axis))


def truncations_agree(ideals_a: Sequence[MonomialIdeal], ideals_b: Sequence[MonomialIdeal], N: int) -> bool:
    """Whether a_i + m^N = b_i + m^N for every i"""
    if len(ideals_a) != len(ideals_b):
        raise MonomialIdealError(f"{len(ideals_a)} ideals against {len(ideals_b)}")
    return all(truncate(a, N) == truncate(b, N) for a, b in zip(ideals_a, ideals_b))


def cor1_shift_check(ideals_a: Sequence[MonomialIdeal], ideals_b: Sequence[MonomialIdeal], N: int) -> bool:
    """Shift check for tuples agreeing modulo m^N

    Every lam in LCT(a) must give max(lam - n/N, 0) in LCT(b). The shift is
    convex and monotone and LCT(b) is convex and down-closed, so checking
    the vertices of LCT(a) is enough.
    """
    n = check_ideals(list(ideals_a) + list(ideals_b))
    if not truncations_agree(ideals_a, ideals_b, N):
        raise MonomialIdealError(f"the ideals do not agree modulo m^{N}")
    shift = Fraction(n, N)
    P, Q = lct_polytope_monomial(ideals_a), lct_polytope_monomial(ideals_b)
    for v in P.vertices():
        shifted = tuple(max(c - shift, Fraction(0)) for c in v)
        if not Q.contains(shifted):
            logger.warning(f"Shift of vertex {v} by {shift} leaves LCT(b)")
            return False
    return True
