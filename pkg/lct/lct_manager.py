#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
LCT Management Module

Single entry point used by the command line: builds LCT-polytopes from any
supported input and answers threshold and distance queries on them.
"""

import logging
from fractions import Fraction
from typing import Dict, Optional, Sequence

from geometry import HPolyhedron, canonicalize, hausdorff_sq
from monomial import MonomialIdeal

from .lct_polytope import LctPolytope, lct_polytope_from_resolution, lct_polytope_monomial
from .resolution import ResolutionData
from .thresholds import lct_threshold, order_bounds_check
from .transforms import containment_bounds, is_down_closed

logger = logging.getLogger(__name__)


class LctManager:
    """LCT Manager Class"""

    def __init__(self, local: bool = True):
        """Initialize LCT manager

        Args:
            local: Restrict resolution data to the divisors through the point
        """
        self.local = local
        self._cache: Dict[tuple, LctPolytope] = {}

    def from_ideals(self, ideals: Sequence[MonomialIdeal]) -> LctPolytope:
        """LCT-polytope of monomial ideals, memoized per tuple"""
        key = tuple(ideals)
        if key not in self._cache:
            self._cache[key] = lct_polytope_monomial(key)
            logger.info(f"Computed LCT-polytope of {len(key)} ideal(s) in {key[0].n} variable(s)")
        return self._cache[key]

    def from_resolution(self, data: ResolutionData) -> LctPolytope:
        P = lct_polytope_from_resolution(data, local=self.local)
        logger.info(f"Computed LCT-polytope from {data.N} divisors")
        return P

    def from_polyhedron(self, h: HPolyhedron) -> LctPolytope:
        return LctPolytope(canonicalize(h), "derived", "polytope input")

    def threshold(self, ideals: Sequence[MonomialIdeal], coordinate: Optional[int] = None) -> Fraction:
        """lct of the single ideal, or of ideal ``coordinate`` (0-based) of a tuple"""
        if coordinate is None:
            if len(ideals) != 1:
                raise ValueError(f"{len(ideals)} ideals given; choose one coordinate")
            coordinate = 0
        if not 0 <= coordinate < len(ideals):
            raise ValueError(f"coordinate {coordinate + 1} out of range 1..{len(ideals)}")
        return lct_threshold(ideals[coordinate])

    def distance_sq(self, P: LctPolytope, Q: LctPolytope) -> Fraction:
        return hausdorff_sq(P.h, Q.h)

    def sanity_report(self, ideals: Sequence[MonomialIdeal]) -> Dict[str, bool]:
        """Named structural checks of LCT(ideals)"""
        P = self.from_ideals(ideals)
        bounds = containment_bounds(ideals)
        return {
            "contains_origin": P.contains((0,) * P.r),
            "down_closed": is_down_closed(P),
            "inner_simplex": bounds.simplex_inside,
            "outer_box": bounds.inside_box and bounds.box_inside_cube,
            "order_bounds": all(order_bounds_check(a) for a in ideals),
        }
