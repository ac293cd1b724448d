#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
LCT Package

LCT-polytopes of monomial ideals and of log resolution data, thresholds and
the transforms relating them.
"""

from .lct_manager import LctManager
from .lct_polytope import (LctPolytope, check_ideals, embed_coordinates, inner_facet_normals,
                           lct_polytope_from_resolution, lct_polytope_monomial, lct_polytope_principal,
                           membership_oracle, toric_resolution_data)
from .plane_curves import (expected_line_and_parabola, expected_two_cusps, line_and_parabola,
                           plane_curve_bound_check, two_cusps)
from .resolution import ResolutionData, ResolutionDataError
from .thresholds import lct_threshold, mixed_threshold_profile, order_bounds_check
from .transforms import (ContainmentReport, containment_bounds, cor1_shift_check, is_down_closed,
                         power_rescale, prism_extend, truncations_agree)

__all__ = [
    'LctManager', 'LctPolytope', 'ResolutionData', 'ResolutionDataError', 'ContainmentReport',
    'membership_oracle', 'lct_polytope_monomial', 'lct_polytope_principal', 'lct_polytope_from_resolution',
    'toric_resolution_data', 'embed_coordinates', 'inner_facet_normals', 'check_ideals',
    'lct_threshold', 'order_bounds_check', 'mixed_threshold_profile',
    'power_rescale', 'containment_bounds', 'is_down_closed', 'prism_extend',
    'cor1_shift_check', 'truncations_agree',
    'plane_curve_bound_check', 'line_and_parabola', 'two_cusps',
    'expected_line_and_parabola', 'expected_two_cusps',
]
