#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Sequence Package

Sequences of LCT-polytopes: families, tail intersections, stationary-limit
detection and quantitative probes.
"""

from .families import (ascending_family, constant_family, ex11_family, ex11_ideals, function_family,
                       truncated_ideals, truncation_family)
from .limit_detection import (LimitReport, descending, detect_stationary_limit, limit_membership_bound_check,
                              limit_support, tail_intersection)
from .polytope_sequence import PolytopeSequence, SequenceError
from .probes import OrderProbe, cor2_check, cor2_values, order_divergence_probe
from .sequence_lab import MODES, SequenceLab, SequenceRun

__all__ = [
    'SequenceLab', 'SequenceRun', 'PolytopeSequence', 'SequenceError', 'LimitReport', 'OrderProbe', 'MODES',
    'truncation_family', 'ascending_family', 'ex11_family', 'ex11_ideals', 'function_family',
    'constant_family', 'truncated_ideals',
    'tail_intersection', 'detect_stationary_limit', 'limit_membership_bound_check', 'limit_support',
    'descending', 'cor2_check', 'cor2_values', 'order_divergence_probe',
]
