#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Sequence Lab

Builds the supported sequence families and runs limit detection on them with
the configured window and prefix length.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from geometry import hausdorff_sq
from lct import lct_polytope_monomial
from monomial import MonomialIdeal

from .families import ascending_family, ex11_family, truncation_family
from .limit_detection import LimitReport, detect_stationary_limit
from .polytope_sequence import PolytopeSequence, SequenceError

logger = logging.getLogger(__name__)

MODES = ("truncate", "ex11", "ascending")


@dataclass(frozen=True)
class SequenceRun:
    """A materialized family with its limit report"""

    mode: str
    sequence: PolytopeSequence
    report: LimitReport
    base_sq_distance_profile: Optional[Tuple[Fraction, ...]] = None


class SequenceLab:
    """Sequence Lab Class"""

    def __init__(self, window: int = 5, prefix: int = 8, threads: Optional[int] = None):
        """Initialize the lab

        Args:
            window: Trailing terms that must agree for stationarity
            prefix: Number of terms to materialize
            threads: Worker threads for term generation
        """
        self.window = window
        self.prefix = prefix
        self.threads = threads

    def build(self, mode: str, ideals: Sequence[MonomialIdeal], prefix: int, axis: int = 0) -> PolytopeSequence:
        indices = range(1, prefix + 1)
        if mode == "truncate":
            return truncation_family(ideals, indices)
        if mode == "ascending":
            return ascending_family(ideals, indices)
        if mode == "ex11":
            return ex11_family(ideals, indices, axis)
        raise SequenceError(f"unknown sequence mode {mode!r}; expected one of {', '.join(MODES)}")

    def run(self, mode: str, ideals: Sequence[MonomialIdeal], prefix: Optional[int] = None,
            window: Optional[int] = None, axis: int = 0) -> SequenceRun:
        """Materialize a family and detect its limit

        For the prism family the profile against the base polytope LCT(a),
        the limit of the infinite sequence, is reported as well.
        """
        prefix = self.prefix if prefix is None else prefix
        window = self.window if window is None else window
        if window < 1 or prefix < window + 1:
            raise SequenceError(f"prefix {prefix} must exceed a positive window, got window {window}")
        seq = self.build(mode, ideals, prefix, axis)
        report = detect_stationary_limit(seq, window, self.threads)
        base_profile = None
        if mode == "ex11":
            base = lct_polytope_monomial(ideals)
            base_profile = tuple(hausdorff_sq(P.h, base.h) for P in seq.materialize())
        return SequenceRun(mode, seq, report, base_profile)
