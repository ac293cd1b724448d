#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Sequence Probes

Quantitative checks on pairs and sequences of ideals: the Hausdorff bound for
tuples agreeing modulo m^N, and the divergence of orders that forces a limit
into a coordinate hyperplane.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from geometry import hausdorff_sq
from lct import check_ideals, lct_polytope_monomial, truncations_agree
from monomial import MonomialIdeal, order

from .polytope_sequence import SequenceError

logger = logging.getLogger(__name__)


def cor2_values(ideals_a: Sequence[MonomialIdeal], ideals_b: Sequence[MonomialIdeal], N: int) -> Tuple[Fraction, Fraction]:
    """(d^2(LCT(a), LCT(b)), n^2 r / N^2) for tuples agreeing modulo m^N"""
    if N < 1:
        raise SequenceError(f"N must be positive, got {N}")
    n = check_ideals(list(ideals_a) + list(ideals_b))
    if not truncations_agree(ideals_a, ideals_b, N):
        raise SequenceError(f"the ideal tuples do not agree modulo m^{N}")
    r = len(ideals_a)
    distance = hausdorff_sq(lct_polytope_monomial(ideals_a).h, lct_polytope_monomial(ideals_b).h)
    return distance, Fraction(n * n * r, N * N)


def cor2_check(ideals_a: Sequence[MonomialIdeal], ideals_b: Sequence[MonomialIdeal], N: int) -> bool:
    """Whether d^2(LCT(a), LCT(b)) <= n^2 r / N^2"""
    distance, bound = cor2_values(ideals_a, ideals_b, N)
    if distance > bound:
        logger.error(f"Hausdorff bound violated: {distance} > {bound}")
        return False
    return True


@dataclass(frozen=True)
class OrderProbe:
    """Orders of one coordinate's ideals along the prefix"""

    orders: Tuple[int, ...]
    lct_upper_bounds: Tuple[Fraction, ...]
    flagged: bool

    @property
    def max_order(self) -> int:
        return max(self.orders)


def order_divergence_probe(ideal_sequences: Sequence[Sequence[MonomialIdeal]]) -> List[OrderProbe]:
    """Per coordinate, orders ord(a_i^(m)) and bounds lct <= n / ord

    A coordinate is flagged when its orders never decrease and end strictly
    above where they start: thresholds heading to 0 put the limit inside the
    hyperplane of that coordinate.
    """
    probes = []
    for i, ideals in enumerate(ideal_sequences):
        if not ideals:
            raise SequenceError(f"coordinate {i + 1} has no ideals")
        orders = tuple(order(a) for a in ideals)
        bounds = tuple(Fraction(a.n, d) for a, d in zip(ideals, orders))
        growing = all(x <= y for x, y in zip(orders, orders[1:])) and orders[-1] > orders[0]
        probes.append(OrderProbe(orders, bounds, growing))
        if growing:
            logger.info(f"Coordinate {i + 1}: orders grow to {orders[-1]}, threshold bound {bounds[-1]}")
    return probes
