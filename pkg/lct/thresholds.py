#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Log Canonical Thresholds

lct(a) = max{c : e in c * P_a} as an exact LP, the order bounds
1/ord(a) <= lct(a) <= n/ord(a), and the mixed profile t -> 1/lct(a * m^t).
"""

import logging
from fractions import Fraction

from geometry import LPProblem, solve_lp
from geometry.rational import RationalLike, to_rational
from monomial import MonomialIdeal, order

logger = logging.getLogger(__name__)


def lct_threshold(a: MonomialIdeal) -> Fraction:
    """Log canonical threshold of a proper monomial ideal

    Maximizes sum_k nu_k subject to sum_k nu_k g_k <= e and nu >= 0, where
    g_k are the generators of a.
    """
    a.require_proper()
    gens = a.generators
    rows = tuple((tuple(g[j] for g in gens), 1) for j in range(a.n))
    problem = LPProblem(len(gens), inequalities=rows, nonnegative=(True,) * len(gens))
    result = solve_lp(problem, (1,) * len(gens), maximize=True)
    logger.debug(f"lct{a} = {result.value}")
    return result.value


def order_bounds_check(a: MonomialIdeal) -> bool:
    """Whether 1/ord(a) <= lct(a) <= n/ord(a)"""
    d = order(a)
    threshold = lct_threshold(a)
    holds = Fraction(1, d) <= threshold <= Fraction(a.n, d)
    if not holds:
        logger.warning(f"Order bounds fail for {a}: ord {d}, lct {threshold}")
    return holds


def mixed_threshold_profile(a: MonomialIdeal, t: RationalLike) -> Fraction:
    """phi(t) = 1 / max{c : (c, c*t) in LCT(a, m)}

    The LP puts weight c on the generators of a and weight c*t on the
    variables (the generators of m). phi(0) = 1/lct(a); phi is convex and
    nondecreasing in t.
    """
    a.require_proper()
    t = to_rational(t)
    if t < 0:
        raise ValueError(f"profile parameter must be nonnegative, got {t}")
    gens = list(a.generators)
    n, k = a.n, len(gens)
    num = k + n
    rows = []
    for j in range(n):
        row = [g[j] for g in gens] + [1 if i == j else 0 for i in range(n)]
        rows.append((tuple(row), 1))
    # weight on m equals t times the weight on a
    balance = (tuple([-t] * k + [1] * n), 0)
    problem = LPProblem(num, equalities=(balance,), inequalities=tuple(rows), nonnegative=(True,) * num)
    result = solve_lp(problem, (1,) * k + (0,) * n, maximize=True)
    return 1 / result.value
