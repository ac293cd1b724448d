#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Plane Curve Fixtures

Resolution tables for two pairs of plane curve germs at the origin, and the
general bounds every LCT-polytope of plane curve germs satisfies.

f = x, g = x - y^2:
    blowing up the origin gives E1 (kappa 1, both orders 1); the strict
    transforms and E1 still meet in one point, whose blow-up gives E2
    (kappa 2, both orders 2).

f = x^2 + y^5, g = x^5 + y^2:
    the weighted blow-ups with weights (5, 2) and (2, 5) make f resp. g
    quasi-homogeneous (kappa 5 + 2 - 1 = 6, orders (10, 4) and (4, 10));
    the ordinary blow-up E1 contributes the redundant row 2l1 + 2l2 <= 2.
"""

import logging
from fractions import Fraction

from geometry import HalfSpace, HPolyhedron, box, canonicalize, contains_polyhedron, same_set

from .lct_polytope import LctPolytope
from .resolution import ResolutionData

logger = logging.getLogger(__name__)


def line_and_parabola() -> ResolutionData:
    """f = x, g = x - y^2"""
    return ResolutionData.from_rows([
        ("Df", 0, (1, 0)),
        ("Dg", 0, (0, 1)),
        ("E1", 1, (1, 1)),
        ("E2", 2, (2, 2)),
    ])


def two_cusps() -> ResolutionData:
    """f = x^2 + y^5, g = x^5 + y^2"""
    return ResolutionData.from_rows([
        ("Df", 0, (1, 0)),
        ("Dg", 0, (0, 1)),
        ("E1", 1, (2, 2)),
        ("E(5,2)", 6, (10, 4)),
        ("E(2,5)", 6, (4, 10)),
    ])


def expected_line_and_parabola() -> HPolyhedron:
    """{l1 <= 1, l2 <= 1, l1 + l2 <= 3/2} in R_+^2"""
    return canonicalize(box((1, 1)).with_halfspaces([HalfSpace((1, 1), Fraction(3, 2))]))


def expected_two_cusps() -> HPolyhedron:
    """Unit square cut by 10 l1 + 4 l2 <= 7 and 4 l1 + 10 l2 <= 7"""
    return canonicalize(box((1, 1)).with_halfspaces([HalfSpace((10, 4), 7), HalfSpace((4, 10), 7)]))


def plane_curve_bound_check(P: LctPolytope) -> bool:
    """Bounds for r germs of plane curves at the origin

    Every such polytope lies in [0,1]^r and below l_1 + ... + l_r <= 2. For
    r = 2 it is either the unit square or lies below l_1 + l_2 <= 3/2.
    """
    r = P.r
    cube = box((1,) * r)
    simplex = HPolyhedron(r, (HalfSpace((1,) * r, 2),), includes_nonnegativity=True)
    if not (contains_polyhedron(cube, P.h) and contains_polyhedron(simplex, P.h)):
        logger.warning(f"{P} violates the plane curve bounds")
        return False
    if r == 2 and not same_set(P.h, cube):
        return contains_polyhedron(HPolyhedron(2, (HalfSpace((2, 2), 3),), True), P.h)
    return True
