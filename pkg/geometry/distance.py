#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact Squared Distances

Euclidean distances between rational polytopes are usually irrational, so
every function here works with squared distances and stays in ``Fraction``.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .canonical import canonicalize
from .exceptions import DimensionMismatchError
from .operations import vertices_of_bounded
from .polyhedron import HPolyhedron
from .rational import RationalLike, RatVec, dot, rat_vec, solve_linear_system, sq_norm, to_rational, vec_sub

logger = logging.getLogger(__name__)


def point_polytope_sqdist(x: Iterable[RationalLike], P: HPolyhedron) -> Fraction:
    """Squared Euclidean distance from a point to a polytope

    The nearest point lies in the relative interior of some face, so it is the
    orthogonal projection of x onto that face's affine hull. Every system of
    at most ``dim`` active rows is tried and projections outside P discarded.

    Args:
        x: The point
        P: Bounded nonempty polytope

    Returns:
        Fraction: min over y in P of |x - y|^2
    """
    x = rat_vec(x)
    if len(x) != P.dim:
        raise DimensionMismatchError(f"point of dimension {len(x)} against a polytope of dimension {P.dim}")
    return _sqdist(x, canonicalize(P))


def _sqdist(x: RatVec, P: HPolyhedron) -> Fraction:
    """Distance core for a polytope already in canonical form"""
    vertices = vertices_of_bounded(P)
    if P.contains(x):
        return Fraction(0)

    best: Optional[Fraction] = min(sq_norm(vec_sub(x, v)) for v in vertices)
    rows = P.all_halfspaces()
    for k in range(1, P.dim):
        for active in combinations(rows, k):
            gram = [[dot(a.normal, b.normal) for b in active] for a in active]
            residual = [dot(a.normal, x) - a.offset for a in active]
            mu = solve_linear_system(gram, residual)
            if mu is None:
                continue
            y = list(x)
            for coeff, h in zip(mu, active):
                for i, a in enumerate(h.normal):
                    y[i] -= coeff * a
            if P.contains(y):
                best = min(best, sq_norm(vec_sub(x, y)))
    return best


def hausdorff_sq(P: HPolyhedron, Q: HPolyhedron) -> Fraction:
    """Squared Hausdorff distance between two polytopes

    The farthest point of a polytope from a convex set is a vertex, so both
    one-sided maxima run over vertices only.
    """
    if P.dim != Q.dim:
        raise DimensionMismatchError(f"Hausdorff distance between dimensions {P.dim} and {Q.dim}")
    P, Q = canonicalize(P), canonicalize(Q)
    forward = max(_sqdist(v, Q) for v in vertices_of_bounded(P))
    backward = max(_sqdist(v, P) for v in vertices_of_bounded(Q))
    logger.debug(f"Hausdorff: one-sided squared distances {forward} and {backward}")
    return max(forward, backward)


def sqrt_free_triangle(a2: RationalLike, b2: RationalLike, c2: RationalLike) -> bool:
    """Whether sqrt(a2) <= sqrt(b2) + sqrt(c2), decided without square roots"""
    a2, b2, c2 = to_rational(a2), to_rational(b2), to_rational(c2)
    d = a2 - b2 - c2
    if d <= 0:
        return True
    return d * d <= 4 * b2 * c2
