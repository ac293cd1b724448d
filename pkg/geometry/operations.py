#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Polyhedral Operations

Representation conversion (hull / vertex enumeration), containment,
intersection, support functions and Minkowski sums. Conversion runs on
cddlib in exact arithmetic.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence

from .canonical import canonicalize
from .cdd_matrix import facets_of_generators, generators_of_inequalities
from .exceptions import (DimensionMismatchError, EmptyInputError, EmptyPolyhedronError,
                         GeometryError, NotPointedError, UnboundedPolyhedronError,
                         UnboundedSupportError)
from .polyhedron import HalfSpace, HPolyhedron, VPolyhedron, orthant_rays
from .rational import (RatVec, RationalLike, check_dims, dot, is_zero, primitive_integer_vector,
                       rat_vec, to_rational, unit_vec, vec_add)

logger = logging.getLogger(__name__)


def hull(points: Sequence[Iterable[RationalLike]], rays: Sequence[Iterable[RationalLike]] = ()) -> HPolyhedron:
    """Facet description of conv(points) + cone(rays)

    Args:
        points: Nonempty list of points
        rays: Recession directions

    Returns:
        HPolyhedron: Canonical H-representation
    """
    points = [rat_vec(p) for p in points]
    rays = [r for r in map(rat_vec, rays) if not is_zero(r)]
    if not points:
        raise EmptyInputError("hull needs at least one point")
    dim = check_dims(*points, *rays)

    inequalities, equalities = facets_of_generators(points, rays)
    halfspaces: List[HalfSpace] = [HalfSpace(normal, offset) for normal, offset in inequalities]
    for normal, offset in equalities:
        halfspaces.append(HalfSpace(normal, offset))
        halfspaces.append(HalfSpace(tuple(-a for a in normal), -offset))
    return canonicalize(HPolyhedron(dim, tuple(halfspaces)))


@lru_cache(maxsize=4096)
def enumerate_vertices(P: HPolyhedron) -> VPolyhedron:
    """Minimal vertex/ray description of a pointed H-polyhedron

    Raises:
        EmptyPolyhedronError: If P is empty
        NotPointedError: If P contains a line
    """
    dim = P.dim
    rows = [(h.normal, h.offset) for h in P.all_halfspaces()]
    vertices, rays, lines = generators_of_inequalities(dim, rows)
    if not vertices:
        raise EmptyPolyhedronError(f"polyhedron {P} is empty")
    if lines:
        raise NotPointedError(f"polyhedron {P} contains a line")
    rays = {tuple(Fraction(a) for a in primitive_integer_vector(r)) for r in rays}
    return VPolyhedron(dim, tuple(set(vertices)), tuple(rays))


def vertices_of_bounded(P: HPolyhedron) -> List[RatVec]:
    """Vertices of a polytope, rejecting unbounded input"""
    V = enumerate_vertices(P)
    if V.rays:
        raise UnboundedPolyhedronError(f"polyhedron {P} is unbounded")
    return list(V.vertices)


def is_bounded(P: HPolyhedron) -> bool:
    return not enumerate_vertices(P).rays


def contains(P: HPolyhedron, x: Iterable[RationalLike]) -> bool:
    return P.contains(x)


def contains_polyhedron(outer: HPolyhedron, inner: HPolyhedron) -> bool:
    """Whether ``inner`` is a subset of ``outer``

    Checks every vertex of ``inner`` against ``outer`` and every ray against
    the recession cone of ``outer``. The empty set is contained in anything.
    """
    if outer.dim != inner.dim:
        raise DimensionMismatchError(f"dimensions {outer.dim} and {inner.dim} differ")
    try:
        V = enumerate_vertices(inner)
    except EmptyPolyhedronError:
        return True
    if not all(outer.contains(v) for v in V.vertices):
        return False
    return all(dot(h.normal, r) <= 0 for r in V.rays for h in outer.all_halfspaces())


def intersect(*polyhedra: HPolyhedron) -> HPolyhedron:
    """Canonical intersection of several H-polyhedra"""
    if not polyhedra:
        raise EmptyInputError("nothing to intersect")
    dims = {P.dim for P in polyhedra}
    if len(dims) != 1:
        raise DimensionMismatchError(f"cannot intersect polyhedra of dimensions {sorted(dims)}")
    halfspaces = tuple(h for P in polyhedra for h in P.all_halfspaces())
    return canonicalize(HPolyhedron(dims.pop(), halfspaces))


def support_min(P: VPolyhedron, w: Iterable[RationalLike]) -> Fraction:
    """h_P(w) = min over P of <w, u>

    Raises:
        UnboundedSupportError: If w has a negative entry or decreases along a ray
    """
    w = rat_vec(w)
    if len(w) != P.dim:
        raise DimensionMismatchError(f"direction of dimension {len(w)} for a polyhedron of dimension {P.dim}")
    if any(c < 0 for c in w) or any(dot(w, r) < 0 for r in P.rays):
        raise UnboundedSupportError(f"support function is unbounded below in direction {w}")
    return min(dot(w, v) for v in P.vertices)


def _drop_dominated(points: Iterable[RatVec]) -> List[RatVec]:
    """Remove points lying in another point plus the nonnegative orthant"""
    unique = sorted(set(points))
    return [p for p in unique
            if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in unique)]


def newton_type(points: Iterable[Iterable[RationalLike]], dim: int) -> VPolyhedron:
    """conv(points) + R_+^dim reduced to its vertices"""
    candidates = _drop_dominated(rat_vec(p) for p in points)
    if len(candidates) == 1:
        return VPolyhedron(dim, tuple(candidates), orthant_rays(dim))
    return enumerate_vertices(hull(candidates, orthant_rays(dim)))


def minkowski_sum(P: VPolyhedron, Q: VPolyhedron) -> VPolyhedron:
    """Minkowski sum of two polyhedra with recession cone R_+^n"""
    if P.dim != Q.dim:
        raise DimensionMismatchError(f"Minkowski sum of dimensions {P.dim} and {Q.dim}")
    if not (P.has_orthant_recession() and Q.has_orthant_recession()):
        raise GeometryError("Minkowski sum is only supported for Newton-type polyhedra")
    sums = [vec_add(p, q) for p in P.vertices for q in Q.vertices]
    result = newton_type(sums, P.dim)
    logger.debug(f"Minkowski sum: {len(sums)} pairwise sums -> {len(result.vertices)} vertices")
    return result


def affine_image_diagonal(P: HPolyhedron, scales: Sequence[RationalLike]) -> HPolyhedron:
    """Image of P under x -> (s_1 x_1, ..., s_n x_n) for positive s_i"""
    scales = rat_vec(scales)
    if len(scales) != P.dim:
        raise DimensionMismatchError(f"{len(scales)} scale factors for dimension {P.dim}")
    if any(s <= 0 for s in scales):
        raise ValueError(f"scale factors must be positive, got {scales}")
    halfspaces = tuple(HalfSpace(tuple(a / s for a, s in zip(h.normal, scales)), h.offset)
                       for h in P.halfspaces)
    return canonicalize(HPolyhedron(P.dim, halfspaces, P.includes_nonnegativity))


def minkowski_segment(P: HPolyhedron, axis: int, length: RationalLike) -> HPolyhedron:
    """P + [0, length] * e_axis for a bounded P"""
    length = to_rational(length)
    if not 0 <= axis < P.dim:
        raise ValueError(f"axis {axis} out of range for dimension {P.dim}")
    vertices = vertices_of_bounded(P)
    shift = unit_vec(P.dim, axis, length)
    return hull(vertices + [vec_add(v, shift) for v in vertices])
