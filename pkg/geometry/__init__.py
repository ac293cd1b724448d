#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Geometry Package

Exact rational polyhedral kernel: H/V descriptions, canonical forms, exact
linear programming, Minkowski sums and squared Hausdorff distances.
"""

from .canonical import canonicalize, empty_polyhedron, is_empty, same_set
from .distance import hausdorff_sq, point_polytope_sqdist, sqrt_free_triangle
from .exceptions import (DimensionMismatchError, EmptyInputError, EmptyPolyhedronError,
                         GeometryError, MalformedProblemError, NotPointedError,
                         UnboundedPolyhedronError, UnboundedSupportError)
from .lp_solver import FeasibilityVerdict, LPProblem, LPResult, lp_feasible, solve_lp
from .operations import (affine_image_diagonal, contains, contains_polyhedron, enumerate_vertices,
                         hull, intersect, is_bounded, minkowski_segment, minkowski_sum,
                         newton_type, support_min, vertices_of_bounded)
from .polyhedron import HalfSpace, HPolyhedron, VPolyhedron, box, orthant_rays
from .rational import RatVec, Rational, format_rational, format_vec, rat_vec, to_rational

__all__ = [
    'HalfSpace', 'HPolyhedron', 'VPolyhedron', 'LPProblem', 'LPResult', 'FeasibilityVerdict',
    'Rational', 'RatVec', 'rat_vec', 'to_rational', 'format_rational', 'format_vec',
    'box', 'orthant_rays',
    'hull', 'enumerate_vertices', 'canonicalize', 'same_set', 'is_empty', 'empty_polyhedron',
    'lp_feasible', 'solve_lp', 'support_min', 'minkowski_sum', 'newton_type',
    'contains', 'contains_polyhedron', 'intersect', 'is_bounded', 'vertices_of_bounded',
    'affine_image_diagonal', 'minkowski_segment',
    'point_polytope_sqdist', 'hausdorff_sq', 'sqrt_free_triangle',
    'GeometryError', 'DimensionMismatchError', 'EmptyInputError', 'EmptyPolyhedronError',
    'UnboundedPolyhedronError', 'NotPointedError', 'MalformedProblemError', 'UnboundedSupportError',
]
