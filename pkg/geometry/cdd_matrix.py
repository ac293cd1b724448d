#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
cddlib Matrices

Thin conversion layer between the kernel's rows and pycddlib matrices in
exact ``fraction`` arithmetic. An inequality row <a, x> <= b becomes the cdd
row [b, -a]; a point p becomes [1, p] and a ray r becomes [0, r].
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import cdd

from .rational import RatVec

logger = logging.getLogger(__name__)

NUMBER_TYPE = "fraction"

Row = Tuple[RatVec, Fraction]


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def inequality_matrix(dim: int, inequalities: Iterable[Row], equalities: Iterable[Row] = ()) -> cdd.Matrix:
    """H-matrix for ``<a, x> <= b`` rows plus ``<a, x> = b`` rows

    A trivial row 0 <= 1 is appended so the matrix is never empty.
    """
    rows = [[b] + [-a for a in normal] for normal, b in inequalities]
    rows.append([Fraction(1)] + [Fraction(0)] * dim)
    mat = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    eq_rows = [[b] + [-a for a in normal] for normal, b in equalities]
    if eq_rows:
        mat.extend(eq_rows, linear=True)
    mat.rep_type = cdd.RepType.INEQUALITY
    return mat


def generator_matrix(points: Sequence[RatVec], rays: Sequence[RatVec] = ()) -> cdd.Matrix:
    rows = [[Fraction(1)] + list(p) for p in points] + [[Fraction(0)] + list(r) for r in rays]
    mat = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    mat.rep_type = cdd.RepType.GENERATOR
    return mat


def matrix_rows(mat: cdd.Matrix) -> List[Tuple[Fraction, ...]]:
    return [tuple(_frac(a) for a in mat[i]) for i in range(mat.row_size)]


def split_inequalities(mat: cdd.Matrix) -> Tuple[List[Row], List[Row]]:
    """(inequalities, equalities) of an H-matrix as (normal, offset) rows

    Rows with a zero normal carry no constraint on x and are skipped.
    """
    inequalities, equalities = [], []
    linear = set(mat.lin_set)
    for i, row in enumerate(matrix_rows(mat)):
        normal = tuple(-a for a in row[1:])
        if not any(normal):
            continue
        (equalities if i in linear else inequalities).append((normal, row[0]))
    return inequalities, equalities


def split_generators(mat: cdd.Matrix) -> Tuple[List[RatVec], List[RatVec], List[RatVec]]:
    """(points, rays, lines) of a V-matrix, points dehomogenized"""
    points, rays, lines = [], [], []
    linear = set(mat.lin_set)
    for i, row in enumerate(matrix_rows(mat)):
        lead, rest = row[0], row[1:]
        if i in linear:
            lines.append(rest)
        elif lead != 0:
            points.append(tuple(a / lead for a in rest))
        elif any(rest):
            rays.append(rest)
    return points, rays, lines


def facets_of_generators(points: Sequence[RatVec], rays: Sequence[RatVec] = ()) -> Tuple[List[Row], List[Row]]:
    """Inequalities and equalities of conv(points) + cone(rays)"""
    poly = cdd.Polyhedron(generator_matrix(points, rays))
    return split_inequalities(poly.get_inequalities())


def generators_of_inequalities(dim: int, inequalities: Iterable[Row]):
    """Points, rays and lines of {x : <a, x> <= b}"""
    poly = cdd.Polyhedron(inequality_matrix(dim, inequalities))
    mat = poly.get_generators()
    logger.debug(f"cdd generators: {mat.row_size} rows, {len(mat.lin_set)} linear")
    return split_generators(mat)
