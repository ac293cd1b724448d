#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Canonical H-Representation

Two polyhedra describe the same set exactly when their canonical forms are
identical, so equality of polyhedra becomes tuple comparison.

cddlib's matrix canonicalization finds the implicit equalities and drops the
redundant rows. The equalities are then brought to reduced row-echelon form,
every remaining row is reduced modulo them and scaled to coprime integers,
x >= 0 is folded into the ``includes_nonnegativity`` flag and the rows are
sorted. Results are memoized per polyhedron.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .cdd_matrix import inequality_matrix, split_inequalities
from .lp_solver import LPProblem, lp_feasible, solve_lp
from .polyhedron import HalfSpace, HPolyhedron, nonnegativity_halfspaces
from .rational import RatVec, is_zero, primitive_integer_vector, unit_vec

logger = logging.getLogger(__name__)

Row = Tuple[RatVec, Fraction]


def _problem(dim: int, rows: Sequence[Row]) -> LPProblem:
    return LPProblem(dim, inequalities=tuple(rows))


def empty_polyhedron(dim: int) -> HPolyhedron:
    """Fixed canonical representative of the empty set"""
    e1 = unit_vec(dim, 0)
    return HPolyhedron(dim, (HalfSpace(e1, 0), HalfSpace(tuple(-a for a in e1), -1)))


def is_empty(P: HPolyhedron) -> bool:
    rows = [(h.normal, h.offset) for h in P.all_halfspaces()]
    return not lp_feasible(_problem(P.dim, rows))


def _rref(rows: List[List[Fraction]], num_cols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row-echelon form over the first ``num_cols`` columns

    The last entry of each row (the right-hand side) is carried along.
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(num_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [a / lead for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _reduce(row: Row, echelon: List[List[Fraction]], pivots: List[int]) -> Row:
    """Eliminate the pivot columns of the equality system from a row"""
    vec = list(row[0]) + [row[1]]
    for eq, c in zip(echelon, pivots):
        f = vec[c]
        if f != 0:
            vec = [a - f * b for a, b in zip(vec, eq)]
    return tuple(vec[:-1]), vec[-1]


def _integral(row: Row) -> Optional[Row]:
    normal, offset = row
    if is_zero(normal):
        return None
    ints = primitive_integer_vector(tuple(normal) + (offset,))
    return tuple(Fraction(a) for a in ints[:-1]), Fraction(ints[-1])


def _nonnegative_on(rows: Sequence[Row], dim: int) -> bool:
    for i in range(dim):
        low = solve_lp(_problem(dim, rows), unit_vec(dim, i), maximize=False)
        if not low.is_optimal or low.value < 0:
            return False
    return True


@lru_cache(maxsize=4096)
def canonicalize(P: HPolyhedron) -> HPolyhedron:
    """Canonical form of an H-polyhedron

    Args:
        P: Any H-polyhedron

    Returns:
        HPolyhedron: Irredundant, integral, sorted description of the same set
    """
    dim = P.dim
    rows: List[Row] = [(h.normal, h.offset) for h in P.all_halfspaces()]
    if not rows:
        return HPolyhedron(dim)
    if not lp_feasible(_problem(dim, rows)):
        logger.debug("Canonicalize: empty polyhedron")
        return empty_polyhedron(dim)

    nonneg_valid = P.includes_nonnegativity or _nonnegative_on(rows, dim)
    if nonneg_valid and not P.includes_nonnegativity:
        rows += [(h.normal, h.offset) for h in nonnegativity_halfspaces(dim)]

    mat = inequality_matrix(dim, rows)
    mat.canonicalize()
    inequality_rows, equality_rows = split_inequalities(mat)
    echelon, pivots = _rref([list(normal) + [offset] for normal, offset in equality_rows], dim)
    equalities = [_integral((tuple(eq[:-1]), eq[-1])) for eq in echelon]

    implicit = set()
    if nonneg_valid:
        for h in nonnegativity_halfspaces(dim):
            reduced = _integral(_reduce((h.normal, h.offset), echelon, pivots))
            if reduced is not None:
                implicit.add(reduced)

    kept = set()
    for row in inequality_rows:
        reduced = _integral(_reduce(row, echelon, pivots))
        if reduced is not None and reduced not in implicit:
            kept.add(reduced)

    halfspaces = [HalfSpace(n, b) for n, b in kept]
    for normal, offset in equalities:
        halfspaces.append(HalfSpace(normal, offset))
        halfspaces.append(HalfSpace(tuple(-a for a in normal), -offset))
    halfspaces.sort(key=HalfSpace.sort_key)
    logger.debug(f"Canonicalize: {len(rows)} rows -> {len(kept)} facets, {len(equalities)} equalities")
    return HPolyhedron(dim, tuple(halfspaces), includes_nonnegativity=nonneg_valid)


def same_set(P: HPolyhedron, Q: HPolyhedron) -> bool:
    """Set equality through canonical forms"""
    return P.dim == Q.dim and canonicalize(P) == canonicalize(Q)
