#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Sequence Families

Truncation families LCT(a_1 + m^q, ..., a_r + m^q), an ascending chain of them, and the
prism family LCT(b_1, ..., b_axis + (y^d), ..., b_r) in one more variable.
"""

import logging
from typing import Callable, Iterable, Optional, Sequence

from lct import LctPolytope, check_ideals, lct_polytope_monomial
from monomial import MonomialIdeal, lift_with_power, pullback, truncate

from .polytope_sequence import PolytopeSequence, SequenceError

logger = logging.getLogger(__name__)


def truncated_ideals(ideals: Sequence[MonomialIdeal], q: int):
    return tuple(truncate(a, q) for a in ideals)


def truncation_family(ideals: Sequence[MonomialIdeal], q_range: Iterable[int]) -> PolytopeSequence:
    """Term q is LCT(a_1 + m^q, ..., a_r + m^q); a descending sequence"""
    check_ideals(ideals)
    ideals = tuple(ideals)
    return PolytopeSequence(lambda q: lct_polytope_monomial(truncated_ideals(ideals, q)),
                            q_range, label="truncation")


def ascending_family(ideals: Sequence[MonomialIdeal], q_range: Iterable[int],
                     start: Optional[int] = None) -> PolytopeSequence:
    """Ascending chain of truncations that climbs to LCT(m) and stays there

    The k-th index (0-based) uses the truncation degree max(start - k, 1), so
    the terms grow from LCT(a + m^start) until they reach LCT(a + m) = LCT(m).
    ``start`` defaults to half the prefix, leaving the second half constant.
    """
    check_ideals(ideals)
    ideals = tuple(ideals)
    qs = list(q_range)
    if not qs:
        raise SequenceError("empty index range")
    start = max(1, len(qs) // 2) if start is None else start
    if start < 1:
        raise SequenceError(f"truncation degree must be positive, got {start}")
    degree = {m: max(start - k, 1) for k, m in enumerate(qs)}
    return PolytopeSequence(lambda m: lct_polytope_monomial(truncated_ideals(ideals, degree[m])),
                            qs, label="ascending truncation")


def ex11_ideals(ideals: Sequence[MonomialIdeal], d: int, axis: int):
    """(b_1, ..., b_axis + (y^d), ..., b_r) for the pullbacks b_i to n + 1 variables"""
    if not 0 <= axis < len(ideals):
        raise SequenceError(f"axis {axis + 1} out of range 1..{len(ideals)}")
    return tuple(lift_with_power(a, d) if i == axis else pullback(a, 1) for i, a in enumerate(ideals))


def ex11_family(ideals: Sequence[MonomialIdeal], d_range: Iterable[int], axis: int) -> PolytopeSequence:
    """Strictly descending prisms over LCT(a) of width 1/d along ``axis``"""
    check_ideals(ideals)
    ideals = tuple(ideals)
    ex11_ideals(ideals, 1, axis)
    return PolytopeSequence(lambda d: lct_polytope_monomial(ex11_ideals(ideals, d, axis)),
                            d_range, label=f"prism family along axis {axis + 1}")


def function_family(generator: Callable[[int], LctPolytope], indices: Iterable[int],
                    label: str = "custom") -> PolytopeSequence:
    """Any pure index -> polytope function as a sequence"""
    return PolytopeSequence(generator, indices, label=label)


def constant_family(P: LctPolytope, indices: Iterable[int]) -> PolytopeSequence:
    return PolytopeSequence(lambda m: P, indices, label="constant")
