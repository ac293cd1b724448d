#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact Rational Helpers

All coordinates are ``fractions.Fraction`` values; vectors are plain tuples of
them. Nothing in the package introduces floating point.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple, Union

from .exceptions import DimensionMismatchError

Rational = Fraction
RatVec = Tuple[Fraction, ...]
RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Convert an int, a Fraction or a "p/q" string to a Fraction

    Floats are rejected so that no binary approximation sneaks in.

    Args:
        value: Value to convert

    Returns:
        Fraction: Reduced rational with positive denominator
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError(f"floating point value {value!r} is not allowed, use 'p/q' strings")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def rat_vec(values: Iterable[RationalLike]) -> RatVec:
    """Build a RatVec from any iterable of rational-like values"""
    return tuple(to_rational(v) for v in values)


def zero_vec(dim: int) -> RatVec:
    return (Fraction(0),) * dim


def unit_vec(dim: int, index: int, value: RationalLike = 1) -> RatVec:
    return tuple(to_rational(value) if i == index else Fraction(0) for i in range(dim))


def check_dims(*vectors: Sequence) -> int:
    """Return the common length of the vectors

    Raises:
        DimensionMismatchError: If the lengths differ
    """
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise DimensionMismatchError(f"vectors of different dimensions: {sorted(dims)}")
    return dims.pop() if dims else 0


def dot(u: Sequence, v: Sequence) -> Fraction:
    check_dims(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_add(u: Sequence, v: Sequence) -> RatVec:
    check_dims(u, v)
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> RatVec:
    check_dims(u, v)
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def vec_scale(c: RationalLike, v: Sequence) -> RatVec:
    c = Fraction(c)
    return tuple(c * a for a in v)


def sq_norm(v: Sequence) -> Fraction:
    return sum((Fraction(a) * a for a in v), Fraction(0))


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else 0


def primitive_integer_vector(values: Sequence) -> Tuple[int, ...]:
    """Scale a nonzero rational vector by a positive factor to coprime integers

    Args:
        values: Rational entries, not all zero

    Returns:
        tuple: Integer entries with gcd 1 and the same direction
    """
    fracs = [Fraction(v) for v in values]
    denominator = reduce(lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * denominator) for f in fracs]
    divisor = reduce(gcd, (abs(i) for i in ints), 0)
    if divisor == 0:
        raise ValueError("cannot normalize the zero vector")
    return tuple(i // divisor for i in ints)


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or a bare integer when q == 1"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vec(v: Sequence) -> str:
    return "(" + ", ".join(format_rational(a) for a in v) + ")"


def solve_linear_system(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[RatVec]:
    """Solve a square system exactly by Gauss-Jordan elimination

    Args:
        matrix: Square coefficient matrix
        rhs: Right-hand side

    Returns:
        RatVec or None: The unique solution, None when the matrix is singular
    """
    n = len(matrix)
    rows = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return None
        rows[c], rows[pivot] = rows[pivot], rows[c]
        lead = rows[c][c]
        rows[c] = [a / lead for a in rows[c]]
        for i in range(n):
            if i != c and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return tuple(row[n] for row in rows)
