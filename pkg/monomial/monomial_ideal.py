#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Monomial Ideals

A monomial ideal in k[x_1, ..., x_n] is stored as its minimal set of exponent
vectors. Ideal arithmetic reduces to operations on those vectors.
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, List, Sequence, Tuple

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]

# exponents must fit a signed 64-bit machine word
MAX_EXPONENT = 2 ** 63 - 1


class MonomialIdealError(ValueError):
    """Malformed generators or incompatible ideals"""


class ImproperIdealError(MonomialIdealError):
    """The ideal is the unit or the zero ideal, so it does not vanish at the origin"""


def _divides(u: Exponent, v: Exponent) -> bool:
    return all(a <= b for a, b in zip(u, v))


def _minimal(generators: Iterable[Exponent]) -> Tuple[Exponent, ...]:
    unique = sorted(set(generators))
    return tuple(g for g in unique if not any(h != g and _divides(h, g) for h in unique))


def _exponent(values: Sequence, n: int) -> Exponent:
    vec = tuple(values)
    if len(vec) != n:
        raise MonomialIdealError(f"exponent vector {vec} does not have length {n}")
    for a in vec:
        if isinstance(a, bool) or not isinstance(a, int):
            raise MonomialIdealError(f"exponents must be integers, got {a!r}")
        if a < 0 or a > MAX_EXPONENT:
            raise MonomialIdealError(f"exponent {a} outside [0, {MAX_EXPONENT}]")
    return vec


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by exponent vectors, kept minimalized

    An empty generator list is the zero ideal; the zero exponent vector makes
    the unit ideal. Both are representable but not ``proper``.
    """

    n: int
    generators: Tuple[Exponent, ...]

    def __post_init__(self):
        if self.n < 1:
            raise MonomialIdealError(f"number of variables must be positive, got {self.n}")
        vectors = [_exponent(g, self.n) for g in self.generators]
        object.__setattr__(self, "generators", _minimal(vectors))

    @classmethod
    def of(cls, *generators: Sequence[int]) -> "MonomialIdeal":
        """Build an ideal from exponent vectors, inferring n"""
        if not generators:
            raise MonomialIdealError("cannot infer the number of variables from no generators")
        return cls(len(generators[0]), tuple(tuple(g) for g in generators))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return (0,) * self.n in self.generators

    @property
    def proper(self) -> bool:
        """Nonzero and vanishing at the origin"""
        return not (self.is_zero or self.is_unit)

    def require_proper(self) -> "MonomialIdeal":
        if not self.proper:
            kind = "zero" if self.is_zero else "unit"
            raise ImproperIdealError(f"the {kind} ideal does not vanish at the origin")
        return self

    def contains_monomial(self, u: Sequence[int]) -> bool:
        return any(_divides(g, tuple(u)) for g in self.generators)

    @property
    def is_m_primary(self) -> bool:
        """Whether some power of every variable lies in the ideal"""
        return all(any(g[i] > 0 and sum(g) == g[i] for g in self.generators) for i in range(self.n))

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)

    def __str__(self) -> str:
        def mono(g: Exponent) -> str:
            parts = [f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(g) if a]
            return "*".join(parts) or "1"
        return "(" + ", ".join(mono(g) for g in self.generators) + ")"


def minimalize(a: MonomialIdeal) -> MonomialIdeal:
    """Minimal generating set; ideals are already stored this way"""
    return MonomialIdeal(a.n, _minimal(a.generators))


def order(a: MonomialIdeal) -> int:
    """Largest d with a contained in m^d"""
    a.require_proper()
    return min(sum(g) for g in a.generators)


def _check_same_n(a: MonomialIdeal, b: MonomialIdeal):
    if a.n != b.n:
        raise MonomialIdealError(f"ideals live in {a.n} and {b.n} variables")


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_n(a, b)
    sums = [tuple(x + y for x, y in zip(g, h)) for g in a.generators for h in b.generators]
    return MonomialIdeal(a.n, tuple(sums))


def power(a: MonomialIdeal, m: int) -> MonomialIdeal:
    """a^m for a positive integer m"""
    if m < 1:
        raise MonomialIdealError(f"power must be a positive integer, got {m}")
    result, base = None, a
    while m:
        if m & 1:
            result = base if result is None else product(result, base)
        m >>= 1
        if m:
            base = product(base, base)
    return result


def monomials_of_degree(n: int, d: int) -> List[Exponent]:
    """All exponent vectors in N^n with coordinate sum d"""
    monomials = []
    for combo in combinations_with_replacement(range(n), d):
        u = [0] * n
        for i in combo:
            u[i] += 1
        monomials.append(tuple(u))
    return sorted(monomials)


def maximal_ideal_power(n: int, d: int) -> MonomialIdeal:
    """m^d, generated by every monomial of degree d"""
    if d < 1:
        raise MonomialIdealError(f"degree must be positive, got {d}")
    return MonomialIdeal(n, tuple(monomials_of_degree(n, d)))


def add_generators(a: MonomialIdeal, monomials: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Ideal sum a + (monomials)"""
    return MonomialIdeal(a.n, a.generators + tuple(tuple(u) for u in monomials))


def truncate(a: MonomialIdeal, N: int) -> MonomialIdeal:
    """a + m^N"""
    if N < 1:
        raise MonomialIdealError(f"truncation degree must be positive, got {N}")
    return add_generators(a, monomials_of_degree(a.n, N))


def contains_ideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Whether b is contained in a"""
    _check_same_n(a, b)
    return all(a.contains_monomial(g) for g in b.generators)


def pullback(a: MonomialIdeal, extra_vars: int = 1) -> MonomialIdeal:
    """The same generators in n + extra_vars variables"""
    if extra_vars < 0:
        raise MonomialIdealError(f"cannot drop variables, got {extra_vars}")
    pad = (0,) * extra_vars
    return MonomialIdeal(a.n + extra_vars, tuple(g + pad for g in a.generators))


def lift_with_power(a: MonomialIdeal, d: int) -> MonomialIdeal:
    """a pulled back to one more variable y, plus (y^d)"""
    if d < 1:
        raise MonomialIdealError(f"power of the new variable must be positive, got {d}")
    lifted = pullback(a, 1)
    return add_generators(lifted, [(0,) * a.n + (d,)])
