#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Newton Polyhedra

P_a = conv{u : x^u in a} + R_+^n for a monomial ideal a.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Tuple

from geometry import VPolyhedron, hull, newton_type, support_min
from geometry.rational import RatVec, RationalLike, rat_vec

from .monomial_ideal import MonomialIdeal, MonomialIdealError, power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Newton polyhedron together with the ideal it came from"""

    base: VPolyhedron
    source: MonomialIdeal

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def vertices(self) -> Tuple[RatVec, ...]:
        return self.base.vertices

    def support(self, w: Iterable[RationalLike]) -> Fraction:
        """h(w) = min over the polyhedron of <w, u>"""
        return support_min(self.base, w)

    def contains(self, u: Iterable[RationalLike]) -> bool:
        """Membership test against the facet description"""
        u = rat_vec(u)
        return hull(self.base.vertices, self.base.rays).contains(u)


@lru_cache(maxsize=1024)
def newton_polyhedron(a: MonomialIdeal) -> NewtonPolyhedron:
    """Newton polyhedron of a proper monomial ideal

    Raises:
        ImproperIdealError: For the unit or the zero ideal
    """
    a.require_proper()
    base = newton_type(a.generators, a.n)
    logger.debug(f"Newton polyhedron of {a}: {len(base.vertices)} vertices")
    return NewtonPolyhedron(base, a)


def scale(P: NewtonPolyhedron, m: int) -> NewtonPolyhedron:
    """m * P, which is the Newton polyhedron of the m-th power of the source"""
    if m < 1:
        raise MonomialIdealError(f"scale factor must be a positive integer, got {m}")
    vertices = tuple(tuple(m * c for c in v) for v in P.vertices)
    return NewtonPolyhedron(VPolyhedron(P.dim, vertices, P.base.rays), power(P.source, m))
