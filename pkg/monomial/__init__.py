#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Monomial Package

Monomial ideals as minimal exponent sets and their Newton polyhedra.
"""

from .monomial_ideal import (ImproperIdealError, MonomialIdeal, MonomialIdealError, add_generators,
                             contains_ideal, lift_with_power, maximal_ideal_power, minimalize,
                             monomials_of_degree, order, power, product, pullback, truncate)
from .newton import NewtonPolyhedron, newton_polyhedron, scale

__all__ = [
    'MonomialIdeal', 'NewtonPolyhedron', 'MonomialIdealError', 'ImproperIdealError',
    'minimalize', 'order', 'product', 'power', 'truncate', 'contains_ideal',
    'maximal_ideal_power', 'monomials_of_degree', 'pullback', 'add_generators', 'lift_with_power',
    'newton_polyhedron', 'scale',
]
