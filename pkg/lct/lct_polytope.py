#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
LCT-Polytopes

Constructions of LCT(a_1, ..., a_r) from monomial ideals (Newton polyhedra),
from principal monomials (closed form) and from log resolution data.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable, List, Sequence, Tuple

from geometry import (HalfSpace, HPolyhedron, LPProblem, VPolyhedron, canonicalize, hull,
                      lp_feasible, minkowski_sum, vertices_of_bounded)
from geometry.exceptions import DimensionMismatchError
from geometry.rational import RatVec, RationalLike, primitive_integer_vector, rat_vec, unit_vec
from monomial import ImproperIdealError, MonomialIdeal, MonomialIdealError, newton_polyhedron

from .resolution import ResolutionData

logger = logging.getLogger(__name__)

PROVENANCES = ("monomial", "principal", "resolution", "derived")


@dataclass(frozen=True)
class LctPolytope:
    """An LCT-polytope in R^r with a record of how it was obtained

    Equality compares the canonical H-description only.
    """

    h: HPolyhedron
    provenance: str = field(default="derived", compare=False)
    source: Any = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def r(self) -> int:
        return self.h.dim

    def contains(self, lam: Iterable[RationalLike]) -> bool:
        return self.h.contains(lam)

    def vertices(self) -> List[RatVec]:
        return vertices_of_bounded(self.h)

    def __str__(self) -> str:
        return f"LCT[{self.provenance}] {self.h}"


def check_ideals(ideals: Sequence[MonomialIdeal]) -> int:
    """Validate a tuple of ideals for an LCT computation

    Returns:
        int: The common number of variables n
    """
    if not ideals:
        raise MonomialIdealError("at least one ideal is required")
    ns = {a.n for a in ideals}
    if len(ns) != 1:
        raise MonomialIdealError(f"ideals live in different numbers of variables: {sorted(ns)}")
    for a in ideals:
        a.require_proper()
    return ns.pop()


def membership_oracle(ideals: Sequence[MonomialIdeal], lam: Iterable[RationalLike]) -> bool:
    """Whether e lies in sum_i lam_i * P_{a_i}, decided by one exact LP

    Variables nu_{i,k} >= 0 weight the k-th generator of the i-th ideal with
    sum_k nu_{i,k} = lam_i and sum nu_{i,k} g_{i,k} <= e componentwise.
    A zero weight leaves only the orthant, so lam = 0 is always a member.
    """
    n = check_ideals(ideals)
    lam = rat_vec(lam)
    if len(lam) != len(ideals):
        raise DimensionMismatchError(f"weight vector of length {len(lam)} for {len(ideals)} ideals")
    if any(c < 0 for c in lam):
        raise ValueError(f"weights must be nonnegative, got {lam}")

    columns = [(i, g) for i, a in enumerate(ideals) for g in a.generators]
    equalities = []
    for i, value in enumerate(lam):
        equalities.append((tuple(1 if owner == i else 0 for owner, _ in columns), value))
    inequalities = [(tuple(g[j] for _, g in columns), 1) for j in range(n)]
    problem = LPProblem(len(columns), tuple(equalities), tuple(inequalities), (True,) * len(columns))
    return lp_feasible(problem).feasible


def inner_facet_normals(P: VPolyhedron) -> List[Tuple[int, ...]]:
    """Primitive inner facet normals of a Newton-type polyhedron, coordinate normals included"""
    normals = {tuple(int(j == k) for k in range(P.dim)) for j in range(P.dim)}
    for h in hull(P.vertices, P.rays).halfspaces:
        w = tuple(-a for a in h.normal)
        if all(c >= 0 for c in w):
            normals.add(primitive_integer_vector(w))
    return sorted(normals)


def _support_rows(ideals: Sequence[MonomialIdeal]) -> List[Tuple[Tuple[int, ...], Tuple[Fraction, ...]]]:
    """(w, (h_1(w), ..., h_r(w))) for every candidate normal w"""
    newtons = [newton_polyhedron(a) for a in ideals]
    total = reduce(minkowski_sum, (N.base for N in newtons))
    return [(w, tuple(N.support(w) for N in newtons)) for w in inner_facet_normals(total)]


def lct_polytope_monomial(ideals: Sequence[MonomialIdeal]) -> LctPolytope:
    """LCT-polytope of monomial ideals

    {lam >= 0 : sum_i h_i(w) lam_i <= <w, e> for every inner facet normal w of
    P_{a_1} + ... + P_{a_r}}, where h_i is the support function of P_{a_i}.
    """
    check_ideals(ideals)
    r = len(ideals)
    halfspaces = []
    for w, coefficients in _support_rows(ideals):
        if any(coefficients):
            halfspaces.append(HalfSpace(coefficients, sum(w)))
    h = canonicalize(HPolyhedron(r, tuple(halfspaces), includes_nonnegativity=True))
    logger.debug(f"LCT of {', '.join(map(str, ideals))}: {h}")
    return LctPolytope(h, "monomial", tuple(ideals))


def lct_polytope_principal(q: Sequence[Sequence[int]]) -> LctPolytope:
    """LCT-polytope of principal monomial ideals (x^{q_i})

    {lam >= 0 : sum_i q[i][j] lam_i <= 1 for every variable j}
    """
    rows = [tuple(row) for row in q]
    if not rows:
        raise MonomialIdealError("at least one exponent row is required")
    n = len(rows[0])
    if any(len(row) != n for row in rows):
        raise MonomialIdealError("exponent rows must share one length")
    for row in rows:
        if any(isinstance(c, bool) or not isinstance(c, int) or c < 0 for c in row):
            raise MonomialIdealError(f"exponents must be nonnegative integers, got {row}")
        if not any(row):
            raise ImproperIdealError("a zero exponent row is the unit ideal")
    halfspaces = []
    for j in range(n):
        column = tuple(row[j] for row in rows)
        if any(column):
            halfspaces.append(HalfSpace(column, 1))
    h = canonicalize(HPolyhedron(len(rows), tuple(halfspaces), includes_nonnegativity=True))
    return LctPolytope(h, "principal", tuple(rows))


def lct_polytope_from_resolution(data: ResolutionData, local: bool = True) -> LctPolytope:
    """{lam >= 0 : sum_i alpha[j][i] lam_i <= kappa_j + 1} over the chosen divisors

    Args:
        data: Resolution data
        local: Use only the divisors through x (the local polytope at x)

    Returns:
        LctPolytope: Canonical polytope
    """
    halfspaces = []
    for j in data.divisors(local):
        if any(data.alpha[j]):
            halfspaces.append(HalfSpace(data.alpha[j], data.kappa[j] + 1))
    h = canonicalize(HPolyhedron(data.r, tuple(halfspaces), includes_nonnegativity=True))
    logger.debug(f"LCT from {len(halfspaces)} divisors ({'local' if local else 'global'}): {h}")
    return LctPolytope(h, "resolution", data)


def toric_resolution_data(ideals: Sequence[MonomialIdeal]) -> ResolutionData:
    """Numerical data of the toric resolution of a_1 * ... * a_r

    One divisor per inner facet normal w of the Minkowski sum of the Newton
    polyhedra, with kappa = <w, e> - 1 and alpha_i = h_i(w).
    """
    check_ideals(ideals)
    rows = []
    for w, coefficients in _support_rows(ideals):
        name = "E" + "".join(f"[{c}]" for c in w)
        rows.append((name, sum(w) - 1, tuple(int(c) for c in coefficients)))
    return ResolutionData.from_rows(rows)


def embed_coordinates(P: HPolyhedron, support: Sequence[int], r: int) -> HPolyhedron:
    """Image of P under the inclusion of R^I into R^r on the coordinates ``support``

    Coordinates outside ``support`` are fixed at 0. With an empty support the
    result is the origin and P is ignored.
    """
    support = list(support)
    if len(set(support)) != len(support) or any(not 0 <= i < r for i in support):
        raise ValueError(f"invalid coordinate set {support} for dimension {r}")
    rows = []
    if support:
        if P.dim != len(support):
            raise DimensionMismatchError(f"polyhedron of dimension {P.dim} on {len(support)} coordinates")
        for h in P.all_halfspaces():
            normal = [0] * r
            for i, a in zip(support, h.normal):
                normal[i] = a
            rows.append(HalfSpace(tuple(normal), h.offset))
    for j in range(r):
        if j not in support:
            rows.append(HalfSpace(unit_vec(r, j), 0))
            rows.append(HalfSpace(unit_vec(r, j, -1), 0))
    return canonicalize(HPolyhedron(r, tuple(rows)))
