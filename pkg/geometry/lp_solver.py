#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact Linear Programming

LPs are handed to cddlib's ``LinProg`` in ``fraction`` arithmetic, so every
verdict and optimum is exact.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import cdd

from .cdd_matrix import inequality_matrix
from .exceptions import MalformedProblemError
from .rational import RatVec, RationalLike, rat_vec, to_rational, unit_vec

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_DUAL_INCONSISTENT = (cdd.LPStatusType.DUAL_INCONSISTENT, cdd.LPStatusType.STRUC_DUAL_INCONSISTENT)

Row = Tuple[RatVec, Fraction]


@dataclass(frozen=True)
class LPProblem:
    """Linear constraints over ``num_variables`` unknowns

    ``equalities`` hold rows (a, b) meaning <a, x> = b and ``inequalities``
    hold rows meaning <a, x> <= b. ``nonnegative[j]`` marks x_j >= 0.
    """

    num_variables: int
    equalities: Tuple[Row, ...] = ()
    inequalities: Tuple[Row, ...] = ()
    nonnegative: Tuple[bool, ...] = field(default=())

    def __post_init__(self):
        if self.num_variables < 1:
            raise MalformedProblemError("an LP needs at least one variable")
        object.__setattr__(self, "equalities", self._normalize(self.equalities, "equality"))
        object.__setattr__(self, "inequalities", self._normalize(self.inequalities, "inequality"))
        mask = tuple(bool(m) for m in self.nonnegative) or (False,) * self.num_variables
        if len(mask) != self.num_variables:
            raise MalformedProblemError(
                f"nonnegativity mask has {len(mask)} entries for {self.num_variables} variables")
        object.__setattr__(self, "nonnegative", mask)

    def _normalize(self, rows, kind: str) -> Tuple[Row, ...]:
        normalized = []
        for row in rows:
            try:
                coeffs, rhs = row
            except (TypeError, ValueError):
                raise MalformedProblemError(f"{kind} row must be a (coefficients, rhs) pair: {row!r}")
            coeffs = rat_vec(coeffs)
            if len(coeffs) != self.num_variables:
                raise MalformedProblemError(
                    f"{kind} row has {len(coeffs)} coefficients, expected {self.num_variables}")
            normalized.append((coeffs, to_rational(rhs)))
        return tuple(normalized)


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    point: Optional[RatVec] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    witness: Optional[RatVec] = None

    def __bool__(self) -> bool:
        return self.feasible


def _matrix(problem: LPProblem):
    nonneg = [(tuple(-a for a in unit_vec(problem.num_variables, j)), Fraction(0))
              for j, flag in enumerate(problem.nonnegative) if flag]
    return inequality_matrix(problem.num_variables, list(problem.inequalities) + nonneg, problem.equalities)


def _run(problem: LPProblem, objective: RatVec, maximize: bool):
    mat = _matrix(problem)
    mat.obj_type = cdd.LPObjType.MAX if maximize else cdd.LPObjType.MIN
    mat.obj_func = (Fraction(0),) + tuple(objective)
    lp = cdd.LinProg(mat)
    lp.solve()
    return lp


def lp_feasible(problem: LPProblem) -> FeasibilityVerdict:
    """Decide feasibility exactly

    Args:
        problem: Linear system to test

    Returns:
        FeasibilityVerdict: Verdict with a witness point when feasible
    """
    lp = _run(problem, (Fraction(0),) * problem.num_variables, True)
    if lp.status != cdd.LPStatusType.OPTIMAL:
        return FeasibilityVerdict(False)
    return FeasibilityVerdict(True, tuple(Fraction(a) for a in lp.primal_solution))


def solve_lp(problem: LPProblem, objective: Sequence[RationalLike], maximize: bool = True) -> LPResult:
    """Optimize a linear objective over the problem's feasible set

    Args:
        problem: Constraints
        objective: Objective coefficients, one per variable
        maximize: Maximize when True, minimize otherwise

    Returns:
        LPResult: Status, optimal value and an optimal point
    """
    objective = rat_vec(objective)
    if len(objective) != problem.num_variables:
        raise MalformedProblemError(
            f"objective has {len(objective)} coefficients, expected {problem.num_variables}")
    lp = _run(problem, objective, maximize)
    if lp.status == cdd.LPStatusType.OPTIMAL:
        point = tuple(Fraction(a) for a in lp.primal_solution)
        return LPResult(OPTIMAL, Fraction(lp.obj_value), point)
    # dual inconsistency only means unbounded once the primal is feasible
    if lp.status in _DUAL_INCONSISTENT and lp_feasible(problem):
        return LPResult(UNBOUNDED)
    logger.debug(f"LP status {lp.status}: infeasible")
    return LPResult(INFEASIBLE)
