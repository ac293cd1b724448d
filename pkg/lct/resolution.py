#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Log Resolution Data

Numerical data of a log resolution of (X, a_1 * ... * a_r): for each divisor
E_j its discrepancy kappa_j and the vanishing orders alpha[j][i] of the
ideals along it. Resolutions are only ever read as input.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class ResolutionDataError(ValueError):
    """Inconsistent or unbounded resolution data"""


def _nonnegative_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ResolutionDataError(f"{what} must be a nonnegative integer, got {value!r}")
    return value


@dataclass(frozen=True)
class ResolutionData:
    """Discrepancies and vanishing orders of the divisors of a log resolution

    ``alpha[j][i]`` is the order of the i-th ideal along the j-th divisor.
    ``through_x`` lists the divisors whose image contains the point x.
    """

    kappa: Tuple[int, ...]
    alpha: Tuple[Tuple[int, ...], ...]
    through_x: Tuple[int, ...]
    names: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        kappa = tuple(_nonnegative_int(k, "kappa") for k in self.kappa)
        if not kappa:
            raise ResolutionDataError("resolution data needs at least one divisor")
        if len(self.alpha) != len(kappa):
            raise ResolutionDataError(f"alpha has {len(self.alpha)} rows for {len(kappa)} divisors")
        alpha = tuple(tuple(_nonnegative_int(a, "alpha") for a in row) for row in self.alpha)
        widths = {len(row) for row in alpha}
        if len(widths) != 1 or 0 in widths:
            raise ResolutionDataError(f"alpha rows must share one positive length, got {sorted(widths)}")
        through = tuple(sorted(set(self.through_x)))
        for j in through:
            if isinstance(j, bool) or not isinstance(j, int) or not 0 <= j < len(kappa):
                raise ResolutionDataError(f"divisor index {j!r} out of range")
        names = tuple(self.names) or tuple(f"E{j + 1}" for j in range(len(kappa)))
        if len(names) != len(kappa):
            raise ResolutionDataError(f"{len(names)} names for {len(kappa)} divisors")

        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "through_x", through)
        object.__setattr__(self, "names", names)

        for i in range(self.r):
            if not any(alpha[j][i] > 0 for j in through):
                raise ResolutionDataError(
                    f"ideal {i + 1} vanishes along no divisor through x, so its threshold is unbounded")

    @property
    def r(self) -> int:
        return len(self.alpha[0])

    @property
    def N(self) -> int:
        return len(self.kappa)

    def divisors(self, local: bool = True) -> List[int]:
        return list(self.through_x) if local else list(range(self.N))

    def to_dict(self) -> Dict:
        return {
            "kappa": list(self.kappa),
            "alpha": [list(row) for row in self.alpha],
            "through_x": list(self.through_x),
            "names": list(self.names),
        }

    @classmethod
    def from_rows(cls, rows: Sequence[Tuple[str, int, Sequence[int]]],
                  through_x: Optional[Sequence[int]] = None) -> "ResolutionData":
        """Build from (name, kappa, alpha row) triples; every divisor passes through x by default"""
        names = tuple(name for name, _, _ in rows)
        kappa = tuple(k for _, k, _ in rows)
        alpha = tuple(tuple(a) for _, _, a in rows)
        through = tuple(range(len(rows))) if through_x is None else tuple(through_x)
        return cls(kappa, alpha, through, names)
