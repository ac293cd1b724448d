#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Polyhedron Value Types

Half-space (H) and vertex/ray (V) descriptions of convex rational polyhedra.
Both are immutable; every operation returns a new value.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .exceptions import DimensionMismatchError, EmptyInputError
from .rational import (RatVec, RationalLike, dot, format_rational, format_vec,
                       is_zero, primitive_integer_vector, rat_vec, to_rational,
                       unit_vec)


@dataclass(frozen=True)
class HalfSpace:
    """The closed half-space <normal, x> <= offset"""

    normal: RatVec
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", rat_vec(self.normal))
        object.__setattr__(self, "offset", to_rational(self.offset))
        if is_zero(self.normal):
            raise ValueError("half-space normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def slack(self, x: Iterable[RationalLike]) -> Fraction:
        return self.offset - dot(self.normal, tuple(x))

    def contains(self, x: Iterable[RationalLike]) -> bool:
        return self.slack(x) >= 0

    def is_tight(self, x: Iterable[RationalLike]) -> bool:
        return self.slack(x) == 0

    def scaled_to_integers(self) -> "HalfSpace":
        """Same half-space with coprime integer normal and offset"""
        ints = primitive_integer_vector(self.normal + (self.offset,))
        return HalfSpace(ints[:-1], ints[-1])

    def sort_key(self) -> Tuple:
        return (tuple(self.normal), self.offset)

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.normal):
            if a == 0:
                continue
            coeff = "" if a == 1 else "-" if a == -1 else format_rational(a)
            terms.append(f"{coeff}x{i + 1}")
        return " + ".join(terms).replace("+ -", "- ") + f" <= {format_rational(self.offset)}"


def nonnegativity_halfspaces(dim: int) -> Tuple[HalfSpace, ...]:
    """The rows -x_i <= 0 for every coordinate"""
    return tuple(HalfSpace(unit_vec(dim, i, -1), 0) for i in range(dim))


@dataclass(frozen=True)
class HPolyhedron:
    """Intersection of finitely many half-spaces

    When ``includes_nonnegativity`` is set, the constraints x >= 0 are part of
    the description without being listed in ``halfspaces``.
    """

    dim: int
    halfspaces: Tuple[HalfSpace, ...] = ()
    includes_nonnegativity: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        object.__setattr__(self, "halfspaces", tuple(self.halfspaces))
        for h in self.halfspaces:
            if h.dim != self.dim:
                raise DimensionMismatchError(
                    f"half-space of dimension {h.dim} in a polyhedron of dimension {self.dim}")

    def all_halfspaces(self) -> Tuple[HalfSpace, ...]:
        """Explicit rows followed by the implicit nonnegativity rows"""
        if self.includes_nonnegativity:
            return self.halfspaces + nonnegativity_halfspaces(self.dim)
        return self.halfspaces

    def contains(self, x: Iterable[RationalLike]) -> bool:
        x = rat_vec(x)
        if len(x) != self.dim:
            raise DimensionMismatchError(f"point of dimension {len(x)} tested against dimension {self.dim}")
        if self.includes_nonnegativity and any(c < 0 for c in x):
            return False
        return all(h.contains(x) for h in self.halfspaces)

    def with_halfspaces(self, extra: Iterable[HalfSpace]) -> "HPolyhedron":
        return HPolyhedron(self.dim, self.halfspaces + tuple(extra), self.includes_nonnegativity)

    def __str__(self) -> str:
        rows = [str(h) for h in self.halfspaces]
        if self.includes_nonnegativity:
            rows.append("x >= 0")
        return "{" + ", ".join(rows) + "}"


@dataclass(frozen=True)
class VPolyhedron:
    """conv(vertices) + cone(rays)"""

    dim: int
    vertices: Tuple[RatVec, ...]
    rays: Tuple[RatVec, ...] = field(default=())

    def __post_init__(self):
        vertices = tuple(rat_vec(v) for v in self.vertices)
        rays = tuple(rat_vec(r) for r in self.rays)
        if not vertices:
            raise EmptyInputError("a V-polyhedron needs at least one vertex")
        for v in vertices + rays:
            if len(v) != self.dim:
                raise DimensionMismatchError(
                    f"generator of dimension {len(v)} in a polyhedron of dimension {self.dim}")
        object.__setattr__(self, "vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "rays", tuple(sorted(rays)))

    @property
    def is_bounded(self) -> bool:
        return not self.rays

    def has_orthant_recession(self) -> bool:
        """True when the rays are exactly e_1, ..., e_n"""
        return set(self.rays) == {unit_vec(self.dim, i) for i in range(self.dim)}

    def __str__(self) -> str:
        text = "conv{" + ", ".join(format_vec(v) for v in self.vertices) + "}"
        if self.rays:
            text += " + cone{" + ", ".join(format_vec(r) for r in self.rays) + "}"
        return text


def orthant_rays(dim: int) -> Tuple[RatVec, ...]:
    return tuple(unit_vec(dim, i) for i in range(dim))


def box(upper: Iterable[RationalLike], lower: Optional[Iterable[RationalLike]] = None) -> HPolyhedron:
    """Axis-parallel box; with no lower corner the box starts at the origin"""
    upper = rat_vec(upper)
    dim = len(upper)
    rows = [HalfSpace(unit_vec(dim, i), u) for i, u in enumerate(upper)]
    if lower is None:
        return HPolyhedron(dim, tuple(rows), includes_nonnegativity=True)
    lower = rat_vec(lower)
    rows += [HalfSpace(unit_vec(dim, i, -1), -low) for i, low in enumerate(lower)]
    return HPolyhedron(dim, tuple(rows))
