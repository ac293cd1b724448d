#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Input Files

Versioned JSON input files, validated with pydantic. A file carries exactly
one of: monomial ideals, log resolution data, or an explicit polytope. A
``compute`` output document is accepted as a polytope file as well.
"""

import json
import logging
from pathlib import Path
from typing import List, Literal, Optional, Tuple, Union

from pydantic import (BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, StrictInt,
                      ValidationError, field_validator, model_validator)

from geometry import HalfSpace, HPolyhedron
from geometry.rational import to_rational
from lct import ResolutionData
from monomial import MonomialIdeal

logger = logging.getLogger(__name__)

RationalText = Union[StrictInt, str]


class InputFileError(ValueError):
    """Unreadable or invalid input file"""


class UsageError(ValueError):
    """Flags that do not fit the input"""


def _check_rational(value):
    try:
        to_rational(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact rational: {value!r}")
    return value


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class IdealModel(_Strict):
    monomials: List[List[NonNegativeInt]] = Field(min_length=1)


class ResolutionModel(_Strict):
    """Divisor indices in ``through_x`` are 1-based; omitted means every divisor"""

    kappa: List[NonNegativeInt] = Field(min_length=1)
    alpha: List[List[NonNegativeInt]] = Field(min_length=1)
    through_x: Optional[List[PositiveInt]] = None
    names: Optional[List[str]] = None


class InequalityModel(_Strict):
    normal: List[RationalText] = Field(min_length=1)
    offset: RationalText

    @field_validator("normal")
    @classmethod
    def _normal_rational(cls, values):
        values = [_check_rational(v) for v in values]
        if all(to_rational(v) == 0 for v in values):
            raise ValueError("inequality normal must not be the zero vector")
        return values

    @field_validator("offset")
    @classmethod
    def _offset_rational(cls, value):
        return _check_rational(value)


class PolytopeModel(_Strict):
    dim: PositiveInt
    inequalities: List[InequalityModel] = Field(default_factory=list)
    nonnegative: bool = False


class IdealSpecFile(_Strict):
    """Top-level input document, ``format`` 1"""

    format: Literal[1]
    vars: Optional[PositiveInt] = None
    ideals: Optional[List[IdealModel]] = None
    resolution: Optional[ResolutionModel] = None
    polytope: Optional[PolytopeModel] = None

    @model_validator(mode="after")
    def _one_source(self):
        present = [name for name in ("ideals", "resolution", "polytope") if getattr(self, name) is not None]
        if len(present) != 1:
            raise ValueError(f"exactly one of ideals, resolution, polytope is required, got {present or 'none'}")
        if self.ideals is not None:
            if not self.ideals:
                raise ValueError("the ideals list is empty")
            if self.vars is None:
                raise ValueError("'vars' is required with ideals")
            for k, ideal in enumerate(self.ideals):
                for u in ideal.monomials:
                    if len(u) != self.vars:
                        raise ValueError(f"ideal {k + 1}: exponent vector {u} does not have length {self.vars}")
        if self.polytope is not None:
            for row in self.polytope.inequalities:
                if len(row.normal) != self.polytope.dim:
                    raise ValueError(f"inequality normal {row.normal} does not have length {self.polytope.dim}")
        return self

    @property
    def kind(self) -> str:
        if self.ideals is not None:
            return "ideals"
        return "resolution" if self.resolution is not None else "polytope"

    def to_ideals(self) -> Tuple[MonomialIdeal, ...]:
        return tuple(MonomialIdeal(self.vars, tuple(tuple(u) for u in ideal.monomials)) for ideal in self.ideals)

    def to_resolution(self) -> ResolutionData:
        res = self.resolution
        through = range(len(res.kappa)) if res.through_x is None else [j - 1 for j in res.through_x]
        return ResolutionData(tuple(res.kappa), tuple(tuple(row) for row in res.alpha),
                              tuple(through), tuple(res.names or ()))

    def to_polyhedron(self) -> HPolyhedron:
        poly = self.polytope
        rows = tuple(HalfSpace(tuple(to_rational(a) for a in row.normal), to_rational(row.offset))
                     for row in poly.inequalities)
        return HPolyhedron(poly.dim, rows, includes_nonnegativity=poly.nonnegative)


class PolytopeOutput(_Strict):
    """Serialized polytope as written by ``compute``"""

    format: Literal[1] = 1
    dim: PositiveInt
    inequalities: List[InequalityModel]
    nonnegative: bool
    vertices: List[List[str]] = Field(default_factory=list)
    provenance: str = "derived"
    approx: Optional[dict] = None


def parse_document(document: dict) -> IdealSpecFile:
    """Validate an already decoded JSON document"""
    try:
        if isinstance(document, dict) and "inequalities" in document:
            # compute writes a success flag next to the polytope
            document = {k: v for k, v in document.items() if k != "success"}
            output = PolytopeOutput.model_validate(document)
            polytope = PolytopeModel(dim=output.dim, inequalities=output.inequalities,
                                     nonnegative=output.nonnegative)
            return IdealSpecFile(format=1, polytope=polytope)
        return IdealSpecFile.model_validate(document)
    except ValidationError as e:
        raise InputFileError(f"invalid input: {e.error_count()} error(s): "
                             + "; ".join(f"{'.'.join(map(str, err['loc'])) or '<root>'}: {err['msg']}"
                                         for err in e.errors()))


def load_input(path: Union[str, Path]) -> IdealSpecFile:
    """Read and validate an input file

    Raises:
        InputFileError: If the file cannot be read, is not JSON or fails validation
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileError(f"cannot read {path}: {e}")
    except UnicodeDecodeError as e:
        raise InputFileError(f"{path} is not UTF-8 text: {e}")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFileError(f"{path} is not valid JSON: {e}")
    source = parse_document(document)
    logger.debug(f"Loaded {source.kind} input from {path}")
    return source
