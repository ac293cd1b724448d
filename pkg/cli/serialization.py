#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Output Serialization

Exact rationals are written as "p/q" strings (bare integers when q = 1).
Decimal approximations only appear under an explicit "approx" key.
"""

import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Dict, List, Optional

from geometry import HPolyhedron, format_rational, vertices_of_bounded
from geometry.exceptions import UnboundedPolyhedronError
from lct import LctPolytope
from sequence import SequenceRun

from .input_files import InequalityModel, PolytopeOutput


def approx(value: Fraction, digits: int) -> str:
    """Decimal rendering of an exact rational, rounded to ``digits`` places"""
    with localcontext() as ctx:
        ctx.prec = digits + 30
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return str(quotient.quantize(Decimal(1).scaleb(-digits)))


def rational_payload(value: Fraction, approx_digits: Optional[int] = None) -> Dict[str, str]:
    payload = {"value": format_rational(value)}
    if approx_digits is not None:
        payload["approx"] = approx(value, approx_digits)
    return payload


def polyhedron_payload(h: HPolyhedron, provenance: str = "derived",
                       approx_digits: Optional[int] = None) -> Dict[str, Any]:
    """PolytopeOutput document for a canonical H-polyhedron"""
    try:
        vertices = vertices_of_bounded(h)
    except UnboundedPolyhedronError:
        vertices = []
    output = PolytopeOutput(
        dim=h.dim,
        inequalities=[InequalityModel(normal=[format_rational(a) if a.denominator != 1 else int(a) for a in row.normal],
                                      offset=format_rational(row.offset))
                      for row in h.halfspaces],
        nonnegative=h.includes_nonnegativity,
        vertices=[[format_rational(c) for c in v] for v in vertices],
        provenance=provenance,
    )
    if approx_digits is not None:
        output.approx = {"vertices": [[approx(c, approx_digits) for c in v] for v in vertices]}
    return output.model_dump(exclude_none=True)


def polytope_payload(P: LctPolytope, approx_digits: Optional[int] = None) -> Dict[str, Any]:
    return polyhedron_payload(P.h, P.provenance, approx_digits)


def sequence_payload(run: SequenceRun, approx_digits: Optional[int] = None) -> Dict[str, Any]:
    """LimitReport plus per-term summaries"""
    report = run.report
    terms: List[Dict[str, Any]] = []
    for m, P, d2 in zip(report.indices, run.sequence.materialize(), report.sq_distance_profile):
        terms.append({
            "index": m,
            "inequalities": [str(row) for row in P.h.halfspaces],
            "sq_distance": rational_payload(d2, approx_digits),
        })
    payload = {
        "success": True,
        "mode": run.mode,
        "window": report.window,
        "stationary": report.stationary,
        "m0": report.m0,
        "support": [i + 1 for i in report.support],
        "candidate_limit": polyhedron_payload(report.candidate_limit, "derived", approx_digits),
        "sq_distance_profile": [format_rational(d) for d in report.sq_distance_profile],
        "terms": terms,
    }
    if run.base_sq_distance_profile is not None:
        payload["base_sq_distance_profile"] = [format_rational(d) for d in run.base_sq_distance_profile]
    return payload


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def to_text(payload: Dict[str, Any], indent: int = 0) -> str:
    """Plain key: value rendering of a payload"""
    pad = "  " * indent
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(to_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(to_text(item, indent + 1))
                lines.append("")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(
                "(" + ", ".join(map(str, v)) + ")" if isinstance(v, list) else str(v) for v in value))
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(line for line in lines if line is not None)
