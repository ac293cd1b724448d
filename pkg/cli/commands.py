#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command Implementations

Every command returns a JSON-ready payload and an exit code. Library errors
are mapped to exit codes in ``run_command``: 2 for unusable input or flags,
3 for improper ideals and invalid resolution data, 1 for failed checks.
"""

import logging
from typing import Any, Callable, Dict, Optional, Tuple

from config import ConfigManager
from geometry import GeometryError, format_rational
from lct import LctManager, LctPolytope, ResolutionDataError
from monomial import ImproperIdealError, MonomialIdealError
from sequence import SequenceError, SequenceLab

from .input_files import IdealSpecFile, InputFileError, UsageError, load_input
from .serialization import polytope_payload, rational_payload, sequence_payload
from .verify_suites import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IMPROPER = 3

Result = Tuple[Dict[str, Any], int]


def polytope_from_input(source: IdealSpecFile, manager: LctManager) -> LctPolytope:
    if source.kind == "ideals":
        return manager.from_ideals(source.to_ideals())
    if source.kind == "resolution":
        return manager.from_resolution(source.to_resolution())
    return manager.from_polyhedron(source.to_polyhedron())


def cmd_compute(args, config: ConfigManager) -> Result:
    """LCT-polytope of the input as canonical inequalities and vertices"""
    source = load_input(args.input)
    manager = LctManager(local=not getattr(args, "global_", False))
    P = polytope_from_input(source, manager)
    payload = {"success": True}
    payload.update(polytope_payload(P, _approx(args, config)))
    return payload, EXIT_OK


def cmd_lct(args, config: ConfigManager) -> Result:
    """Threshold of a single ideal, or of one coordinate of a tuple"""
    source = load_input(args.input)
    if source.kind != "ideals":
        raise UsageError("lct needs an ideals input")
    ideals = source.to_ideals()
    coordinate = None
    if args.coordinate is not None:
        coordinate = args.coordinate - 1
    elif len(ideals) != 1:
        raise UsageError(f"{len(ideals)} ideals given; pass --coordinate 1..{len(ideals)}")
    try:
        value = LctManager().threshold(ideals, coordinate)
    except ValueError as e:
        if isinstance(e, MonomialIdealError):
            raise
        raise UsageError(str(e))
    payload = {"success": True, "coordinate": (coordinate or 0) + 1, "lct": format_rational(value)}
    digits = _approx(args, config)
    if digits is not None:
        payload["approx"] = rational_payload(value, digits)["approx"]
    return payload, EXIT_OK


def cmd_distance(args, config: ConfigManager) -> Result:
    """Squared Hausdorff distance between the polytopes of two inputs"""
    manager = LctManager(local=not getattr(args, "global_", False))
    P = polytope_from_input(load_input(args.input_a), manager)
    Q = polytope_from_input(load_input(args.input_b), manager)
    if P.r != Q.r:
        raise UsageError(f"polytopes live in R^{P.r} and R^{Q.r}")
    value = manager.distance_sq(P, Q)
    payload = {"success": True, "sq_distance": format_rational(value)}
    digits = _approx(args, config)
    if digits is not None:
        payload["approx"] = rational_payload(value, digits)["approx"]
    return payload, EXIT_OK


def cmd_sequence(args, config: ConfigManager) -> Result:
    """Materialize a family and report its stationary-limit evidence"""
    source = load_input(args.input)
    if source.kind != "ideals":
        raise UsageError("sequence families are built from an ideals input")
    prefix = args.prefix if args.prefix is not None else config.get_value("sequence.prefix", 8)
    window = args.window if args.window is not None else config.get_value("sequence.window", 5)
    if prefix < 1 or window < 1:
        raise UsageError(f"prefix and window must be positive, got {prefix} and {window}")
    if prefix <= window:
        raise UsageError(f"prefix {prefix} must be longer than the window {window}")
    lab = SequenceLab(window=window, prefix=prefix, threads=config.verify_threads(getattr(args, "threads", None)))
    run = lab.run(args.mode, source.to_ideals(), prefix, window, axis=args.axis - 1)
    return sequence_payload(run, _approx(args, config)), EXIT_OK


def cmd_verify(args, config: ConfigManager) -> Result:
    """Run a randomized property suite; exit 1 on any failure"""
    seed = args.seed if args.seed is not None else config.get_value("verify.seed", 0)
    count = args.count if args.count is not None else config.get_value("verify.count", 50)
    progress = args.progress or bool(config.get_value("verify.progress", False))
    report = run_suite(args.suite, seed=seed, count=count,
                       threads=config.verify_threads(args.threads), progress=progress)
    if not report.success:
        logger.error(f"Suite {args.suite} failed on {len(report.failures)} of {count} instances (seed {seed})")
    return report.to_payload(), EXIT_OK if report.success else EXIT_FAILED


COMMANDS: Dict[str, Callable] = {
    "compute": cmd_compute,
    "lct": cmd_lct,
    "distance": cmd_distance,
    "sequence": cmd_sequence,
    "verify": cmd_verify,
}


def _approx(args, config: ConfigManager) -> Optional[int]:
    if not getattr(args, "approx", False):
        return None
    return int(config.get_value("output.approx_digits", 6))


def run_command(args, config: ConfigManager) -> Result:
    """Dispatch a parsed command and map errors to exit codes"""
    try:
        return COMMANDS[args.command](args, config)
    except (ImproperIdealError, ResolutionDataError) as e:
        logger.error(f"Invalid ideal data: {e}")
        return {"success": False, "message": str(e)}, EXIT_IMPROPER
    except (InputFileError, UsageError, MonomialIdealError, SequenceError, GeometryError) as e:
        logger.error(f"{args.command}: {e}")
        return {"success": False, "message": str(e)}, EXIT_USAGE
