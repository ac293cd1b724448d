#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
CLI Package

Input files, output serialization, command implementations and the
randomized verification suites behind ``lctpoly``.
"""

from .commands import COMMANDS, EXIT_FAILED, EXIT_IMPROPER, EXIT_OK, EXIT_USAGE, run_command
from .input_files import IdealSpecFile, InputFileError, PolytopeOutput, UsageError, load_input, parse_document
from .serialization import polyhedron_payload, polytope_payload, sequence_payload, to_json, to_text
from .verify_suites import SUITES, SuiteReport, run_suite

__all__ = [
    'COMMANDS', 'run_command', 'EXIT_OK', 'EXIT_FAILED', 'EXIT_USAGE', 'EXIT_IMPROPER',
    'IdealSpecFile', 'PolytopeOutput', 'InputFileError', 'UsageError', 'load_input', 'parse_document',
    'polyhedron_payload', 'polytope_payload', 'sequence_payload', 'to_json', 'to_text',
    'SUITES', 'SuiteReport', 'run_suite',
]
