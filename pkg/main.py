#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
lctpoly

Exact LCT-polytopes of monomial ideals and of log resolution data, Hausdorff
distances between them, and limit experiments on sequences of LCT-polytopes.
"""

import argparse
import logging
import sys

from config import ConfigManager
from cli import SUITES, run_command, to_json, to_text
from sequence import MODES

logger = logging.getLogger(__name__)


def parse_args(argv=None):
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(prog='lctpoly', description='Exact LCT-polytope toolkit')
    parser.add_argument('--config', type=str, default=None, help='Configuration file path')
    parser.add_argument('--debug', action='store_true', help='Enable debug mode')
    parser.add_argument('--output', choices=['json', 'text'], default=None, help='Output format')
    parser.add_argument('--approx', action='store_true', help='Append decimal approximations')
    sub = parser.add_subparsers(dest='command', required=True)

    compute = sub.add_parser('compute', help='LCT-polytope of an input file')
    compute.add_argument('input', help='Input JSON file')
    compute.add_argument('--global', dest='global_', action='store_true',
                         help='Use every divisor of the resolution data, not only those through x')

    lct = sub.add_parser('lct', help='Log canonical threshold of an ideal')
    lct.add_argument('input', help='Input JSON file')
    lct.add_argument('--coordinate', type=int, default=None, help='Ideal of a tuple to use (1-based)')

    distance = sub.add_parser('distance', help='Squared Hausdorff distance between two inputs')
    distance.add_argument('input_a', help='First input JSON file')
    distance.add_argument('input_b', help='Second input JSON file')

    sequence = sub.add_parser('sequence', help='Stationary-limit report for a polytope family')
    sequence.add_argument('input', help='Input JSON file with ideals')
    sequence.add_argument('--mode', choices=MODES, default='truncate', help='Family to build')
    sequence.add_argument('--prefix', type=int, default=None, help='Number of terms')
    sequence.add_argument('--window', type=int, default=None, help='Trailing terms that must agree')
    sequence.add_argument('--axis', type=int, default=1, help='Coordinate of the prism family (1-based)')

    verify = sub.add_parser('verify', help='Randomized property suite')
    verify.add_argument('--suite', choices=sorted(SUITES), required=True, help='Suite to run')
    verify.add_argument('--seed', type=int, default=None, help='Seed of the instance generator')
    verify.add_argument('--count', type=int, default=None, help='Number of instances')
    verify.add_argument('--threads', type=int, default=None, help='Worker threads (overrides LCTPOLY_THREADS)')
    verify.add_argument('--progress', action='store_true', help='Show a progress bar')
    return parser.parse_args(argv)


def setup_logging(config: ConfigManager, debug: bool):
    """Configure the root logger; standard output stays reserved for results"""
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = config.get_value('logging.file')
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    level = logging.DEBUG if debug else getattr(logging, str(config.get_value('logging.level', 'WARNING')).upper(),
                                                logging.WARNING)
    logging.basicConfig(
        level=level,
        format=config.get_value('logging.format', '%(asctime)s - %(name)s - %(levelname)s - %(message)s'),
        handlers=handlers,
        force=True
    )
    if debug:
        logger.debug("Debug mode enabled")


def main(argv=None):
    """Main program entry"""
    args = parse_args(argv)

    config_manager = ConfigManager(args.config)
    config_manager.load_config()
    setup_logging(config_manager, args.debug)

    payload, code = run_command(args, config_manager)
    output_format = args.output or config_manager.get_value('output.format', 'json')
    print(to_text(payload) if output_format == 'text' else to_json(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
