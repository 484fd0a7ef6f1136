"""
Command-line front end: argument parsing, context creation and error handlers.
"""

import argparse
import logging
import sys
from typing import List, Optional

from lzcheck import __version__, create_context
from lzcheck.commands import register_commands
from lzcheck.errors import LzError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='lzcheck',
        description='Tangent modules, F-purity and the Lipman-Zariski verdict for surface singularities.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--pair-budget', type=int, default=None, help='S-pair and reduction-step budget for standard bases')
    parser.add_argument('--workers', type=int, default=None, help='worker processes for table rows')
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging on stderr')
    subparsers = parser.add_subparsers(dest='command', required=True)
    register_commands(subparsers)
    for subparser in subparsers.choices.values():
        # overrides the global --pair-budget when given
        subparser.add_argument('--pair-budget', type=int, default=argparse.SUPPRESS,
                               help='S-pair and reduction-step budget for standard bases')
    return parser


def handle_error(error: Exception) -> int:
    """Print the error on stderr and map it to an exit code."""
    if isinstance(error, LzError):
        print(f"Error: {error}", file=sys.stderr)
        return error.exit_code
    logger.exception("Unexpected failure")
    print(f"Internal error: {error}", file=sys.stderr)
    return 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        context = create_context(pair_budget=args.pair_budget, workers=args.workers, verbose=args.verbose)
        return args.handler(args, context)
    except Exception as e:
        return handle_error(e)
