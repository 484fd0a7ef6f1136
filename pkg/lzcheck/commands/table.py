"""
table - regenerate the characteristic-p table of rational double points.
"""

import logging

from lzcheck.errors import OutOfRange
from lzcheck.utils.export import export_table_json, export_table_markdown
from lzcheck.utils.formatting import format_table

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('table', help='computed vs published flags for every RDP at p')
    parser.add_argument('-p', '--char', type=int, required=True)
    parser.add_argument('--max-n', type=int, default=None, help='largest family parameter')
    parser.add_argument('--json', action='store_true')
    parser.add_argument('--markdown', action='store_true')
    parser.add_argument('--strict', action='store_true', help='exit 1 if any row differs')
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    config = context.config
    max_n = args.max_n if args.max_n is not None else config.DEFAULT_MAX_N
    if not 1 <= max_n <= config.MAX_TABLE_N:
        raise OutOfRange(f"--max-n must be between 1 and {config.MAX_TABLE_N}, got {max_n}")
    rows = context.catalog_service.tabulate(args.char, max_n, context.workers)
    if args.json:
        print(export_table_json(rows, args.char, config.CATALOG_SCHEMA_VERSION))
    elif args.markdown:
        print(export_table_markdown(rows, args.char), end='')
    else:
        print(format_table(rows, args.char))
    if args.strict and any(row.diffs for row in rows):
        return 1
    return 0
