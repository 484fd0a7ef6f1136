"""
catalog - JSON export of every table with computed columns and the elliptic cone.
"""

from lzcheck.errors import OutOfRange
from lzcheck.utils.export import export_catalog_json

CHARACTERISTICS = (2, 3, 5, 7)


def register(subparsers):
    parser = subparsers.add_parser('catalog', help='export the whole catalog as JSON')
    parser.add_argument('--max-n', type=int, default=None)
    parser.add_argument('--char', type=int, action='append', default=None,
                        help='restrict to these characteristics (repeatable)')
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    config = context.config
    max_n = args.max_n if args.max_n is not None else config.DEFAULT_MAX_N
    if not 1 <= max_n <= config.MAX_TABLE_N:
        raise OutOfRange(f"--max-n must be between 1 and {config.MAX_TABLE_N}, got {max_n}")
    catalog = context.catalog_service
    tables = {p: catalog.tabulate(p, max_n, context.workers) for p in (args.char or CHARACTERISTICS)}

    cone = catalog.elliptic_cone()
    f = catalog.cone_equation()
    generators = context.singularity_service.tangent_module(f)
    cone_data = cone.to_dict()
    cone_data['computed'] = {
        'f_pure': context.singularity_service.is_f_pure(f),
        'min_gens': len(generators),
        'tangent_free': len(generators) == 2,
    }
    print(export_catalog_json(tables, config.CATALOG_SCHEMA_VERSION, cone_data))
    return 0
