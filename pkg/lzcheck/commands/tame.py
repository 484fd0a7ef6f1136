"""
tame - determinant of the intersection matrix and tameness in characteristic p.
"""

import json

from lzcheck.errors import OutOfRange
from lzcheck.models.descriptors import AdeType, DualGraph


def register(subparsers):
    parser = subparsers.add_parser('tame', help='tameness of an ADE dual graph')
    parser.add_argument('type', help='A, D or E')
    parser.add_argument('n', type=int)
    parser.add_argument('p', type=int, help='characteristic')
    parser.add_argument('--json', action='store_true')
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    try:
        ade_type = AdeType(args.type.upper())
    except ValueError:
        raise OutOfRange(f"unknown ADE type '{args.type}'") from None
    if args.p < 2:
        raise OutOfRange(f"{args.p} is not a characteristic")
    catalog = context.catalog_service
    graph = DualGraph(ade_type, args.n)
    det = catalog.tame_determinant(graph)
    tame = catalog.is_tame(graph, args.p)
    if args.json:
        print(json.dumps({'graph': graph.name, 'p': args.p, 'determinant': det, 'tame': tame}, indent=2))
    else:
        print(f"|det({graph.name})| = {det}")
        print(f"{graph.name} is {'' if tame else 'not '}tame in characteristic p = {args.p}.")
    return 0
