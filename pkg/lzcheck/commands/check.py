"""
check - F-purity, tangent module and Lipman-Zariski verdict of one germ.
"""

import logging

from lzcheck.models.descriptors import CheckRequest
from lzcheck.models.fields import make_field
from lzcheck.models.polynomial import NEGDEGREVLEX, PolyRing
from lzcheck.utils.export import export_report_json
from lzcheck.utils.formatting import format_check_report

logger = logging.getLogger(__name__)

VARIABLES = ('x', 'y', 'z')


def register(subparsers):
    parser = subparsers.add_parser('check', help='decide F-purity and freeness of T_X for {f = 0}')
    parser.add_argument('f', help='polynomial in x, y, z, e.g. "z^2+x^3+y^5"')
    parser.add_argument('-p', '--char', type=int, required=True, help='characteristic')
    parser.add_argument('--ext', default=None, help='minimal polynomial of a, e.g. "a^2-a-1"')
    parser.add_argument('--json', action='store_true', help='print the report as JSON')
    parser.set_defaults(handler=run)


def handle(request: CheckRequest, context):
    """Evaluate a CheckRequest and return the GermReport."""
    field = make_field(request.p, request.ext)
    ring = PolyRing(field, VARIABLES, NEGDEGREVLEX)
    f = ring.parse(request.f)
    logger.info(f"[check] f = {f} over {field}")
    return context.singularity_service.check_germ(f, request.ext)


def run(args, context) -> int:
    request = CheckRequest(p=args.char, f=args.f, ext=args.ext, output='json' if args.json else 'text')
    report = handle(request, context)
    if request.output == 'json':
        print(export_report_json(report))
    else:
        print(format_check_report(report))
    return 0
