"""
pullback - v^(-n) dv along v = w^2 / (u^2 + u) in characteristic 2, with its pole order.
"""

import json

from lzcheck.errors import OutOfRange, WrongCharacteristic


def register(subparsers):
    parser = subparsers.add_parser('pullback', help='pull back v^(-n) dv to the (u, w)-plane')
    parser.add_argument('n', type=int)
    parser.add_argument('-p', '--char', type=int, default=2)
    parser.add_argument('--json', action='store_true')
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    if args.char != 2:
        raise WrongCharacteristic("the parametrization v = w^2/(u^2 + u) needs characteristic 2")
    if args.n < 2:
        raise OutOfRange(f"n must be at least 2, got {args.n}")
    forms = context.forms_service
    pulled = forms.example_pullback(args.n)
    expected = forms.expected_pullback(args.n)
    order = forms.pole_order(pulled, 'w')
    match = forms.forms_identical(pulled, expected) and order == 2 * args.n - 2
    if args.json:
        print(json.dumps({
            'n': args.n,
            'pullback': str(pulled),
            'expected': str(expected),
            'pole_order': order,
            'match': match,
        }, indent=2))
    else:
        print(f"phi^*(v^-{args.n} dv) = {pulled}")
        print(f"expected: {expected}")
        print(f"pole order along w = 0: {order}")
        print('MATCH' if match else 'MISMATCH')
    return 0 if match else 1
