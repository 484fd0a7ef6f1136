"""
pair - pairing matrix of dlog y, dlog x with the free basis of T_X on D_{2n}^{n-1}, p = 2.
"""

import json

from lzcheck.errors import OutOfRange
from lzcheck.utils.formatting import format_matrix


def register(subparsers):
    parser = subparsers.add_parser('pair', help='pairing matrix <alpha_i, v_j> for D_{2n}^{n-1}')
    parser.add_argument('n', type=int)
    parser.add_argument('--json', action='store_true')
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    if args.n < 2:
        raise OutOfRange(f"n must be at least 2, got {args.n}")
    forms = context.forms_service
    basis = forms.dual_basis(args.n)
    matrix = forms.pairing_matrix(basis.forms, basis.derivations, basis.f)
    derivations_ok = all(context.singularity_service.verify_derivation(v, basis.f)
                         for v in basis.derivations)
    match = derivations_ok and forms.is_identity(matrix, basis.f)
    if args.json:
        print(json.dumps({
            'n': args.n,
            'f': str(basis.f),
            'matrix': [[str(e) for e in row] for row in matrix],
            'identity': match,
        }, indent=2))
    else:
        print(f"D_{2 * args.n}^{args.n - 1}: f = {basis.f} in characteristic p = 2")
        for j, v in enumerate(basis.derivations, start=1):
            print(f"v_{j} = {v}")
        for i, alpha in enumerate(basis.forms, start=1):
            print(f"alpha_{i} = {alpha}")
        print(format_matrix(matrix, ['alpha_1', 'alpha_2'], ['v_1', 'v_2']))
        print('MATCH' if match else 'MISMATCH')
    return 0 if match else 1
