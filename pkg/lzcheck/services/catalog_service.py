"""
Catalog Service - rational double points by characteristic.
Artin's equations with published flags, tameness, exception lists and table evaluation.
"""

import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import sympy

from lzcheck.errors import LzError, OutOfRange, WrongCharacteristic
from lzcheck.models.descriptors import AdeType, DualGraph, LiteratureFlags, RdpDescriptor
from lzcheck.models.fields import make_field
from lzcheck.models.polynomial import NEGDEGREVLEX, Polynomial, PolyRing
from lzcheck.services.singularity_service import SingularityService
from lzcheck.services.stdbasis_service import DEFAULT_PAIR_BUDGET, StandardBasisService

logger = logging.getLogger(__name__)

VARIABLES = ('x', 'y', 'z')

YES, NO = True, False


def _flags(f_pure: bool, almost_equivariant: bool, lz_holds: bool) -> LiteratureFlags:
    return LiteratureFlags(f_pure, almost_equivariant, lz_holds)


ALL_GOOD = _flags(YES, YES, YES)
ALL_BAD = _flags(NO, NO, NO)

A_TEMPLATE = 'x*y + z^{n+1}'
D_CLASSICAL_TEMPLATE = 'z^2 + x^2*y + y^{n-1}'

# p = 2, D_{2k}^r and D_{2k+1}^r
D_EVEN_TEMPLATES = {
    'zero': 'z^2 + x^2*y + x*y^{k}',
    'positive': 'z^2 + x^2*y + x*y^{k} + x*y^{k-r}*z',
}
D_ODD_TEMPLATES = {
    'zero': 'z^2 + x^2*y + y^{k}*z',
    'positive': 'z^2 + x^2*y + y^{k}*z + x*y^{k-r}*z',
}

E_CLASSICAL = {
    6: 'z^2 + x^3 + y^4',
    7: 'z^2 + x^3 + x*y^3',
    8: 'z^2 + x^3 + y^5',
}

# (n, r) -> (equation, flags) for the characteristics with non-classical forms
E_TABLES: Dict[int, Dict[Tuple[int, int], Tuple[str, LiteratureFlags]]] = {
    2: {
        (6, 0): ('z^2 + x^3 + y^2*z', _flags(NO, YES, NO)),
        (6, 1): ('z^2 + x^3 + y^2*z + x*y*z', ALL_GOOD),
        (7, 0): ('z^2 + x^3 + x*y^3', ALL_BAD),
        (7, 1): ('z^2 + x^3 + x*y^3 + x^2*y*z', ALL_BAD),
        (7, 2): ('z^2 + x^3 + x*y^3 + y^3*z', ALL_BAD),
        (7, 3): ('z^2 + x^3 + x*y^3 + x*y*z', ALL_GOOD),
        (8, 0): ('z^2 + x^3 + y^5', ALL_BAD),
        (8, 1): ('z^2 + x^3 + y^5 + x*y^3*z', ALL_BAD),
        (8, 2): ('z^2 + x^3 + y^5 + x*y^2*z', ALL_BAD),
        (8, 3): ('z^2 + x^3 + y^5 + y^3*z', _flags(NO, YES, YES)),
        (8, 4): ('z^2 + x^3 + y^5 + x*y*z', ALL_GOOD),
    },
    3: {
        (6, 0): ('z^2 + x^3 + y^4', ALL_BAD),
        (6, 1): ('z^2 + x^3 + y^4 + x^2*y^2', ALL_GOOD),
        (7, 0): ('z^2 + x^3 + x*y^3', _flags(NO, YES, NO)),
        (7, 1): ('z^2 + x^3 + x*y^3 + x^2*y^2', ALL_GOOD),
        (8, 0): ('z^2 + x^3 + y^5', ALL_BAD),
        (8, 1): ('z^2 + x^3 + y^5 + x^2*y^3', _flags(NO, YES, YES)),
        (8, 2): ('z^2 + x^3 + y^5 + x^2*y^2', ALL_GOOD),
    },
    5: {
        (8, 0): ('z^2 + x^3 + y^5', _flags(NO, YES, NO)),
        (8, 1): ('z^2 + x^3 + y^5 + x*y^4', ALL_GOOD),
    },
}

# (type, n, r, p) of the seven exceptions to the tame F-pure classification
COROLLARY_EXCEPTIONS = (
    (AdeType.E, 6, 0, 2),
    (AdeType.E, 8, 0, 2),
    (AdeType.E, 8, 1, 2),
    (AdeType.E, 8, 2, 2),
    (AdeType.E, 7, 0, 3),
    (AdeType.E, 8, 0, 3),
    (AdeType.E, 8, 0, 5),
)

CONE_MODULUS = 'a^2 - a - 1'
CONE_EQUATION = 'y^2*z - x*(x - a*z)*(x + z)'

_PLACEHOLDER = re.compile(r'\{([^}]*)\}')


def instantiate(template: str, **params: int) -> str:
    """Replace ``{expr}`` exponents such as ``{k-r}`` by their integer values."""
    symbols = {name: sympy.Integer(value) for name, value in params.items()}

    def value(match):
        return str(int(sympy.sympify(match.group(1), locals=symbols)))

    return _PLACEHOLDER.sub(value, template)


@dataclass(frozen=True)
class ComputedFlags:
    f_pure: bool
    min_gens: int
    tangent_free: bool

    @property
    def lz_holds(self) -> bool:
        return not self.tangent_free

    def to_dict(self):
        return {'f_pure': self.f_pure, 'min_gens': self.min_gens, 'tangent_free': self.tangent_free}


@dataclass
class TableRow:
    descriptor: RdpDescriptor
    computed: ComputedFlags
    diffs: List[str] = field(default_factory=list)

    def to_dict(self):
        data = self.descriptor.to_dict()
        data['computed'] = self.computed.to_dict()
        data['diffs'] = list(self.diffs)
        return data


@dataclass(frozen=True)
class ConeDescriptor:
    """The non-RDP elliptic cone over F_9 with its published verdict."""

    name: str
    p: int
    modulus: str
    equation_text: str
    graph: DualGraph
    tangent_free: bool = True

    def to_dict(self):
        return {
            'name': self.name,
            'p': self.p,
            'extension': self.modulus,
            'equation': self.equation_text,
            'determinant': abs(int(self.graph.intersection_matrix().det())),
            'literature': {'tangent_free': self.tangent_free},
        }


def _evaluate_row(args) -> ComputedFlags:
    descriptor, pair_budget = args
    service = CatalogService(pair_budget=pair_budget)
    return service.evaluate(descriptor)


class CatalogService:
    """Queryable atlas of rational double points."""

    def __init__(self, pair_budget: int = DEFAULT_PAIR_BUDGET,
                 singularity_service: Optional[SingularityService] = None):
        self.pair_budget = pair_budget
        self.singularity_service = singularity_service or SingularityService(StandardBasisService(pair_budget))

    # --- descriptors ---

    def describe(self, ade_type, n: int, p: int, r: Optional[int] = None) -> RdpDescriptor:
        """Validated descriptor with instantiated equation and published flags."""
        ade_type = AdeType(ade_type)
        if not sympy.isprime(p):
            raise OutOfRange(f"{p} is not a prime characteristic")
        if ade_type is AdeType.A:
            return self._describe_a(n, p, r)
        if ade_type is AdeType.D:
            return self._describe_d(n, p, r)
        return self._describe_e(n, p, r)

    @staticmethod
    def _describe_a(n: int, p: int, r: Optional[int]) -> RdpDescriptor:
        if n < 1:
            raise OutOfRange(f"A_n needs n >= 1, got {n}")
        if r is not None:
            raise OutOfRange("A_n has no coindex")
        flags = _flags(YES, YES, (n + 1) % p != 0)
        return RdpDescriptor(AdeType.A, n, p, None, A_TEMPLATE, instantiate(A_TEMPLATE, n=n), flags)

    @staticmethod
    def _describe_d(n: int, p: int, r: Optional[int]) -> RdpDescriptor:
        if n < 4:
            raise OutOfRange(f"D_n needs n >= 4, got {n}")
        if p != 2:
            if r is not None:
                raise WrongCharacteristic(f"D_{n}^{r} is only defined in characteristic 2")
            return RdpDescriptor(AdeType.D, n, p, None, D_CLASSICAL_TEMPLATE,
                                 instantiate(D_CLASSICAL_TEMPLATE, n=n), ALL_GOOD)
        if r is None:
            raise WrongCharacteristic("classical D_n is not the normal form in characteristic 2")
        k = n // 2
        if not 0 <= r <= k - 1:
            raise OutOfRange(f"D_{n}^r needs 0 <= r <= {k - 1}, got r = {r}")
        even = n % 2 == 0
        templates = D_EVEN_TEMPLATES if even else D_ODD_TEMPLATES
        template = templates['zero' if r == 0 else 'positive']
        if r == k - 1:
            flags = _flags(YES, NO, NO) if even else ALL_GOOD
        elif r == 0:
            flags = ALL_BAD
        else:
            flags = ALL_BAD if even else _flags(NO, NO, YES)
        return RdpDescriptor(AdeType.D, n, p, r, template, instantiate(template, k=k, r=r), flags)

    @staticmethod
    def _describe_e(n: int, p: int, r: Optional[int]) -> RdpDescriptor:
        if n not in E_CLASSICAL:
            raise OutOfRange(f"E_n needs n in 6, 7, 8, got {n}")
        table = E_TABLES.get(p, {})
        coindices = sorted(c for (m, c) in table if m == n)
        if not coindices:
            if r not in (None, 0):
                raise WrongCharacteristic(f"E_{n}^{r} is not defined in characteristic {p}")
            template = E_CLASSICAL[n]
            return RdpDescriptor(AdeType.E, n, p, None, template, template, ALL_GOOD)
        if r is None:
            r = 0
        if r not in coindices:
            raise OutOfRange(f"E_{n}^r in characteristic {p} needs r in {coindices}, got {r}")
        template, flags = table[(n, r)]
        return RdpDescriptor(AdeType.E, n, p, r, template, template, flags)

    def equation(self, d: RdpDescriptor, ring: Optional[PolyRing] = None) -> Polynomial:
        """The instantiated equation over F_p (local order unless ``ring`` is given)."""
        ring = ring or PolyRing(make_field(d.p), VARIABLES, NEGDEGREVLEX)
        return ring.parse(d.equation_text)

    # --- enumeration ---

    def entries(self, p: int, max_n: int) -> List[RdpDescriptor]:
        """Every table row applicable at p: A_n and classical D_n up to n = max_n,
        the p = 2 D families up to k = max_n, and the E rows."""
        if max_n < 1:
            raise OutOfRange(f"max_n must be positive, got {max_n}")
        rows = [self.describe(AdeType.A, n, p) for n in range(1, max_n + 1)]
        if p == 2:
            for k in range(2, max_n + 1):
                for total in (2 * k, 2 * k + 1):
                    rows.extend(self.describe(AdeType.D, total, p, r) for r in range(k))
        else:
            rows.extend(self.describe(AdeType.D, n, p) for n in range(4, max_n + 1))
        for n in (6, 7, 8):
            table = E_TABLES.get(p, {})
            coindices = sorted(c for (m, c) in table if m == n)
            if coindices:
                rows.extend(self.describe(AdeType.E, n, p, r) for r in coindices)
            else:
                rows.append(self.describe(AdeType.E, n, p))
        return rows

    def corollary_exceptions(self) -> List[RdpDescriptor]:
        return [self.describe(t, n, p, r) for t, n, r, p in COROLLARY_EXCEPTIONS]

    def free_tangent_witnesses(self, p: int, max_n: int) -> List[RdpDescriptor]:
        """Rows whose tangent module is known to be free."""
        rows = [self.describe(AdeType.A, n, p) for n in range(1, max_n + 1) if (n + 1) % p == 0]
        if p == 2:
            for k in range(2, max_n + 1):
                rows.append(self.describe(AdeType.D, 2 * k, p, 0))
                rows.append(self.describe(AdeType.D, 2 * k + 1, p, 0))
        e_ranks = {2: (6, 7, 8), 3: (6, 7, 8), 5: (8,)}.get(p, ())
        rows.extend(self.describe(AdeType.E, n, p, 0) for n in e_ranks)
        return rows

    def elliptic_cone(self) -> ConeDescriptor:
        return ConeDescriptor('elliptic cone', 3, CONE_MODULUS, CONE_EQUATION,
                              DualGraph(None, 3, kind='elliptic'))

    def cone_equation(self, ring: Optional[PolyRing] = None) -> Polynomial:
        cone = self.elliptic_cone()
        ring = ring or PolyRing(make_field(cone.p, cone.modulus), VARIABLES, NEGDEGREVLEX)
        return ring.parse(cone.equation_text)

    # --- tameness and exception lists ---

    @staticmethod
    def graph(d: RdpDescriptor) -> DualGraph:
        return DualGraph(d.ade_type, d.n)

    @staticmethod
    def tame_determinant(g: DualGraph) -> int:
        """|det| of the intersection matrix: n + 1, 4, 9 - n (or the self-intersection)."""
        if g.kind == 'elliptic':
            return g.n
        if g.ade_type is AdeType.A:
            return g.n + 1
        if g.ade_type is AdeType.D:
            return 4
        return 9 - g.n

    @staticmethod
    def determinant_oracle(g: DualGraph) -> int:
        return abs(int(g.intersection_matrix().det(method='bareiss')))

    def is_tame(self, g: DualGraph, p: int) -> bool:
        return self.tame_determinant(g) % p != 0

    @staticmethod
    def in_lz_exception_list(ade_type, n: int, p: int) -> bool:
        ade_type = AdeType(ade_type)
        if ade_type is AdeType.A:
            return (n + 1) % p == 0
        if ade_type is AdeType.D:
            return n >= 4 and p == 2
        if n in (6, 7):
            return p in (2, 3)
        return n == 8 and p in (2, 3, 5)

    def in_log_ext_exception_list(self, ade_type, n: int, p: int) -> bool:
        if AdeType(ade_type) is AdeType.A:
            return False
        return self.in_lz_exception_list(ade_type, n, p)

    # --- evaluation ---

    def evaluate(self, d: RdpDescriptor) -> ComputedFlags:
        f = self.equation(d)
        sing = self.singularity_service
        try:
            generators = sing.tangent_module(f)
            return ComputedFlags(sing.is_f_pure(f), len(generators), len(generators) == 2)
        except LzError as e:
            logger.error(f"[table] {d.name} at p = {d.p}: {e}")
            raise

    @staticmethod
    def diff(d: RdpDescriptor, computed: ComputedFlags) -> List[str]:
        diffs = []
        if d.literature is None:
            return diffs
        if d.literature.f_pure != computed.f_pure:
            diffs.append('f_pure')
        if d.literature.lz_holds != computed.lz_holds:
            diffs.append('lz_holds')
        return diffs

    def tame_f_pure_claim(self, d: RdpDescriptor, computed: ComputedFlags) -> bool:
        """Tame and F-pure rows never have a free tangent module."""
        if self.is_tame(self.graph(d), d.p) and computed.f_pure:
            return not computed.tangent_free
        return True

    def tabulate(self, p: int, max_n: int, workers: int = 1) -> List[TableRow]:
        """Evaluate every row at p, in catalog order, optionally on a process pool."""
        entries = self.entries(p, max_n)
        logger.info(f"[table] p = {p}: {len(entries)} rows, {workers} worker(s)")
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                computed = list(pool.map(_evaluate_row, [(d, self.pair_budget) for d in entries]))
        else:
            computed = [self.evaluate(d) for d in entries]
        rows = [TableRow(d, c, self.diff(d, c)) for d, c in zip(entries, computed)]
        mismatches = sum(1 for row in rows if row.diffs)
        if mismatches:
            logger.warning(f"[table] p = {p}: {mismatches} row(s) differ from the published flags")
        return rows
