"""
Multivariate polynomials over a FieldSpec, monomial orders and free-module vectors.

Monomials are exponent tuples, one entry per ring variable. Coefficients are
stored in the raw form of the field (see ``lzcheck.models.fields``).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from lzcheck.errors import OutOfRange, UnknownVariable, ZeroPolynomial
from lzcheck.models.fields import FieldElement, FieldSpec

VARIABLE_NAMES = ('x', 'y', 'z', 'u', 'v', 'w')
MAX_EXPONENT = 2 ** 16

Monomial = Tuple[int, ...]


# --- monomial helpers -----------------------------------------------------------

def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i - j for i, j in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True if a divides b."""
    return all(i <= j for i, j in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(i, j) for i, j in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


# --- orders ------------------------------------------------------------------------

class OrderKind(str, Enum):
    GLOBAL_DEGREVLEX = 'global_degrevlex'
    LOCAL_NEGDEGREVLEX = 'local_negdegrevlex'


@dataclass(frozen=True)
class MonomialOrder:
    """Degree reverse lexicographic order, global or local.

    ``key(m)`` is larger for larger monomials. The local variant ranks lower
    total degree first, so 1 is the largest monomial; ties are broken by
    degrevlex in both cases.
    """

    kind: OrderKind

    @property
    def is_local(self) -> bool:
        return self.kind is OrderKind.LOCAL_NEGDEGREVLEX

    def key(self, m: Monomial) -> tuple:
        deg = sum(m)
        return ((-deg if self.is_local else deg),) + tuple(-e for e in reversed(m))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return self.kind.value


DEGREVLEX = MonomialOrder(OrderKind.GLOBAL_DEGREVLEX)
NEGDEGREVLEX = MonomialOrder(OrderKind.LOCAL_NEGDEGREVLEX)


# --- rings -------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring k[variables] with an attached monomial order."""

    field: FieldSpec
    variables: Tuple[str, ...]
    order: MonomialOrder = NEGDEGREVLEX

    def __post_init__(self):
        allowed = VARIABLE_NAMES + (('a',) if self.field.is_prime_field else ())
        for name in self.variables:
            if name not in allowed:
                raise UnknownVariable(f"'{name}' is not an admissible variable")
        if len(set(self.variables)) != len(self.variables):
            raise OutOfRange("ring variables must be distinct")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"'{name}' is not a variable of the ring {self.variables}") from None

    @property
    def zero(self) -> 'Polynomial':
        return Polynomial(self, {})

    @property
    def one(self) -> 'Polynomial':
        return self.constant(1)

    def constant(self, c) -> 'Polynomial':
        raw = c.raw if isinstance(c, FieldElement) else self.field.from_int(c)
        return Polynomial(self, {(0,) * self.nvars: raw} if raw else {})

    def gen(self, name: str) -> 'Polynomial':
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> Tuple['Polynomial', ...]:
        return tuple(self.gen(name) for name in self.variables)

    def monomial(self, exps: Monomial, coeff: int = 1) -> 'Polynomial':
        return Polynomial(self, {tuple(exps): coeff} if coeff else {})

    def with_order(self, order: MonomialOrder) -> 'PolyRing':
        return PolyRing(self.field, self.variables, order)

    def parse(self, src: str) -> 'Polynomial':
        from lzcheck.utils.parser import parse_polynomial
        return parse_polynomial(src, self)

    def __str__(self):
        return f"{self.field}[{', '.join(self.variables)}] ({self.order})"


# --- polynomials -------------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial: a map monomial -> nonzero raw coefficient."""

    __slots__ = ('ring', 'terms', '_lead')

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, int]):
        self.ring = ring
        self.terms = terms
        self._lead = None

    @classmethod
    def from_dict(cls, ring: PolyRing, terms: Mapping[Monomial, int]) -> 'Polynomial':
        return cls(ring, {tuple(m): c for m, c in terms.items() if c})

    # --- inspection ---

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def constant_term(self) -> FieldElement:
        return FieldElement(self.field, self.terms.get((0,) * self.ring.nvars, 0))

    def order_along(self, name: str) -> int:
        """Largest k such that name^k divides the polynomial."""
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has infinite order")
        i = self.ring.index(name)
        return min(m[i] for m in self.terms)

    def leading_monomial(self) -> Monomial:
        if self._lead is None:
            if not self.terms:
                raise ZeroPolynomial("the zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring.order.key)
        return self._lead

    def leading_term(self) -> Tuple[Monomial, FieldElement]:
        m = self.leading_monomial()
        return m, FieldElement(self.field, self.terms[m])

    def sorted_terms(self) -> list:
        """Terms in descending order of the attached monomial order."""
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    # --- arithmetic ---

    def _check(self, other: 'Polynomial'):
        if other.ring.field != self.ring.field or other.ring.variables != self.ring.variables:
            raise TypeError("Cannot combine polynomials of different rings")

    def _coerce(self, other) -> Optional['Polynomial']:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        add = self.field.add
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = add(terms.get(m, 0), c)
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            raw = other.raw if isinstance(other, FieldElement) else self.field.from_int(other)
            return self.scale(raw)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        add, mul = self.field.add, self.field.mul
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(i + j for i, j in zip(m1, m2))
                s = add(terms.get(m, 0), mul(c1, c2))
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return power_poly(self, k)

    def scale(self, raw: int) -> 'Polynomial':
        if not raw:
            return self.ring.zero
        mul = self.field.mul
        return Polynomial(self.ring, {m: mul(c, raw) for m, c in self.terms.items()})

    def mul_term(self, mono: Monomial, raw: int) -> 'Polynomial':
        mul = self.field.mul
        return Polynomial(self.ring, {monomial_mul(m, mono): mul(c, raw)
                                      for m, c in self.terms.items()})

    def monic(self) -> 'Polynomial':
        """Scale so that the leading coefficient is 1."""
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.terms[self.leading_monomial()]))

    def derivative(self, name: str) -> 'Polynomial':
        """Formal partial derivative; d(x^p)/dx = 0 in characteristic p."""
        i = self.ring.index(name)
        field = self.field
        terms = {}
        for m, c in self.terms.items():
            e = m[i]
            if e % field.p == 0:
                continue
            d = list(m)
            d[i] = e - 1
            terms[tuple(d)] = field.mul(c, field.from_int(e))
        return Polynomial(self.ring, terms)

    def exact_divide(self, other: 'Polynomial') -> 'Polynomial':
        """Quotient of an exact division, computed under a global order."""
        quotient, remainder = divide(self.with_order(DEGREVLEX), [other.with_order(DEGREVLEX)])
        if not remainder.is_zero():
            raise ValueError("division is not exact")
        return quotient[0].with_order(self.ring.order)

    def substitute(self, images: Mapping[str, 'Polynomial'], target: PolyRing) -> 'Polynomial':
        """Replace each variable by a polynomial of ``target``."""
        powers = {}
        result = target.zero
        for m, c in self.terms.items():
            term = target.constant(FieldElement(self.field, c))
            for name, e in zip(self.ring.variables, m):
                if not e:
                    continue
                if (name, e) not in powers:
                    image = images[name] if name in images else target.gen(name)
                    powers[(name, e)] = power_poly(image, e)
                term = term * powers[(name, e)]
            result = result + term
        return result

    def with_order(self, order: MonomialOrder) -> 'Polynomial':
        if order == self.ring.order:
            return self
        return Polynomial(self.ring.with_order(order), self.terms)

    change_order = with_order

    def in_ring(self, ring: PolyRing) -> 'Polynomial':
        """Same polynomial viewed in a ring with the same field and variables."""
        if ring == self.ring:
            return self
        if ring.field != self.field or ring.variables != self.ring.variables:
            raise TypeError("rings are not compatible")
        return Polynomial(ring, self.terms)

    # --- comparison / printing ---

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.ring.field == other.ring.field
                    and self.ring.variables == other.ring.variables
                    and self.terms == other.terms)
        if isinstance(other, (int, FieldElement)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.ring.variables, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f'{name}^{e}')
        return '*'.join(parts)

    def __str__(self):
        if not self.terms:
            return '0'
        out = []
        field = self.field
        for m, c in self.sorted_terms():
            mono = self.format_monomial(m)
            coeff = field.format(c)
            if not mono:
                out.append(coeff)
            elif c == 1:
                out.append(mono)
            elif ' + ' in coeff:
                out.append(f'({coeff})*{mono}')
            else:
                out.append(f'{coeff}*{mono}')
        return ' + '.join(out)

    def __repr__(self):
        return f'Polynomial({self})'


def leading_term(f: Polynomial) -> Tuple[Monomial, FieldElement]:
    """Maximal term of f under its ring's order."""
    return f.leading_term()


def power_poly(f: Polynomial, k: int) -> Polynomial:
    """f^k by repeated squaring."""
    if k < 0:
        raise OutOfRange("negative exponents are not polynomials")
    if any(e * k >= MAX_EXPONENT for m in f.terms for e in m):
        raise OutOfRange(f"exponent overflow in power {k}")
    result = f.ring.one
    base = f
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> Tuple[list, Polynomial]:
    """Multivariate division with remainder under the ring's (global) order."""
    if f.ring.order.is_local:
        raise ValueError("division with remainder needs a global order")
    field = f.field
    quotients = [f.ring.zero for _ in divisors]
    leads = [(g.leading_monomial(), field.inv(g.terms[g.leading_monomial()])) for g in divisors]
    remainder: Dict[Monomial, int] = {}
    h = f
    while not h.is_zero():
        m = h.leading_monomial()
        c = h.terms[m]
        for i, (lm, lc_inv) in enumerate(leads):
            if monomial_divides(lm, m):
                factor = monomial_div(m, lm)
                coeff = field.mul(c, lc_inv)
                quotients[i] = quotients[i] + f.ring.monomial(factor, coeff)
                h = h - divisors[i].mul_term(factor, coeff)
                break
        else:
            remainder[m] = c
            terms = dict(h.terms)
            del terms[m]
            h = Polynomial(h.ring, terms)
    return quotients, Polynomial(f.ring, remainder)


# --- vectors -----------------------------------------------------------------------

@dataclass(frozen=True)
class VectorPoly:
    """Element of a free module R^s, stored as a tuple of polynomials."""

    components: Tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.components:
            raise OutOfRange("vectors need at least one component")
        ring = self.components[0].ring
        for c in self.components[1:]:
            if c.ring.field != ring.field or c.ring.variables != ring.variables:
                raise TypeError("vector components live in different rings")

    @classmethod
    def of(cls, *components: Polynomial) -> 'VectorPoly':
        return cls(tuple(components))

    @classmethod
    def unit(cls, ring: PolyRing, rank: int, i: int) -> 'VectorPoly':
        return cls(tuple(ring.one if j == i else ring.zero for j in range(rank)))

    @property
    def ring(self) -> PolyRing:
        return self.components[0].ring

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i: int) -> Polynomial:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: 'VectorPoly') -> 'VectorPoly':
        return VectorPoly(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: 'VectorPoly') -> 'VectorPoly':
        return VectorPoly(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return VectorPoly(tuple(-c for c in self.components))

    def __mul__(self, scalar) -> 'VectorPoly':
        return VectorPoly(tuple(c * scalar for c in self.components))

    __rmul__ = __mul__

    def dot(self, other: 'VectorPoly') -> Polynomial:
        total = self.ring.zero
        for a, b in zip(self.components, other.components):
            total = total + a * b
        return total

    def with_order(self, order: MonomialOrder) -> 'VectorPoly':
        return VectorPoly(tuple(c.with_order(order) for c in self.components))

    def __eq__(self, other):
        if not isinstance(other, VectorPoly):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return '(' + ', '.join(str(c) for c in self.components) + ')'


def jacobian(f: Polynomial, variables: Optional[Iterable[str]] = None) -> VectorPoly:
    """Row of partial derivatives (df/dx, df/dy, df/dz) in characteristic p."""
    names = tuple(variables) if variables is not None else f.ring.variables
    return VectorPoly(tuple(f.derivative(name) for name in names))
