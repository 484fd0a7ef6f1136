"""
Exact arithmetic in prime fields F_p and small extensions F_p[a]/(mu(a)).

Elements are handled in two forms: the raw form used inside the polynomial
kernel (an int in [0, p^m) whose base-p digits are the coefficients of
1, a, ..., a^(m-1)) and the FieldElement value type of the public API.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

import sympy

from lzcheck.errors import NotPrime, OutOfRange, Reducible, ZeroInverse

logger = logging.getLogger(__name__)

MAX_CHARACTERISTIC = 2 ** 31
MAX_EXTENSION_DEGREE = 4
# Full addition/multiplication tables are built for fields up to this size.
TABLE_LIMIT = 256


@dataclass(frozen=True)
class FieldSpec:
    """A finite field F_p or F_p[a]/(mu(a)).

    ``modulus`` holds the coefficients of the monic polynomial mu, lowest
    degree first; it is ``None`` for prime fields.
    """

    p: int
    modulus: Optional[tuple] = None
    _add: Optional[tuple] = field(default=None, repr=False, compare=False, hash=False)
    _mul: Optional[tuple] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.modulus is not None and self.size <= TABLE_LIMIT:
            elems = range(self.size)
            add = tuple(tuple(self._add_digits(a, b) for b in elems) for a in elems)
            mul = tuple(tuple(self._mul_digits(a, b) for b in elems) for a in elems)
            object.__setattr__(self, '_add', add)
            object.__setattr__(self, '_mul', mul)

    # --- shape -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return 1 if self.modulus is None else len(self.modulus) - 1

    @property
    def size(self) -> int:
        return self.p ** self.degree

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is None

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def generator(self) -> 'FieldElement':
        """The class of ``a`` (or 1 in a prime field)."""
        return self.element(self.p if self.modulus is not None else 1)

    def element(self, raw: int) -> 'FieldElement':
        return FieldElement(self, raw)

    def elements(self) -> Iterator['FieldElement']:
        for raw in range(self.size):
            yield FieldElement(self, raw)

    def parse_element(self, src: str) -> 'FieldElement':
        from lzcheck.utils.parser import parse_element
        return parse_element(src, self)

    # --- raw encoding ------------------------------------------------------

    def encode(self, digits: Sequence[int]) -> int:
        raw = 0
        for d in reversed(digits):
            raw = raw * self.p + d % self.p
        return raw

    def decode(self, raw: int) -> list:
        digits = []
        for _ in range(self.degree):
            raw, d = divmod(raw, self.p)
            digits.append(d)
        return digits

    def from_int(self, n: int) -> int:
        return n % self.p

    # --- raw arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.modulus is None:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.modulus is None:
            return -a % self.p
        return self.encode([-d for d in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.modulus is None:
            return a * b % self.p
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_digits(a, b)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.modulus is None:
            return pow(a, k, self.p)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no inverse")
        if self.modulus is None:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def _add_digits(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def _mul_digits(self, a: int, b: int) -> int:
        m, p = self.degree, self.p
        xs, ys = self.decode(a), self.decode(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(xs):
            if x:
                for j, y in enumerate(ys):
                    prod[i + j] += x * y
        # a^m = -(mu_0 + mu_1 a + ... + mu_{m-1} a^(m-1))
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(m):
                    prod[d - m + i] -= c * self.modulus[i]
            prod[d] = 0
        return self.encode(prod[:m])

    # --- printing ----------------------------------------------------------

    def format(self, raw: int) -> str:
        """Render a raw element; extension elements as polynomials in ``a``."""
        if self.modulus is None:
            return str(raw)
        parts = []
        for i, d in reversed(list(enumerate(self.decode(raw)))):
            if d == 0:
                continue
            if i == 0:
                parts.append(str(d))
            else:
                power = 'a' if i == 1 else f'a^{i}'
                parts.append(power if d == 1 else f'{d}*{power}')
        return ' + '.join(parts) if parts else '0'

    def describe(self) -> str:
        if self.modulus is None:
            return f'F_{self.p}'
        return f'F_{self.size}'

    def __str__(self):
        return self.describe()


@dataclass(frozen=True)
class FieldElement:
    """Immutable element of a FieldSpec."""

    spec: FieldSpec
    raw: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise TypeError("Cannot combine elements of different fields")
            return other.raw
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.raw, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.raw))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.raw, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.raw, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.raw, b))

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.raw == self.spec.from_int(other)
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.raw == other.raw
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.raw))

    def is_zero(self) -> bool:
        return self.raw == 0

    def inverse(self) -> 'FieldElement':
        return FieldElement(self.spec, self.spec.inv(self.raw))

    def __str__(self):
        return self.spec.format(self.raw)

    def __repr__(self):
        return f'FieldElement({self.spec.describe()}, {self})'


def make_field(p: int, mu: Union[None, str, Sequence[int]] = None) -> FieldSpec:
    """Build F_p, or F_p[a]/(mu) when ``mu`` is given.

    ``mu`` may be a string in the polynomial grammar (variable ``a``) or a
    coefficient list, lowest degree first.
    """
    if p < 2 or not sympy.isprime(p):
        raise NotPrime(f"{p} is not a prime number")
    if p >= MAX_CHARACTERISTIC:
        raise OutOfRange(f"characteristic {p} exceeds 2^31")
    if mu is None:
        return FieldSpec(p)

    coeffs = _modulus_coefficients(p, mu)
    m = len(coeffs) - 1
    if not 2 <= m <= MAX_EXTENSION_DEGREE:
        raise OutOfRange(f"extension degree must be between 2 and {MAX_EXTENSION_DEGREE}, got {m}")

    lead_inv = pow(coeffs[-1], p - 2, p)
    coeffs = tuple(c * lead_inv % p for c in coeffs)

    a = sympy.Symbol('a')
    if not sympy.Poly(list(reversed(coeffs)), a, modulus=p).is_irreducible:
        raise Reducible(f"minimal polynomial is reducible over F_{p}")

    logger.debug(f"[field] F_{p}^{m} with modulus {coeffs}")
    return FieldSpec(p, coeffs)


def _modulus_coefficients(p: int, mu) -> list:
    if isinstance(mu, str):
        from lzcheck.models.polynomial import PolyRing, DEGREVLEX
        ring = PolyRing(FieldSpec(p), ('a',), DEGREVLEX)
        poly = ring.parse(mu)
        if poly.is_zero():
            raise OutOfRange("minimal polynomial is zero")
        deg = poly.total_degree()
        coeffs = [0] * (deg + 1)
        for (e,), c in poly.terms.items():
            coeffs[e] = c
    else:
        coeffs = [c % p for c in mu]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def power(x: FieldElement, k: int) -> FieldElement:
    """x^k, reduced by the minimal polynomial; negative k needs x != 0."""
    return FieldElement(x.spec, x.spec.pow(x.raw, k))


def frobenius(x: FieldElement) -> FieldElement:
    """x^p."""
    return FieldElement(x.spec, x.spec.frobenius(x.raw))
