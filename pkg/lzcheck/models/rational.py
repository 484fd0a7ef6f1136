"""
Rational functions num/den over a finite field.
"""

import logging
from typing import Mapping, Tuple

import sympy

from lzcheck.errors import DivisionUndefined, ZeroPolynomial
from lzcheck.models.fields import FieldElement
from lzcheck.models.polynomial import (
    DEGREVLEX, Polynomial, PolyRing, monomial_div,
)

logger = logging.getLogger(__name__)


def _to_sympy(poly: Polynomial, gens) -> sympy.Poly:
    p = poly.field.p
    return sympy.Poly.from_dict({m: c for m, c in poly.terms.items()}, *gens, modulus=p)


def _from_sympy(expr: sympy.Poly, ring: PolyRing) -> Polynomial:
    p = ring.field.p
    return Polynomial.from_dict(ring, {m: int(c) % p for m, c in expr.as_dict().items()})


def _monomial_content(poly: Polynomial) -> Tuple[int, ...]:
    return tuple(min(m[i] for m in poly.terms) for i in range(poly.ring.nvars))


def cancel(num: Polynomial, den: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Remove common factors.

    Over prime fields the full multivariate gcd is cancelled; over extension
    fields only the common monomial factor is.
    """
    if num.is_zero():
        return num, den.ring.one
    shift = tuple(min(a, b) for a, b in zip(_monomial_content(num), _monomial_content(den)))
    if any(shift):
        num = Polynomial(num.ring, {monomial_div(m, shift): c for m, c in num.terms.items()})
        den = Polynomial(den.ring, {monomial_div(m, shift): c for m, c in den.terms.items()})
    if num.field.is_prime_field and num.ring.nvars and not den.is_constant():
        gens = sympy.symbols(num.ring.variables)
        if isinstance(gens, sympy.Symbol):
            gens = (gens,)
        snum, sden = _to_sympy(num, gens), _to_sympy(den, gens)
        g = snum.gcd(sden)
        if g.total_degree() > 0:
            num = _from_sympy(snum.exquo(g), num.ring)
            den = _from_sympy(sden.exquo(g), den.ring)
    return num, den


class RationalFunction:
    """Quotient num/den in lowest terms with a monic denominator.

    The denominator's leading coefficient is taken under the global order so
    that the normalisation does not depend on the ring's attached order.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num: Polynomial, den: Polynomial = None, reduce: bool = True):
        if den is None:
            den = num.ring.one
        if den.is_zero():
            raise DivisionUndefined("denominator is zero")
        if reduce:
            num, den = cancel(num, den)
        lead = den.with_order(DEGREVLEX).leading_monomial()
        lc_inv = den.field.inv(den.terms[lead])
        self.num = num.scale(lc_inv) if lc_inv != 1 else num
        self.den = den.scale(lc_inv) if lc_inv != 1 else den

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> 'RationalFunction':
        return cls(poly, poly.ring.one, reduce=False)

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    # --- arithmetic ---

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_polynomial(other)
        if isinstance(other, (int, FieldElement)):
            return RationalFunction.from_polynomial(self.ring.constant(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionUndefined("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero():
                raise ZeroPolynomial("zero has no negative powers")
            return RationalFunction(self.den ** -k, self.num ** -k, reduce=False)
        return RationalFunction(self.num ** k, self.den ** k, reduce=False)

    # --- calculus ---

    def derivative(self, name: str) -> 'RationalFunction':
        """Quotient rule (num' den - num den') / den^2."""
        num = self.num.derivative(name) * self.den - self.num * self.den.derivative(name)
        return RationalFunction(num, self.den * self.den)

    def substitute(self, images: Mapping[str, 'RationalFunction'], target: PolyRing) -> 'RationalFunction':
        """Compose with a rational map given by ``images``."""
        return evaluate(self.num, images, target) / evaluate(self.den, images, target)

    def order_along(self, name: str) -> int:
        """Valuation along {name = 0}: order in num minus order in den."""
        if self.is_zero():
            raise ZeroPolynomial("the zero function has infinite order")
        return self.num.order_along(name) - self.den.order_along(name)

    def with_order(self, order) -> 'RationalFunction':
        return RationalFunction(self.num.with_order(order), self.den.with_order(order), reduce=False)

    # --- comparison / printing ---

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == self.ring.one:
            return str(self.num)
        num = str(self.num) if self.num.is_monomial() or self.num.is_constant() else f'({self.num})'
        den = str(self.den) if self.den.is_monomial() else f'({self.den})'
        return f'{num}/{den}'

    def __repr__(self):
        return f'RationalFunction({self})'


def evaluate(poly: Polynomial, images: Mapping[str, RationalFunction], target: PolyRing) -> RationalFunction:
    """Substitute rational functions for the variables of ``poly``."""
    result = RationalFunction.from_polynomial(target.zero)
    powers = {}
    for m, c in poly.terms.items():
        term = RationalFunction.from_polynomial(target.constant(FieldElement(poly.field, c)))
        for name, e in zip(poly.ring.variables, m):
            if not e:
                continue
            if (name, e) not in powers:
                image = images[name] if name in images else RationalFunction.from_polynomial(target.gen(name))
                powers[(name, e)] = image ** e
            term = term * powers[(name, e)]
        result = result + term
    return result
