"""
Forms Service - rational 1-forms on hypersurfaces.
Pairing with derivations, pullback along rational maps, pole orders and equality on {f = 0}.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from lzcheck.errors import DivisionUndefined, OutOfRange
from lzcheck.models.descriptors import Derivation
from lzcheck.models.fields import FieldElement, make_field
from lzcheck.models.polynomial import (
    DEGREVLEX, Polynomial, PolyRing, VectorPoly, jacobian,
)
from lzcheck.models.rational import RationalFunction, evaluate
from lzcheck.services.stdbasis_service import AmbientRing

logger = logging.getLogger(__name__)

Scalar = Union[RationalFunction, Polynomial, int, FieldElement]


def _as_rational(value: Scalar, ring: PolyRing) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction.from_polynomial(value)
    return RationalFunction.from_polynomial(ring.constant(value))


class ReflexiveForm:
    """Formal sum of g_i * d(h_i), g_i rational functions and h_i polynomials."""

    __slots__ = ('ring', 'terms')

    def __init__(self, ring: PolyRing, terms: Sequence[Tuple[RationalFunction, Polynomial]] = ()):
        self.ring = ring
        self.terms = tuple((g, h) for g, h in terms if not g.is_zero() and not h.is_constant())

    @classmethod
    def differential(cls, h: Polynomial) -> 'ReflexiveForm':
        return cls(h.ring, [(RationalFunction.from_polynomial(h.ring.one), h)])

    @classmethod
    def zero(cls, ring: PolyRing) -> 'ReflexiveForm':
        return cls(ring)

    @classmethod
    def from_coefficients(cls, ring: PolyRing, coeffs: Mapping[str, RationalFunction]) -> 'ReflexiveForm':
        """Sum of coeffs[name] * d(name)."""
        return cls(ring, [(c, ring.gen(name)) for name, c in coeffs.items()])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients().values())

    # --- algebra ---

    def __add__(self, other):
        if not isinstance(other, ReflexiveForm):
            return NotImplemented
        return ReflexiveForm(self.ring, self.terms + other.terms)

    def __neg__(self):
        return ReflexiveForm(self.ring, [(-g, h) for g, h in self.terms])

    def __sub__(self, other):
        if not isinstance(other, ReflexiveForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, ReflexiveForm):
            return NotImplemented
        s = _as_rational(scalar, self.ring)
        return ReflexiveForm(self.ring, [(s * g, h) for g, h in self.terms])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = _as_rational(scalar, self.ring)
        return ReflexiveForm(self.ring, [(g / s, h) for g, h in self.terms])

    # --- collected form ---

    def coefficients(self, variables: Optional[Sequence[str]] = None) -> Dict[str, RationalFunction]:
        """A_x with the form equal to sum A_x * dx."""
        names = tuple(variables) if variables is not None else self.ring.variables
        coeffs = {}
        for name in names:
            total = RationalFunction.from_polynomial(self.ring.zero)
            for g, h in self.terms:
                dh = h.derivative(name) if name in h.ring.variables else h.ring.zero
                if not dh.is_zero():
                    total = total + g * dh
            coeffs[name] = total
        return coeffs

    def collected(self) -> 'ReflexiveForm':
        coeffs = {name: c for name, c in self.coefficients().items() if not c.is_zero()}
        return ReflexiveForm.from_coefficients(self.ring, coeffs)

    def __str__(self):
        parts = []
        for name, c in self.coefficients().items():
            if c.is_zero():
                continue
            num, den = c.num, c.den
            if num == 1:
                text = f'd{name}'
            elif num.is_monomial():
                text = f'{num}*d{name}'
            else:
                text = f'({num})*d{name}'
            if not den == 1:
                text += f'/{den}' if den.is_monomial() else f'/({den})'
            parts.append(text)
        return ' + '.join(parts) if parts else '0'

    def __repr__(self):
        return f'ReflexiveForm({self})'


@dataclass(frozen=True)
class RationalMap:
    """Map from the ``source`` space sending each target variable to a rational function."""

    source: PolyRing
    target: PolyRing
    images: Dict[str, RationalFunction]

    def __post_init__(self):
        for name, image in self.images.items():
            if name not in self.target.variables:
                raise OutOfRange(f"'{name}' is not a target variable")
            if image.den.is_zero():
                raise DivisionUndefined(f"image of {name} has a zero denominator")


@dataclass(frozen=True)
class KahlerRelation:
    """df = f_x dx + f_y dy + f_z dz, the zero form on {f = 0}."""

    f: Polynomial
    partials: Dict[str, Polynomial]
    holds: bool

    @property
    def form(self) -> ReflexiveForm:
        ring = self.f.ring
        return ReflexiveForm.from_coefficients(
            ring, {name: RationalFunction.from_polynomial(g) for name, g in self.partials.items()})

    def __str__(self):
        return f'{self.form} = 0'


@dataclass(frozen=True)
class NonExtendingForm:
    """A reflexive form given in two presentations that agree on {f = 0}."""

    name: str
    p: int
    f: Polynomial
    first: ReflexiveForm
    second: ReflexiveForm


@dataclass(frozen=True)
class DualBasis:
    f: Polynomial
    forms: Tuple[ReflexiveForm, ReflexiveForm]
    derivations: Tuple[Derivation, Derivation]


class FormsService:
    """Service for 1-forms: pairing, pullback, pole order and identities mod f."""

    # --- reduction mod f ---

    @staticmethod
    def _reduce(g: Polynomial, f: Polynomial) -> Polynomial:
        ring = AmbientRing(f.ring.with_order(DEGREVLEX), f.with_order(DEGREVLEX))
        return ring.reduce(g.in_ring(f.ring).with_order(DEGREVLEX)).with_order(f.ring.order)

    def _check_denominator(self, den: Polynomial, f: Polynomial):
        if self._reduce(den, f).is_zero():
            raise DivisionUndefined(f"denominator {den} vanishes on {{f = 0}}")

    def vanishes_on(self, r: RationalFunction, f: Polynomial) -> bool:
        self._check_denominator(r.den, f)
        return self._reduce(r.num, f).is_zero()

    def classes_equal(self, a: Scalar, b: Scalar, f: Polynomial) -> bool:
        """a = b as functions on {f = 0}, by cross-multiplication."""
        a, b = _as_rational(a, f.ring), _as_rational(b, f.ring)
        self._check_denominator(a.den, f)
        self._check_denominator(b.den, f)
        return self._reduce(a.num * b.den - b.num * a.den, f).is_zero()

    # --- pairing ---

    def pair(self, alpha: ReflexiveForm, v: Derivation, f: Polynomial) -> RationalFunction:
        """alpha(v) = sum g_i * v(h_i), numerator reduced mod f."""
        total = RationalFunction.from_polynomial(f.ring.zero)
        for g, h in alpha.terms:
            total = total + g * v.apply(h.in_ring(f.ring))
        self._check_denominator(total.den, f)
        return RationalFunction(self._reduce(total.num, f), total.den)

    def pairing_matrix(self, forms: Sequence[ReflexiveForm], derivations: Sequence[Derivation],
                       f: Polynomial) -> List[List[RationalFunction]]:
        return [[self.pair(alpha, v, f) for v in derivations] for alpha in forms]

    def is_identity(self, matrix: List[List[RationalFunction]], f: Polynomial) -> bool:
        return all(self.classes_equal(entry, int(i == j), f)
                   for i, row in enumerate(matrix) for j, entry in enumerate(row))

    # --- pullback ---

    def pullback(self, alpha: ReflexiveForm, phi: RationalMap) -> ReflexiveForm:
        """phi^*(alpha) collected as sum A_s * ds over the source variables."""
        source = phi.source
        coeffs = {name: RationalFunction.from_polynomial(source.zero) for name in source.variables}
        for g, h in alpha.terms:
            g_pulled = g.substitute(phi.images, source)
            h_pulled = evaluate(h, phi.images, source)
            for name in source.variables:
                dh = h_pulled.derivative(name)
                if not dh.is_zero():
                    coeffs[name] = coeffs[name] + g_pulled * dh
        logger.debug(f"[pullback] {alpha} -> {coeffs}")
        return ReflexiveForm.from_coefficients(source, {n: c for n, c in coeffs.items() if not c.is_zero()})

    @staticmethod
    def pole_order(alpha: ReflexiveForm, divisor: str) -> int:
        """Largest pole order along {divisor = 0} among the collected coefficients."""
        worst = 0
        for c in alpha.coefficients().values():
            if not c.is_zero():
                worst = max(worst, -c.order_along(divisor))
        return worst

    @staticmethod
    def forms_identical(alpha: ReflexiveForm, beta: ReflexiveForm) -> bool:
        a, b = alpha.coefficients(), beta.coefficients(alpha.ring.variables)
        return all(a[name] == b[name] for name in a)

    # --- identities on {f = 0} ---

    def forms_equal_on(self, alpha: ReflexiveForm, beta: ReflexiveForm, f: Polynomial) -> bool:
        """alpha = beta on the smooth locus of {f = 0}.

        The difference, cleared of denominators, must be proportional to the
        gradient of f modulo f: every 2x2 minor against (f_x, f_y, f_z) reduces to 0.
        """
        names = f.ring.variables
        diff = (alpha - beta).coefficients(names)
        for c in diff.values():
            self._check_denominator(c.den, f)
        cleared = []
        for name in names:
            c = diff[name]
            num = c.num.in_ring(f.ring)
            for other in names:
                if other != name:
                    num = num * diff[other].den.in_ring(f.ring)
            cleared.append(num)
        grad = list(jacobian(f))
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                minor = cleared[i] * grad[j] - cleared[j] * grad[i]
                if not self._reduce(minor, f).is_zero():
                    return False
        return True

    def verify_relation(self, f: Polynomial) -> KahlerRelation:
        """The Kahler relation df = 0 on {f = 0}, listing the nonzero partials."""
        grad = jacobian(f)
        partials = {name: g for name, g in zip(f.ring.variables, grad) if not g.is_zero()}
        df = ReflexiveForm.from_coefficients(
            f.ring, {name: RationalFunction.from_polynomial(g) for name, g in partials.items()})
        holds = self.forms_equal_on(df, ReflexiveForm.zero(f.ring), f)
        return KahlerRelation(f, partials, holds)

    # --- worked families ---

    @staticmethod
    def _char2_ring(variables) -> PolyRing:
        return PolyRing(make_field(2), tuple(variables), DEGREVLEX)

    def example_map(self) -> RationalMap:
        """v = w^2 / (u^2 + u) on the (u, w)-plane, characteristic 2."""
        source = self._char2_ring(('u', 'w'))
        target = self._char2_ring(('v',))
        image = RationalFunction(source.parse('w^2'), source.parse('u^2 + u'))
        return RationalMap(source, target, {'v': image})

    def example_form(self, n: int) -> ReflexiveForm:
        """v^(-n) dv."""
        if n < 2:
            raise OutOfRange(f"n must be at least 2, got {n}")
        target = self._char2_ring(('v',))
        v = target.gen('v')
        return ReflexiveForm(target, [(RationalFunction(target.one, v ** n), v)])

    def example_pullback(self, n: int) -> ReflexiveForm:
        return self.pullback(self.example_form(n), self.example_map())

    def expected_pullback(self, n: int) -> ReflexiveForm:
        """(u^2 + u)^(n - 2) du / w^(2n - 2)."""
        if n < 2:
            raise OutOfRange(f"n must be at least 2, got {n}")
        source = self._char2_ring(('u', 'w'))
        coeff = RationalFunction(source.parse('u^2 + u') ** (n - 2), source.gen('w') ** (2 * n - 2))
        return ReflexiveForm.from_coefficients(source, {'u': coeff})

    def dual_basis(self, n: int, ring: Optional[PolyRing] = None) -> DualBasis:
        """dlog y, dlog x against the free basis of T_X for z^2 + x^2y + xy^n + xyz, p = 2."""
        if n < 2:
            raise OutOfRange(f"n must be at least 2, got {n}")
        ring = ring or self._char2_ring(('x', 'y', 'z'))
        f = ring.parse(f'z^2 + x^2*y + x*y^{n} + x*y*z')
        v1 = VectorPoly.of(ring.zero, ring.parse('y'), ring.parse(f'x + z + {n}*y^{n - 1}'))
        v2 = VectorPoly.of(ring.parse('x'), ring.zero, ring.parse(f'z + y^{n - 1}'))
        y, x = ring.gen('y'), ring.gen('x')
        alpha1 = ReflexiveForm(ring, [(RationalFunction(ring.one, y), y)])
        alpha2 = ReflexiveForm(ring, [(RationalFunction(ring.one, x), x)])
        return DualBasis(f, (alpha1, alpha2), (Derivation(v1), Derivation(v2)))

    def nonextending_forms(self, d_indices: Sequence[int] = (2, 3)) -> List[NonExtendingForm]:
        """Reflexive forms without logarithmic extension, each in two presentations."""
        from lzcheck.utils.parser import parse_form

        rows = [
            ('E_6^0', 2, 'z^2 + x^3 + y^2*z', '1/y^2*d(x)', '1/x^2*d(z)'),
            ('E_7^0', 2, 'z^2 + x^3 + x*y^3', '1/(x*y^2)*d(x)', '1/(x^2 + y^3)*d(y)'),
            ('E_6^0', 3, 'z^2 + x^3 + y^4', '1/z*d(y)', '1/y^3*d(z)'),
            ('E_7^0', 3, 'z^2 + x^3 + x*y^3', '1/z*d(x)', '1/y^3*d(z)'),
        ]
        for k in d_indices:
            rows.append((f'D_{2 * k}^0', 2, f'z^2 + x^2*y + x*y^{k}',
                         f'1/y^{k}*d(y)', f'1/(x^2 + {k}*x*y^{k - 1})*d(x)'))
            rows.append((f'D_{2 * k + 1}^0', 2, f'z^2 + x^2*y + y^{k}*z',
                         f'1/y^{k}*d(y)', f'1/(x^2 + {k}*y^{k - 1}*z)*d(z)'))

        forms = []
        for name, p, equation, first, second in rows:
            ring = PolyRing(make_field(p), ('x', 'y', 'z'), DEGREVLEX)
            forms.append(NonExtendingForm(name, p, ring.parse(equation),
                                          parse_form(first, ring), parse_form(second, ring)))
        return forms
