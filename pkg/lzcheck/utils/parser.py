"""
Recursive-descent parser for the polynomial input grammar.

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*          (rational/form mode also: '/' factor)
    factor := base ('^' uint)?
    base   := variable | uint | 'a' | '(' expr ')'   (form mode also: 'd' '(' expr ')')

Whitespace is ignored and implicit multiplication is rejected.
"""

import logging
from dataclasses import dataclass
from typing import List

from lzcheck.errors import OutOfRange, PolynomialSyntaxError, UnknownVariable
from lzcheck.models.fields import FieldElement, FieldSpec
from lzcheck.models.polynomial import MAX_EXPONENT, Polynomial, PolyRing

logger = logging.getLogger(__name__)

OPERATORS = '+-*/^()'


@dataclass(frozen=True)
class Token:
    kind: str       # 'num', 'name', 'op', 'end'
    text: str
    position: int


def tokenize(src: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(src) and src[i].isdigit():
                i += 1
            tokens.append(Token('num', src[start:i], start))
        elif ch.isalpha():
            # single-letter identifiers; "xy" is two names and fails as implicit product
            tokens.append(Token('name', ch, i))
            i += 1
        elif ch in OPERATORS:
            tokens.append(Token('op', ch, i))
            i += 1
        else:
            raise PolynomialSyntaxError(f"unexpected character '{ch}'", i)
    tokens.append(Token('end', '', len(src)))
    return tokens


class _Parser:
    """Shared descent; ``mode`` is 'poly', 'rational' or 'form'."""

    def __init__(self, src: str, ring: PolyRing, mode: str):
        self.src = src
        self.ring = ring
        self.mode = mode
        self.tokens = tokenize(src)
        self.pos = 0

    # --- token helpers ---

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def accept(self, text: str) -> bool:
        tok = self.current
        if tok.kind == 'op' and tok.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            tok = self.current
            found = 'end of input' if tok.kind == 'end' else f"'{tok.text}'"
            raise PolynomialSyntaxError(f"expected '{text}', found {found}", tok.position)

    # --- values ---

    def lift(self, poly: Polynomial):
        if self.mode == 'poly':
            return poly
        from lzcheck.models.rational import RationalFunction
        return RationalFunction.from_polynomial(poly)

    # --- grammar ---

    def parse(self):
        value = self.expr()
        tok = self.current
        if tok.kind != 'end':
            raise PolynomialSyntaxError(f"unexpected '{tok.text}'", tok.position)
        return value

    def expr(self):
        negate = self.accept('-')
        value = self.term()
        if negate:
            value = -value
        while True:
            if self.accept('+'):
                value = value + self.term()
            elif self.accept('-'):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            if self.accept('*'):
                value = value * self.factor()
            elif self.mode != 'poly' and self.current.kind == 'op' and self.current.text == '/':
                position = self.current.position
                self.pos += 1
                divisor = self.factor()
                if _is_form(divisor):
                    raise PolynomialSyntaxError("cannot divide by a differential", position)
                value = value / divisor
            else:
                if self.current.kind in ('num', 'name') or (self.current.kind == 'op' and self.current.text == '('):
                    raise PolynomialSyntaxError("implicit multiplication is not allowed",
                                                self.current.position)
                return value

    def factor(self):
        value = self.base()
        if self.accept('^'):
            tok = self.current
            if tok.kind != 'num':
                raise PolynomialSyntaxError("expected an exponent", tok.position)
            self.pos += 1
            k = int(tok.text)
            if k >= MAX_EXPONENT:
                raise OutOfRange(f"exponent {k} exceeds 2^16")
            if _is_form(value):
                raise PolynomialSyntaxError("cannot raise a differential to a power", tok.position)
            value = value ** k
        return value

    def base(self):
        tok = self.current
        if tok.kind == 'num':
            self.pos += 1
            return self.lift(self.ring.constant(int(tok.text)))
        if tok.kind == 'name':
            self.pos += 1
            return self.name(tok)
        if self.accept('('):
            value = self.expr()
            self.expect(')')
            return value
        found = 'end of input' if tok.kind == 'end' else f"'{tok.text}'"
        raise PolynomialSyntaxError(f"unexpected {found}", tok.position)

    def name(self, tok: Token):
        ring = self.ring
        if tok.text in ring.variables:
            return self.lift(ring.gen(tok.text))
        if tok.text == 'a' and not ring.field.is_prime_field:
            return self.lift(ring.constant(ring.field.generator))
        if tok.text == 'd' and self.mode == 'form':
            self.expect('(')
            start = self.current.position
            inner = _Parser(self.src, ring, 'poly')
            inner.tokens, inner.pos = self.tokens, self.pos
            h = inner.expr()
            self.pos = inner.pos
            self.expect(')')
            logger.debug(f"[parse] differential at {start}")
            from lzcheck.services.forms_service import ReflexiveForm
            return ReflexiveForm.differential(h)
        raise UnknownVariable(f"unknown variable '{tok.text}' at position {tok.position}")


def _is_form(value) -> bool:
    from lzcheck.services.forms_service import ReflexiveForm
    return isinstance(value, ReflexiveForm)


def parse_polynomial(src: str, ring: PolyRing) -> Polynomial:
    """Parse ``src`` into a polynomial of ``ring``; coefficients are reduced into the field."""
    return _Parser(src, ring, 'poly').parse()


def parse_rational(src: str, ring: PolyRing):
    """Parse a quotient of polynomials into a RationalFunction."""
    return _Parser(src, ring, 'rational').parse()


def parse_form(src: str, ring: PolyRing):
    """Parse a 1-form such as ``1/y*d(y)`` or ``d(x*y) + x/(y+1)*d(z)``."""
    value = _Parser(src, ring, 'form').parse()
    if not _is_form(value):
        from lzcheck.services.forms_service import ReflexiveForm
        if not value.is_zero():
            raise PolynomialSyntaxError("expected a 1-form written with d(...)", 0)
        return ReflexiveForm.zero(ring)
    return value


def parse_element(src: str, field: FieldSpec) -> FieldElement:
    """Parse a field constant such as ``2*a + 1``."""
    ring = PolyRing(field, ())
    poly = parse_polynomial(src, ring)
    return poly.constant_term()
