import pytest

from lzcheck.errors import OutOfRange, PolynomialSyntaxError, UnknownVariable
from lzcheck.models.rational import RationalFunction
from lzcheck.utils.parser import parse_form, parse_polynomial, parse_rational, tokenize


def test_tokenize_positions():
    tokens = tokenize('z^2 + 13*x')
    assert [t.text for t in tokens] == ['z', '^', '2', '+', '13', '*', 'x', '']
    assert tokens[4].position == 6


def test_unary_minus_and_whitespace(local_ring):
    R = local_ring(5)
    assert parse_polynomial(' - x +  y ', R) == R.gen('y') - R.gen('x')


def test_coefficients_reduce_into_the_field(local_ring):
    R = local_ring(3)
    assert R.parse('3*x').is_zero()
    assert R.parse('4*x') == R.gen('x')


@pytest.mark.parametrize('src, position', [
    ('2x', 1),
    ('xy', 1),
    ('x (y)', 2),
])
def test_implicit_multiplication_is_rejected(local_ring, src, position):
    with pytest.raises(PolynomialSyntaxError) as excinfo:
        local_ring(2).parse(src)
    assert excinfo.value.position == position
    assert f'at position {position}' in str(excinfo.value)


@pytest.mark.parametrize('src', ['', 'x +', '(x + y', 'x^', 'x/y', 'x $ y', 'x^y'])
def test_syntax_errors(local_ring, src):
    with pytest.raises(PolynomialSyntaxError):
        local_ring(2).parse(src)


def test_unknown_variable(local_ring):
    with pytest.raises(UnknownVariable):
        local_ring(2).parse('x + q')


def test_generator_needs_an_extension(local_ring):
    with pytest.raises(UnknownVariable):
        local_ring(3).parse('a*x')
    R = local_ring(3, 'a^2 - a - 1')
    assert R.parse('a^2*x') == R.parse('(a + 1)*x')


def test_exponent_limit(local_ring):
    with pytest.raises(OutOfRange):
        local_ring(2).parse('x^65536')


def test_parse_rational(global_ring):
    R = global_ring(3)
    r = parse_rational('x/(x*y)', R)
    assert r == RationalFunction(R.one, R.gen('y'))
    assert str(r) == '1/y'


def test_parse_form(global_ring):
    R = global_ring(2)
    alpha = parse_form('1/y*d(y)', R)
    coeffs = alpha.coefficients()
    assert coeffs['y'] == RationalFunction(R.one, R.gen('y'))
    assert coeffs['x'].is_zero()


def test_parse_form_differential_of_product(global_ring):
    R = global_ring(3)
    alpha = parse_form('d(x*y)', R)
    assert alpha.coefficients()['x'] == RationalFunction.from_polynomial(R.gen('y'))
    assert alpha.coefficients()['y'] == RationalFunction.from_polynomial(R.gen('x'))


def test_parse_form_rejects_functions(global_ring):
    R = global_ring(2)
    with pytest.raises(PolynomialSyntaxError):
        parse_form('x + 1', R)
    assert parse_form('0', R).is_zero()


def test_cannot_divide_by_a_differential(global_ring):
    with pytest.raises(PolynomialSyntaxError):
        parse_form('x/d(y)', global_ring(2))


@pytest.mark.parametrize('p', [2, 3, 5, 7])
def test_catalog_equations_survive_printing(catalog, p):
    for d in catalog.entries(p, 8):
        f = catalog.equation(d)
        assert f.ring.parse(str(f)) == f, d.name


def test_extension_equation_survives_printing(catalog):
    f = catalog.cone_equation()
    assert f.ring.parse(str(f)) == f
