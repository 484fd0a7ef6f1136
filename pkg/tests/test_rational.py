import pytest

from lzcheck.errors import DivisionUndefined
from lzcheck.models.fields import make_field
from lzcheck.models.polynomial import DEGREVLEX, PolyRing
from lzcheck.models.rational import RationalFunction, evaluate


@pytest.fixture
def uw():
    return PolyRing(make_field(2), ('u', 'w'), DEGREVLEX)


def test_common_factors_cancel(global_ring):
    R = global_ring(5)
    r = RationalFunction(R.parse('x^2 - y^2'), R.parse('x - y'))
    assert r.is_polynomial()
    assert r.num == R.parse('x + y')


def test_denominator_is_monic(global_ring):
    R = global_ring(5)
    r = RationalFunction(R.parse('x'), R.parse('2*y'))
    assert r.den == R.gen('y')
    assert r.num == R.parse('3*x')


def test_cross_multiplied_equality(global_ring):
    R = global_ring(3)
    assert RationalFunction(R.one, R.gen('x')) == RationalFunction(R.gen('y'), R.parse('x*y'))
    assert RationalFunction(R.one, R.gen('x')) != RationalFunction(R.one, R.gen('y'))


def test_quotient_rule(global_ring):
    R = global_ring(3)
    inv_x = RationalFunction(R.one, R.gen('x'))
    assert inv_x.derivative('x') == RationalFunction(-R.one, R.parse('x^2'))
    assert inv_x.derivative('y').is_zero()


def test_negative_powers(global_ring):
    R = global_ring(3)
    r = RationalFunction(R.gen('x'), R.gen('y'))
    assert r ** -2 == RationalFunction(R.parse('y^2'), R.parse('x^2'))


def test_order_along(uw):
    r = RationalFunction(uw.parse('w^2'), uw.parse('u^2 + u'))
    assert r.order_along('w') == 2
    assert r.order_along('u') == -1


def test_division_by_zero(global_ring):
    R = global_ring(2)
    with pytest.raises(DivisionUndefined):
        RationalFunction(R.one) / RationalFunction(R.zero)


def test_evaluate_along_a_rational_map(uw):
    v_ring = PolyRing(make_field(2), ('v',), DEGREVLEX)
    image = RationalFunction(uw.parse('w^2'), uw.parse('u^2 + u'))
    r = evaluate(v_ring.parse('v^2 + v'), {'v': image}, uw)
    expected = image * image + image
    assert r == expected


def test_extension_field_monomial_content(local_ring):
    R = local_ring(3, 'a^2 - a - 1').with_order(DEGREVLEX)
    r = RationalFunction(R.parse('x*y'), R.parse('x^2'))
    assert r == RationalFunction(R.gen('y'), R.gen('x'))
    assert r.den == R.gen('x')


def test_printing(uw):
    r = RationalFunction(uw.parse('u^2 + u'), uw.parse('w^4'))
    assert str(r) == '(u^2 + u)/w^4'
    assert str(RationalFunction(uw.gen('u'))) == 'u'
