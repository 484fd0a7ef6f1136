import random

import pytest

from lzcheck.errors import ResourceLimit
from lzcheck.models.polynomial import (
    DEGREVLEX, NEGDEGREVLEX, Polynomial, VectorPoly, jacobian, monomial_divides,
)
from lzcheck.services.stdbasis_service import (
    AmbientRing, GeneratorSet, PositionRule, StandardBasisService,
)


def _ideal(R, *gens, quotient=None):
    return GeneratorSet.ideal(AmbientRing(R, quotient), [R.parse(g) for g in gens])


def test_fedder_membership(std_service, local_ring):
    R = local_ring(2)
    basis = std_service.std(_ideal(R, 'x^2', 'y^2', 'z^2'))
    assert std_service.normal_form(R.parse('z^2+x^3+y^5'), basis).is_zero()
    assert not std_service.contains(basis, R.parse('x*y*z'))


def test_units_are_invertible_in_the_local_ring(std_service, local_ring, global_ring):
    R = local_ring(3)
    basis = std_service.std(_ideal(R, 'x + x^2'))
    assert std_service.contains(basis, R.gen('x'))
    unit = std_service.std(_ideal(R, '1 + x'))
    assert std_service.contains(unit, R.one)
    assert (0, (0, 0, 0)) in unit.leading_monomials

    G = global_ring(3)
    global_basis = std_service.std(_ideal(G, 'x + x^2'))
    assert not std_service.contains(global_basis, G.gen('x'))


def test_global_normal_form_is_reduced(std_service, global_ring):
    G = global_ring(3)
    basis = std_service.std(_ideal(G, 'x^2 - y'))
    assert std_service.normal_form(G.parse('x^3'), basis) == G.parse('x*y')


def test_global_basis_of_a_zero_dimensional_ideal(std_service, global_ring):
    G = global_ring(5)
    basis = std_service.std(_ideal(G, 'x*y - 1', 'x - y', 'z'))
    assert std_service.contains(basis, G.parse('y^2 - 1'))
    assert not std_service.contains(basis, G.gen('y'))


def test_quotient_reduction(local_ring):
    R = local_ring(2)
    ring = AmbientRing(R, R.parse('x^2'))
    assert ring.reduce(R.parse('x^3 + y')) == R.gen('y')


def test_syzygies_of_two_variables(std_service, local_ring):
    R = local_ring(5)
    G = _ideal(R, 'x', 'y')
    syz = std_service.syz(G)
    expected = GeneratorSet.module(G.ring, [VectorPoly.of(R.gen('y'), -R.gen('x'))], 2)
    assert std_service.module_equal(syz, expected)


def test_syzygies_over_the_quotient_ring(std_service, local_ring):
    R = local_ring(2)
    f = R.parse('z^2+x^3+y^5')
    ring = AmbientRing(R, f)
    syz = std_service.syz(GeneratorSet.ideal(ring, list(jacobian(f))))
    for v in syz:
        image = v.dot(jacobian(f))
        assert ring.reduce(image).is_zero() or std_service.contains(
            std_service.std(GeneratorSet.ideal(AmbientRing(R), [f])), image)
    claimed = GeneratorSet.module(ring, [
        VectorPoly.of(R.zero, R.zero, R.one),
        VectorPoly.of(R.parse('y^4'), R.parse('x^2'), R.zero),
    ], 3)
    assert std_service.module_equal(std_service.minimal_generators(syz), claimed)


def test_zero_entries_keep_their_index(std_service, local_ring):
    R = local_ring(2)
    G = GeneratorSet.ideal(AmbientRing(R), [R.gen('x'), R.zero])
    syz = std_service.syz(G)
    unit = GeneratorSet.module(G.ring, [VectorPoly.of(R.zero, R.one)], 2)
    assert std_service.module_equal(syz, unit)
    assert len(G) == 2 and len(G.nonzero()) == 1


def test_minimal_generators_drop_redundant_elements(std_service, local_ring):
    R = local_ring(3)
    x, y = R.gen('x'), R.gen('y')
    M = GeneratorSet.module(AmbientRing(R), [
        VectorPoly.of(x, R.zero), VectorPoly.of(y, R.zero), VectorPoly.of(x + y, R.zero),
    ], 2)
    minimal = std_service.minimal_generators(M)
    assert len(minimal) == 2
    assert std_service.module_equal(minimal, M)


def test_minimal_generators_use_local_units(std_service, local_ring):
    R = local_ring(3)
    x = R.gen('x')
    M = GeneratorSet.module(AmbientRing(R), [
        VectorPoly.of(x, R.zero), VectorPoly.of(x + x * x, R.zero),
    ], 2)
    assert len(std_service.minimal_generators(M)) == 1


def test_module_equality_detects_a_difference(std_service, local_ring):
    R = local_ring(2)
    ring = AmbientRing(R)
    A = GeneratorSet.module(ring, [VectorPoly.of(R.gen('x'), R.zero)], 2)
    B = GeneratorSet.module(ring, [VectorPoly.of(R.parse('x^2'), R.zero)], 2)
    assert not std_service.module_equal(A, B)


def test_position_rules_give_the_same_module(std_service, local_ring):
    R = local_ring(3)
    G = GeneratorSet.module(AmbientRing(R), [
        VectorPoly.of(R.gen('x'), R.gen('y')), VectorPoly.of(R.gen('y'), R.gen('z')),
    ], 2)
    top = std_service.std(G, PositionRule.TOP)
    pot = std_service.std(G, PositionRule.POT)
    for v in G:
        assert std_service.contains(top, v)
        assert std_service.contains(pot, v)


def test_pair_budget(local_ring):
    R = local_ring(2)
    service = StandardBasisService(pair_budget=0)
    with pytest.raises(ResourceLimit):
        service.std(_ideal(R, 'x^2', 'y^2', 'z^2'))


def test_reduction_steps_count_against_the_budget(local_ring):
    R = local_ring(2)
    f = R.parse('(x*y + z^4)*(1 + x + y*z)')
    service = StandardBasisService(pair_budget=5)
    with pytest.raises(ResourceLimit):
        service.syz(GeneratorSet.ideal(AmbientRing(R, f), list(jacobian(f))))


def _random_monomial(rng, top):
    return tuple(rng.randint(0, top) for _ in range(3))


@pytest.mark.parametrize('order', [NEGDEGREVLEX, DEGREVLEX], ids=['local', 'global'])
@pytest.mark.parametrize('p', [2, 3, 5])
def test_membership_in_monomial_ideals(std_service, local_ring, p, order):
    R = local_ring(p, order=order)
    rng = random.Random(1000 + p)
    cases = 0
    while cases < 500:
        gens = [m for m in (_random_monomial(rng, 3) for _ in range(rng.randint(1, 4))) if any(m)]
        if not gens:
            continue
        basis = std_service.std(GeneratorSet.ideal(AmbientRing(R), [R.monomial(m) for m in gens]))
        for _ in range(10):
            terms = {_random_monomial(rng, 5): rng.randint(1, p - 1) for _ in range(rng.randint(1, 4))}
            g = Polynomial.from_dict(R, terms)
            in_ideal = all(any(monomial_divides(m, t) for m in gens) for t in g.terms)
            assert std_service.contains(basis, g) is in_ideal, (gens, str(g))
            cases += 1


def test_minimal_generators_are_idempotent_without_unit_relations(std_service, sing, local_ring):
    R = local_ring(2)
    f = R.parse('z^2+x^3+y^5')
    ring = AmbientRing(R, quotient=f)
    M = GeneratorSet.module(ring, [d.coeffs for d in sing.tangent_module(f)], 3)
    again = std_service.minimal_generators(M)
    assert again.elems == M.elems
    assert not std_service.has_unit_relation(M)


def test_unit_entries_are_eliminated(std_service, local_ring):
    R = local_ring(3)
    M = GeneratorSet.module(AmbientRing(R), [
        VectorPoly.of(R.one, R.zero), VectorPoly.of(R.gen('x'), R.zero),
    ], 2)
    assert std_service.has_unit_relation(M)
    minimal = std_service.minimal_generators(M)
    assert minimal.elems == (VectorPoly.of(R.one, R.zero),)
    assert not std_service.has_unit_relation(minimal)
