"""Shared fixtures: fields, rings and services built from the testing configuration."""

import pytest

from config import TestingConfig
from lzcheck import create_context
from lzcheck.models.fields import make_field
from lzcheck.models.polynomial import DEGREVLEX, NEGDEGREVLEX, PolyRing, VectorPoly
from lzcheck.services.stdbasis_service import AmbientRing, GeneratorSet

XYZ = ('x', 'y', 'z')


@pytest.fixture(scope='session')
def context():
    return create_context(TestingConfig)


@pytest.fixture(scope='session')
def std_service(context):
    return context.std_service


@pytest.fixture(scope='session')
def sing(context):
    return context.singularity_service


@pytest.fixture(scope='session')
def forms(context):
    return context.forms_service


@pytest.fixture(scope='session')
def catalog(context):
    return context.catalog_service


@pytest.fixture(scope='session')
def F2():
    return make_field(2)


@pytest.fixture(scope='session')
def F3():
    return make_field(3)


@pytest.fixture(scope='session')
def F9():
    return make_field(3, 'a^2 - a - 1')


@pytest.fixture
def local_ring():
    """Factory for k[x, y, z] with the local order."""
    def build(p, ext=None, order=NEGDEGREVLEX):
        return PolyRing(make_field(p, ext), XYZ, order)
    return build


@pytest.fixture
def global_ring():
    def build(p, ext=None):
        return PolyRing(make_field(p, ext), XYZ, DEGREVLEX)
    return build


@pytest.fixture
def module_equal(std_service):
    """Compare derivations with claimed coefficient vectors as submodules of (R/f)^3."""
    def compare(f, derivations, claimed):
        ring = AmbientRing(f.ring, quotient=f)
        A = GeneratorSet.module(ring, [d.coeffs for d in derivations], 3)
        B = GeneratorSet.module(ring, [VectorPoly(tuple(v)) for v in claimed], 3)
        return std_service.module_equal(A, B)
    return compare
