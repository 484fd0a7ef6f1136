import time

import pytest

from lzcheck.errors import OutOfRange, WrongCharacteristic
from lzcheck.models.descriptors import AdeType, DualGraph
from lzcheck.services.catalog_service import instantiate


def test_instantiate_template():
    assert instantiate('x*y^{k-r}*z + y^{k}', k=5, r=2) == 'x*y^3*z + y^5'


def test_describe_e8_in_characteristic_two(catalog):
    d = catalog.describe('E', 8, 2, 4)
    assert d.name == 'E_8^4'
    assert d.equation_text == 'z^2 + x^3 + y^5 + x*y*z'
    assert d.literature.f_pure and d.literature.lz_holds


def test_describe_d_families(catalog):
    assert catalog.describe('D', 6, 2, 1).equation_text == 'z^2 + x^2*y + x*y^3 + x*y^2*z'
    assert catalog.describe('D', 7, 2, 0).equation_text == 'z^2 + x^2*y + y^3*z'
    assert catalog.describe('D', 6, 5).equation_text == 'z^2 + x^2*y + y^5'
    assert catalog.describe('A', 3, 2).equation_text == 'x*y + z^4'


@pytest.mark.parametrize('args, error', [
    (('A', 0, 2), OutOfRange),
    (('E', 9, 2), OutOfRange),
    (('D', 3, 3), OutOfRange),
    (('D', 8, 2, 4), OutOfRange),
    (('D', 6, 2), WrongCharacteristic),
    (('D', 6, 3, 1), WrongCharacteristic),
    (('E', 8, 7, 1), WrongCharacteristic),
    (('E', 8, 5, 2), OutOfRange),
    (('A', 2, 6), OutOfRange),
])
def test_describe_rejects_invalid_rows(catalog, args, error):
    with pytest.raises(error):
        catalog.describe(*args)


def test_entries(catalog):
    names = [d.name for d in catalog.entries(2, 2)]
    assert names[:2] == ['A_1', 'A_2']
    assert ['D_4^0', 'D_4^1', 'D_5^0', 'D_5^1'] == names[2:6]
    assert len(names) == 17
    assert [d.name for d in catalog.entries(7, 4)] == ['A_1', 'A_2', 'A_3', 'A_4', 'D_4', 'E_6', 'E_7', 'E_8']


def test_corollary_exceptions(catalog):
    rows = catalog.corollary_exceptions()
    assert [(d.name, d.p) for d in rows] == [
        ('E_6^0', 2), ('E_8^0', 2), ('E_8^1', 2), ('E_8^2', 2),
        ('E_7^0', 3), ('E_8^0', 3), ('E_8^0', 5),
    ]


@pytest.mark.parametrize('graph', [DualGraph(AdeType.A, n) for n in range(1, 21)]
                         + [DualGraph(AdeType.D, n) for n in range(4, 21)]
                         + [DualGraph(AdeType.E, n) for n in (6, 7, 8)],
                         ids=lambda g: g.name)
def test_tame_determinant_matches_the_intersection_matrix(catalog, graph):
    assert catalog.tame_determinant(graph) == catalog.determinant_oracle(graph)


@pytest.mark.parametrize('ade_type, n, p, tame', [
    ('A', 4, 5, False),
    ('A', 4, 3, True),
    ('D', 5, 2, False),
    ('D', 5, 3, True),
    ('E', 6, 3, False),
    ('E', 7, 2, False),
    ('E', 8, 2, True),
])
def test_is_tame(catalog, ade_type, n, p, tame):
    assert catalog.is_tame(DualGraph(AdeType(ade_type), n), p) is tame


def test_invalid_dual_graphs():
    with pytest.raises(OutOfRange):
        DualGraph(AdeType.D, 3)
    with pytest.raises(OutOfRange):
        DualGraph(AdeType.E, 9)


@pytest.mark.parametrize('ade_type, n, p, expected', [
    ('A', 1, 2, True),
    ('A', 2, 2, False),
    ('A', 4, 5, True),
    ('D', 4, 2, True),
    ('D', 4, 3, False),
    ('E', 6, 3, True),
    ('E', 7, 5, False),
    ('E', 8, 5, True),
    ('E', 8, 7, False),
])
def test_lz_exception_list(catalog, ade_type, n, p, expected):
    assert catalog.in_lz_exception_list(ade_type, n, p) is expected


def test_log_extension_list_excludes_a_n(catalog):
    assert not catalog.in_log_ext_exception_list('A', 1, 2)
    assert catalog.in_log_ext_exception_list('E', 8, 2)


def test_elliptic_cone(catalog):
    cone = catalog.elliptic_cone()
    assert cone.p == 3
    assert catalog.tame_determinant(cone.graph) == 3
    assert not catalog.is_tame(cone.graph, 3)
    assert cone.to_dict()['determinant'] == 3
    f = catalog.cone_equation()
    assert f.field.size == 9


@pytest.mark.parametrize('r', range(5))
def test_e8_rows_match_the_published_flags(catalog, r):
    d = catalog.describe('E', 8, 2, r)
    computed = catalog.evaluate(d)
    assert catalog.diff(d, computed) == []
    assert catalog.tame_f_pure_claim(d, computed)


def test_small_table(catalog):
    rows = catalog.tabulate(7, 4)
    assert [row.descriptor.name for row in rows] == ['A_1', 'A_2', 'A_3', 'A_4', 'D_4', 'E_6', 'E_7', 'E_8']
    assert all(not row.diffs for row in rows)
    assert rows[-1].to_dict()['computed']['f_pure'] is True


@pytest.mark.parametrize('p', [2, 3, 5])
def test_free_tangent_witnesses(catalog, sing, p):
    for d in catalog.free_tangent_witnesses(p, 3):
        assert sing.is_tangent_free(catalog.equation(d)), d.name


def _listed_as_not_tame(ade_type, n, p):
    """A_n with n = -1 mod p, D_n at p = 2, E_6 at p = 3 and E_7 at p = 2."""
    if ade_type is AdeType.A:
        return (n + 1) % p == 0
    if ade_type is AdeType.D:
        return p == 2
    return (n, p) in ((6, 3), (7, 2))


@pytest.mark.parametrize('p', [2, 3, 5, 7, 11, 13])
def test_not_tame_rows_are_exactly_the_listed_ones(catalog, p):
    for d in catalog.entries(p, 30):
        graph = catalog.graph(d)
        assert catalog.is_tame(graph, p) is not _listed_as_not_tame(d.ade_type, d.n, p), d.name


def test_a5_in_characteristic_two_is_not_tame(catalog):
    graph = DualGraph(AdeType.A, 5)
    assert catalog.tame_determinant(graph) == 6
    assert not catalog.is_tame(graph, 2)


@pytest.mark.parametrize('n, r', [(15, 5), (14, 5), (17, 7), (23, 5)])
def test_long_d_rows_finish(catalog, n, r):
    d = catalog.describe('D', n, 2, r)
    start = time.monotonic()
    computed = catalog.evaluate(d)
    assert time.monotonic() - start < 60
    assert catalog.diff(d, computed) == []
