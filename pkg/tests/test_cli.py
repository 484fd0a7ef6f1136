import json
import time

import pytest

from lzcheck.cli import main

SESSION = ['--workers', '1', 'check', '-p', '2', 'z^2+x^3+y^5']


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_session(capsys):
    code, out, _ = run(capsys, *SESSION)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'f = z^2 + x^3 + y^5 in characteristic p = 2'
    assert 'X = { f = 0 } is not F-pure.' in lines
    assert 'T_X is free.' in lines
    assert lines[3] == 'Minimal generating set for T_X:'
    assert len(lines) == 6
    assert 'd/dz' in lines[4]


def test_check_is_deterministic(capsys):
    first = run(capsys, *SESSION)
    second = run(capsys, *SESSION)
    assert first == second


def test_check_json_carries_the_same_verdicts(capsys):
    code, out, _ = run(capsys, *SESSION, '--json')
    assert code == 0
    data = json.loads(out)
    assert data['f'] == 'z^2 + x^3 + y^5'
    assert data['f_pure'] is False
    assert data['tangent']['free'] is True
    assert len(data['tangent']['generators']) == 2
    assert data['verdict'] == 'ViolatesLZ'


def test_check_over_an_extension(capsys):
    code, out, _ = run(capsys, '--workers', '1', 'check', '-p', '3', '--ext', 'a^2-a-1',
                       'y^2*z - x*(x - a*z)*(x + z)')
    assert code == 0
    assert 'over F_9' in out.splitlines()[0]
    assert 'T_X is free.' in out


@pytest.mark.parametrize('argv, code', [
    (['check', '-p', '2', 'z^2+x^3y'], 2),
    (['check', '-p', '4', 'z^2+x^3'], 2),
    (['check', '-p', '3', '--ext', 'a^2-1', 'x*y'], 2),
    (['check', '-p', '3', '1 + x*y + z^2'], 3),
    (['--pair-budget', '1', 'check', '-p', '2', 'z^2+x^3+y^5'], 4),
    (['check', '-p', '2', '(x*y+z^4)*(1+x+y*z)', '--pair-budget', '5'], 4),
    (['check', '-p', '5', '--pair-budget', '5', '(z^2+x^3+y^5)*(1+x+y*z)'], 4),
    (['tame', 'E', '9', '2'], 2),
    (['tame', 'Q', '3', '2'], 2),
    (['pullback', '3', '-p', '3'], 2),
    (['pullback', '1'], 2),
    (['pair', '1'], 2),
    (['table', '-p', '2', '--max-n', '99'], 2),
])
def test_exit_codes(capsys, argv, code):
    result, out, err = run(capsys, *argv)
    assert result == code
    assert out == ''
    assert err.splitlines()[-1].startswith('Error:')


def test_tame(capsys):
    code, out, _ = run(capsys, 'tame', 'A', '4', '5')
    assert code == 0
    assert out.splitlines() == ['|det(A_4)| = 5', 'A_4 is not tame in characteristic p = 5.']
    code, out, _ = run(capsys, 'tame', 'e', '8', '2', '--json')
    assert json.loads(out) == {'graph': 'E_8', 'p': 2, 'determinant': 1, 'tame': True}


def test_pullback(capsys):
    code, out, _ = run(capsys, 'pullback', '3')
    assert code == 0
    assert 'pole order along w = 0: 4' in out
    assert out.splitlines()[-1] == 'MATCH'


def test_pullback_json(capsys):
    code, out, _ = run(capsys, 'pullback', '2', '--json')
    data = json.loads(out)
    assert code == 0
    assert data['pullback'] == 'du/w^2'
    assert data['pole_order'] == 2
    assert data['match'] is True


def test_pair(capsys):
    code, out, _ = run(capsys, 'pair', '2')
    assert code == 0
    assert out.splitlines()[-1] == 'MATCH'
    code, out, _ = run(capsys, 'pair', '3', '--json')
    assert json.loads(out)['matrix'] == [['1', '0'], ['0', '1']]


def test_table_json(capsys):
    code, out, _ = run(capsys, '--workers', '1', 'table', '-p', '7', '--max-n', '2', '--json', '--strict')
    assert code == 0
    data = json.loads(out)
    assert data['schema_version'] == '1.0'
    assert [e['name'] for e in data['entries']] == ['A_1', 'A_2', 'E_6', 'E_7', 'E_8']
    assert all(e['diffs'] == [] for e in data['entries'])


def test_table_markdown(capsys):
    code, out, _ = run(capsys, '--workers', '1', 'table', '-p', '5', '--max-n', '1', '--markdown')
    assert code == 0
    assert out.startswith('# Rational double points in characteristic 5')
    assert '| $E_8^0$ | `z^2 + x^3 + y^5` | --- | --- |' in out


def test_table_text(capsys):
    code, out, _ = run(capsys, '--workers', '1', 'table', '-p', '3', '--max-n', '1')
    assert code == 0
    assert out.splitlines()[0] == 'characteristic p = 3'
    assert out.splitlines()[-1].endswith('0 differing from published values')


def test_catalog(capsys):
    code, out, _ = run(capsys, '--workers', '1', 'catalog', '--char', '7', '--max-n', '1')
    assert code == 0
    data = json.loads(out)
    assert [e['name'] for e in data['entries']] == ['A_1', 'E_6', 'E_7', 'E_8']
    cone = data['extra'][0]
    assert cone['computed']['tangent_free'] is True
    assert cone['determinant'] == 3


def test_tame_a5_in_characteristic_two(capsys):
    code, out, _ = run(capsys, 'tame', 'A', '5', '2')
    assert code == 0
    assert out.splitlines() == ['|det(A_5)| = 6', 'A_5 is not tame in characteristic p = 2.']


def test_budget_after_the_subcommand_overrides_the_global_one(capsys):
    code, out, _ = run(capsys, '--pair-budget', '1', 'check', '-p', '2', 'x*y + z^3', '--pair-budget', '100000')
    assert code == 0
    assert 'T_X is not free.' in out.splitlines()


def test_full_characteristic_two_table_finishes(capsys):
    start = time.monotonic()
    code, out, _ = run(capsys, '--workers', '1', 'table', '-p', '2', '--json', '--strict')
    assert time.monotonic() - start < 300
    assert code == 0
    names = [e['name'] for e in json.loads(out)['entries']]
    assert 'D_15^5' in names and 'D_17^7' in names
