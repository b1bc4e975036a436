import json
import logging

import pytest
from click.testing import CliRunner

from twistlie.cli import cli
from twistlie.logger import set_verbosity
from twistlie.version import __version__


@pytest.fixture
def runner():
    return CliRunner()


CONCRETE = ['--mode', 'concrete', '--m', '2', '--b', '1']


def test_version(runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


@pytest.mark.parametrize('args,expected', [
    (['nf', 'A*B'], '(m/(m-1))*C - (b/(m-1))*I'),
    (['nf', '[A,B]'], 'C'),
    (['nf'] + CONCRETE + ['B*A'], 'C - I'),
    (['nf', '--mode', 'concrete', '--m', '3', '--b', '-2', 'B*A'],
     '(1/2)*C + I'),
])
def test_nf(runner, args, expected):
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert result.stdout.strip() == expected


def test_nf_json(runner):
    result = runner.invoke(cli, ['nf', '--output', 'json'] + CONCRETE +
                           ['A*B'])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data['command'] == 'nf'
    assert data['params'] == {'mode': 'concrete', 'm': '2', 'b': '1'}
    assert data['input'] == 'A*B'
    assert data['result'] == {'normal_form': '2*C - I'}


@pytest.mark.parametrize('args,code', [
    (['nf', 'A*'], 2),
    (['nf', 'A/B'], 2),
    (['nf', '--mode', 'concrete', '--m', '1', '--b', '0', 'A'], 3),
    (['nf', '--mode', 'concrete', '--m', '2', 'A'], 3),
    (['nf', '--m', '2', '--b', '1', 'A'], 3),
    (['is-lie', '--mode', 'concrete', '--m', '-1', '--b', '1', 'C'], 3),
    (['is-lie', 'A^2'], 1),
    (['witness', 'A^2 + C'], 1),
])
def test_exit_codes(runner, args, code):
    result = runner.invoke(cli, args)
    assert result.exit_code == code


def test_is_lie(runner):
    result = runner.invoke(cli, ['is-lie', '[A,[A,B]] + B'])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == 'yes'


def test_decompose(runner):
    result = runner.invoke(cli, ['decompose', '--output', 'json', 'A*B'])
    assert result.exit_code == 0
    data = json.loads(result.stdout)['result']
    assert data == {
        'is_lie': False,
        'lie_part': '(m/(m-1))*C',
        'complement_part': '-(b/(m-1))*I',
    }


@pytest.mark.parametrize('expr,expected', [
    ('C', '[A,B]'),
    ('C*A', '(1/(m-1))*[A,[A,B]]'),
])
def test_witness(runner, expr, expected):
    result = runner.invoke(cli, ['witness', expr])
    assert result.exit_code == 0
    assert result.stdout.strip() == expected


def test_ambiguities(runner):
    result = runner.invoke(cli, ['ambiguities', '--max-k', '2',
                                 '--output', 'json'])
    assert result.exit_code == 0
    records = json.loads(result.stdout)['result']['ambiguities']
    assert len(records) == 13
    assert all(record['resolvable'] for record in records)
    assert records[0]['label'] == 'phi1'


def test_closure(runner):
    result = runner.invoke(cli, ['closure', '--max-deg', '3',
                                 '--output', 'json'])
    assert result.exit_code == 0
    data = json.loads(result.stdout)['result']
    assert data['dimension'] == 5
    assert data['spans_equal'] is True


def test_closure_bound(runner):
    result = runner.invoke(cli, ['closure', '--max-deg', '11'])
    assert result.exit_code == 2


def test_closure_verbosity(runner):
    try:
        result = runner.invoke(cli, ['closure', '--max-deg', '2',
                                     '--verbose', '--verbose'])
        assert result.exit_code == 0
        assert logging.getLogger('twistlie').level == logging.DEBUG
    finally:
        set_verbosity(1)
