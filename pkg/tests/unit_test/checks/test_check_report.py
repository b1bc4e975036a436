import json
import shutil

import pytest

from twistlie.checks import CheckResult, CheckReport, load_check_report
from twistlie.freealg import parse


@pytest.fixture
def check_report():
    return CheckReport([
        CheckResult('reorder_BC', {'k': 1, 'n': 1}, True),
        CheckResult('reorder_AC', {'k': 1, 'n': 2}, True),
        CheckResult.compare('reorder_AC', {'k': 2, 'n': 1}, parse('C*A')),
        CheckResult('bracket_C_BC', {'k': 1, 'x': 2, 'y': 1}, True,
                    note='printed coefficient differs'),
    ], config={'twist': {'mode': 'symbolic', 'm': None, 'b': None}})


def test_compare():
    assert CheckResult.compare('x', {}, parse('A - A')).passed
    failed = CheckResult.compare('x', {}, parse('2*A'))
    assert not failed.passed
    assert failed.counterexample == 'lhs - rhs = 2*A'
    assert failed.status == 'fail'


def test_ordering(check_report):
    assert [r.name for r in check_report] == \
        ['bracket_C_BC', 'reorder_AC', 'reorder_AC', 'reorder_BC']
    assert [r.params for r in check_report][1:3] == \
        [{'k': 1, 'n': 2}, {'k': 2, 'n': 1}]


def test_failures(check_report):
    assert not check_report.passed
    assert len(check_report.failures) == 1
    assert check_report.failures[0].counterexample == 'lhs - rhs = C*A'


def test_summary(check_report):
    summary = check_report.summary()
    assert summary['name'].tolist() == [
        'bracket_C_BC', 'reorder_AC', 'reorder_BC']
    assert summary['checked'].tolist() == [1, 2, 1]
    assert summary['failed'].tolist() == [0, 1, 0]


def test_str(check_report):
    text = str(check_report)
    assert 'Failures:' in text
    assert 'Notes:' in text
    assert '1 of 4 checks failed' in text
    assert str(CheckReport()) == 'No checks were run.'


def test_json(check_report):
    data = json.loads(check_report.to_json())
    assert data['passed'] is False
    assert data['config']['twist']['mode'] == 'symbolic'
    assert data['results'][1] == {
        'name': 'reorder_AC',
        'params': {'k': 1, 'n': 2},
        'status': 'pass',
        'counterexample': None,
        'note': None,
    }


def test_merge(check_report):
    other = CheckReport([CheckResult('phi1', {}, True)], {'max_k': 1})
    merged = check_report.merge(other)
    assert len(merged) == 5
    assert merged.config['max_k'] == 1
    assert merged.results[1].name == 'phi1'


def test_save_load(check_report):
    dirpath = '.tmpdir'
    check_report.save(dirpath)
    loaded = load_check_report(dirpath)
    with pytest.raises(FileExistsError):
        check_report.save(dirpath)
    shutil.rmtree(dirpath)
    assert loaded.to_records() == check_report.to_records()
    assert loaded.config == check_report.config
