import json
import shutil

import pytest
from click.testing import CliRunner

from twistlie import checks
from twistlie.cli import cli
from twistlie.rewrite import ReductionSystem
from twistlie.scalars import TwistParams


@pytest.mark.slow
def test_default_run_passes():
    report = checks.run_all()
    assert report.passed, str(report)
    names = {result.name for result in report}
    for name in ('reorder_AC', 'bracket_BC_BC', 'equal_AB', 'adBpowerC',
                 'ideal_xi5_closed_form', 'confluence', 'phi9',
                 'table_phi6', 'lie_closure', 'witness_soundness',
                 'guard_root_of_unity'):
        assert name in names


@pytest.mark.slow
@pytest.mark.parametrize('m,b', [(2, 1), (3, -2), ('1/2', '1/3')])
def test_concrete_reordering(m, b):
    system = ReductionSystem(TwistParams.concrete(m, b))
    params = checks.default_check_params()
    report = checks.run_all(params, system, checks=[
        'reordering', 'equal_exponent', 'ad_powers', 'compositions'])
    assert report.passed, str(report)


@pytest.mark.slow
def test_resolvability_to_fifty():
    params = checks.default_check_params()
    params['max_k'] = 50
    report = checks.run_all(params, checks=['resolvability',
                                            'ambiguity_catalogue'])
    assert report.passed
    assert len(report) == 5 + 4 * 50 + 2


@pytest.mark.slow
def test_broken_rule_fails_the_run():
    broken = ReductionSystem(overrides={'beta': 'C*A'})
    params = checks.default_check_params()
    params.update({'max_k': 3, 'trials': 200})
    report = checks.run_all(params, broken, checks=[
        'confluence', 'resolvability'])
    failed = {result.name for result in report.failures}
    assert {'confluence', 'phi2'} <= failed
    assert report.config['overrides'] == {'beta': 'C*A'}


@pytest.mark.slow
def test_cli_check_saves_report():
    dirpath = '.tmpdir'
    runner = CliRunner()
    result = runner.invoke(cli, [
        'check', '--mode', 'concrete', '--m', '2', '--b', '1',
        '--max-k', '2', '--max-deg', '3', '--max-exp', '1',
        '--trials', '10', '--save', dirpath, '--output', 'json'])
    report = checks.load_check_report(dirpath)
    shutil.rmtree(dirpath)
    assert result.exit_code == 0
    assert json.loads(result.stdout)['result']['passed'] is True
    assert report.passed
    assert report.config['twist'] == {'mode': 'concrete', 'm': '2',
                                      'b': '1'}
