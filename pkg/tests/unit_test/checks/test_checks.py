import pytest

from twistlie import checks
from twistlie.engine import Param, ParamTable
from twistlie.freealg import NcPoly, parse
from twistlie.rewrite import ReductionSystem
from twistlie.scalars import TwistParams


def _params(**values):
    params = ParamTable()
    for name, value in values.items():
        params.add(Param(name, value))
    return params


@pytest.fixture(scope='module')
def system():
    return ReductionSystem()


@pytest.fixture(scope='module', params=[(2, 1), (3, -2), ('1/2', '1/3')])
def concrete_system(request):
    return ReductionSystem(TwistParams.concrete(*request.param))


def _assert_passed(results):
    assert results
    failures = [r for r in results if not r.passed]
    assert not failures, failures


def test_reordering(system):
    results = checks.ReorderingCheck()(system, _params(max_exp=2))
    assert len(results) == 76
    _assert_passed(results)
    noted = {r.name for r in results if r.note}
    assert noted == {'bracket_C_BC', 'bracket_A_BC'}


def test_reordering_concrete(concrete_system):
    _assert_passed(checks.ReorderingCheck()(concrete_system,
                                            _params(max_exp=2)))


def test_printed_coefficients(system):
    exact = checks.check_identity(
        'bracket_C_BC', {'k': 1, 'x': 1, 'y': 1}, system)
    assert exact.passed and exact.note is None
    shifted = checks.check_identity('bracket_A_BC', {'x': 1, 'y': 1}, system)
    assert shifted.passed
    assert shifted.note.startswith('printed coefficient differs')


def test_c_product(system):
    assert str(checks.c_product([1], system)) == 'm*C - b*I'
    assert checks.c_product([], system) == NcPoly.one()


def test_equal_exponent(system):
    results = checks.EqualExponentCheck()(system, _params(n_max=3))
    assert len(results) == 12
    _assert_passed(results)


def test_ad_powers(system):
    results = checks.AdPowersCheck()(system, _params(k_max=2, l_max=2))
    assert {r.name for r in results} == \
        {'adCA', 'powerofC', 'adApowerC', 'adBpowerC'}
    _assert_passed(results)


def test_presentation(system):
    results = checks.PresentationCheck()(system,
                                         _params(presentation_k=3))
    _assert_passed(results)
    names = {r.name for r in results}
    assert {'ideal_zeta1', 'ideal_zeta2', 'ideal_xi1', 'ideal_xi2',
            'ideal_xi3', 'ideal_xi4', 'ideal_xi5_recursion',
            'ideal_xi5_closed_form'} == names


def test_solve_combination(system):
    relations = checks.relation_generators(system.params)
    rules = checks.rule_generators(system.params)
    combination = checks.solve_combination(relations['zeta2'], rules)
    assert checks.render_combination(combination) == '-xi1 + xi3'
    assert checks.solve_combination(rules['xi2'], relations) is not None
    assert checks.solve_combination(parse('A'), relations) is None


def test_rule_measure(system):
    results = checks.RuleMeasureCheck()(system, _params(max_k=5))
    assert len(results) == 9
    _assert_passed(results)


def test_normal_form_basis(system):
    results = checks.NormalFormBasisCheck()(system, _params(basis_length=4))
    assert [r.params['length'] for r in results] == [0, 1, 2, 3, 4]
    _assert_passed(results)


@pytest.mark.parametrize('check', [
    checks.ConfluenceCheck, checks.MultiplicativityCheck])
def test_randomized_rewriting(system, check):
    params = _params(trials=20, max_word_length=6, seed=3)
    results = check()(system, params)
    assert len(results) == 1
    _assert_passed(results)


def test_specialization(concrete_system):
    params = _params(trials=50, max_word_length=6, seed=1)
    results = checks.SpecializationCheck()(concrete_system, params)
    assert len(results) == 1
    assert results[0].params['samples'] == 5
    _assert_passed(results)


def test_specialization_skipped(system):
    params = _params(trials=50, max_word_length=6, seed=1)
    check = checks.SpecializationCheck()
    assert check(system, params) == []
    assert check(ReductionSystem(TwistParams.concrete(-1, 1)), params) == []


def test_specialization_detects_broken_rule():
    broken = ReductionSystem(TwistParams.concrete(2, 1),
                             overrides={'beta': 'C*A'})
    params = _params(trials=200, max_word_length=8, seed=0)
    results = checks.SpecializationCheck()(broken, params)
    assert not results[0].passed
    assert 'specializes and reduces' in results[0].counterexample


def test_confluence_detects_broken_rule():
    broken = ReductionSystem(overrides={'beta': 'C*A'})
    params = _params(trials=200, max_word_length=8, seed=0)
    results = checks.ConfluenceCheck()(broken, params)
    assert not results[0].passed
    assert results[0].counterexample


def test_ambiguity_catalogue(system):
    results = checks.AmbiguityCatalogueCheck()(system, _params(max_k=3))
    _assert_passed(results)


def test_resolvability(system):
    results = checks.ResolvabilityCheck()(system, _params(max_k=3))
    assert len(results) == 17
    _assert_passed(results)


def test_resolvability_detects_broken_rule():
    broken = ReductionSystem(overrides={'beta': 'C*A'})
    results = checks.ResolvabilityCheck()(broken, _params(max_k=1))
    failed = {r.name for r in results if not r.passed}
    assert 'phi2' in failed


def test_resolution_table(system):
    results = checks.ResolutionTableCheck()(system, _params(table_k=2))
    assert len(results) == 13
    assert all(r.name.startswith('table_phi') for r in results)
    _assert_passed(results)


def test_compositions(system):
    _assert_passed(checks.CompositionCheck()(system, _params(max_exp=2)))


def test_lie_basis_words():
    assert checks.lie_basis_words(1) == ['A', 'B', 'C', 'CA', 'BC']


@pytest.mark.parametrize('check,params', [
    (checks.BasisBracketCheck, {'bracket_exp': 2}),
    (checks.BracketShapeCheck, {'shape_exp': 2}),
    (checks.ClosureCheck, {'max_deg': 4}),
    (checks.MembershipCheck, {'max_deg': 4, 'membership_samples': 20,
                              'seed': 1}),
    (checks.WitnessCheck, {'max_deg': 5, 'witness_samples': 20, 'seed': 1}),
    (checks.ParamGuardCheck, {'max_deg': 3}),
])
def test_lie_checks(system, check, params):
    _assert_passed(check()(system, _params(**params)))


@pytest.mark.parametrize('check', [
    checks.BasisBracketCheck, checks.BracketShapeCheck,
    checks.ClosureCheck])
def test_lie_checks_skip_root_of_unity(check):
    unity = ReductionSystem(TwistParams.concrete(-1, 1))
    params = _params(bracket_exp=1, shape_exp=1, max_deg=3)
    assert check()(unity, params) == []


def test_run_all_empty():
    report = checks.run_all(ParamTable())
    assert len(report) == 0
    assert report.passed


def test_run_all_selected(concrete_system):
    params = checks.default_check_params()
    params.update({'max_exp': 1, 'max_k': 2})
    report = checks.run_all(params, concrete_system,
                            checks=['reordering', 'resolvability'])
    assert report.passed
    assert report.config['twist']['mode'] == 'concrete'
    assert {r.name for r in report} >= {'reorder_AC', 'phi9'}


def test_default_check_params():
    params = checks.default_check_params()
    assert params.completed()
    assert params['max_deg'] == 6
    with pytest.raises(ValueError):
        params['seed'] = -1
