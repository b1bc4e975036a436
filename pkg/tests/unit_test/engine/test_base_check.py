import pytest

from twistlie import checks
from twistlie.engine import BaseCheck, ParamTable, Param, parse_check, \
    list_available_checks


def test_base_check_abstract_instantiation():
    with pytest.raises(TypeError):
        BaseCheck()


def test_list_available_checks():
    aliases = [check.ALIAS for check in list_available_checks()]
    assert aliases == sorted(aliases)
    assert len(set(aliases)) == len(aliases)
    assert 'reordering' in aliases
    assert 'lie_closure' in aliases
    assert checks.LieCheck not in list_available_checks()


@pytest.mark.parametrize('alias', [
    'reordering', 'equal_exponent', 'ad_powers', 'presentation',
    'rule_measure', 'normal_form_basis', 'confluence', 'multiplicativity',
    'specialization',
    'ambiguity_catalogue', 'resolvability', 'resolution_table',
    'compositions', 'basis_bracket_closure', 'bracket_shape', 'lie_closure',
    'lie_membership', 'witness_soundness', 'param_guard',
])
def test_parse_check(alias):
    check = parse_check(alias)
    assert isinstance(check, BaseCheck)
    assert str(check) == alias
    assert parse_check(type(check)) == check


def test_parse_check_unknown():
    with pytest.raises(ValueError):
        parse_check('no_such_check')
    with pytest.raises(TypeError):
        parse_check(42)


def test_applicable():
    check = checks.AdPowersCheck()
    params = ParamTable()
    params.add(Param('k_max', 2))
    assert not check.applicable(params)
    params.add(Param('l_max', 2))
    assert check.applicable(params)
