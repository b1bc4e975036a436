import pytest

from twistlie.engine import Param, ParamTable


@pytest.fixture
def param_table():
    params = ParamTable()
    params.add(Param('max_exp', 6))
    return params


def test_get(param_table):
    assert param_table['max_exp'] == 6


def test_set(param_table):
    new_param = Param('seed', 0)
    param_table.set('seed', new_param)
    assert 'seed' in param_table.keys()


def test_keys(param_table):
    assert 'max_exp' in param_table.keys()


def test_add_twice(param_table):
    with pytest.raises(ValueError):
        param_table.add(Param('max_exp', 3))


def test_add_rejects_non_param(param_table):
    with pytest.raises(TypeError):
        param_table.add('max_k')


def test_update_skips_none(param_table):
    param_table.add(Param('max_k', 20))
    param_table.update({'max_exp': 2, 'max_k': None})
    assert param_table['max_exp'] == 2
    assert param_table['max_k'] == 20


def test_validator():
    params = ParamTable()
    params.add(Param('max_deg', 6, validator=lambda x: 1 <= x <= 10))
    with pytest.raises(ValueError, match='Validator not satisfied'):
        params['max_deg'] = 11
    assert params['max_deg'] == 6


def test_filled(param_table):
    param_table.add(Param('seed'))
    assert param_table.filled(['max_exp'])
    assert not param_table.filled(['max_exp', 'seed'])
    assert not param_table.completed()


def test_to_dict_and_frame(param_table):
    assert param_table.to_dict() == {'max_exp': 6}
    assert len(param_table.to_frame()) == len(param_table) == 1
