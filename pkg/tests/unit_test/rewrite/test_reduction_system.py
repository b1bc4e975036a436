import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twistlie.freealg import NcPoly, parse, all_words
from twistlie.rewrite import ReductionSystem, BASE_RULES, measure, \
    matches_irreducible_pattern, IdentityUnit, ReductionUnit, \
    ReductionChain
from twistlie.scalars import TwistParams
from twistlie.utils import random_poly


@pytest.fixture(scope='module')
def system():
    return ReductionSystem()


@pytest.fixture(scope='module', params=[(2, 1), (3, -2), ('1/2', '1/3')])
def concrete_system(request):
    return ReductionSystem(TwistParams.concrete(*request.param))


@pytest.mark.parametrize('text,expected', [
    ('A*B', '(m/(m-1))*C - (b/(m-1))*I'),
    ('B*A', '(1/(m-1))*C - (b/(m-1))*I'),
    ('A*C', 'm*C*A'),
    ('C*B', 'm*B*C'),
    ('[A,B]', 'C'),
    ('B*C*A', '(1/(m^2-m))*C^2 - (b/(m^2-m))*C'),
    ('C^2*A^3 + B*C', 'C^2*A^3 + B*C'),
    ('A*B - m*B*A - b', '0'),
])
def test_normal_form(system, text, expected):
    assert str(system.normal_form(parse(text))) == expected


@pytest.mark.parametrize('m,b,text,expected', [
    (2, 1, 'B*A', 'C - I'),
    (2, 1, 'A*B', '2*C - I'),
    (3, -2, 'B*A', '(1/2)*C + I'),
])
def test_normal_form_concrete(m, b, text, expected):
    params = TwistParams.concrete(m, b)
    system = ReductionSystem(params)
    assert str(system.normal_form(parse(text, params))) == expected


def test_defining_relation(concrete_system):
    params = concrete_system.params
    relation = parse('A*B - m*B*A - b*I', params)
    assert concrete_system.normal_form(relation).is_zero()


def test_rules_decrease_measure(system):
    for rule in system.rules(10):
        assert rule.decreases_measure()
        for word in rule.rhs.support:
            assert measure(word) < measure(rule.lhs)


def test_rule_lookup(system):
    assert [system.rule(name).name for name in BASE_RULES] == \
        list(BASE_RULES)
    assert system.rule('epsilon', 3).lhs == 'BCCCA'
    with pytest.raises(ValueError):
        system.rule('epsilon')
    with pytest.raises(ValueError):
        system.rule('zeta')


def test_normal_forms_are_irreducible(system):
    for word in all_words(5):
        nf = system.normal_form(NcPoly.word(word))
        for target in nf.support:
            assert system.is_irreducible(target)
            assert matches_irreducible_pattern(target)


def test_irreducible_words_are_fixed(system):
    for word in all_words(5):
        if system.is_irreducible(word):
            assert system.normal_form(NcPoly.word(word)) == \
                NcPoly.word(word)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 31 - 1))
def test_random_order_reaches_normal_form(seed):
    system = ReductionSystem()
    random_state = np.random.RandomState(seed)
    poly = random_poly(system.params, random_state, max_length=6)
    assert system.random_normal_form(poly, random_state) == \
        system.normal_form(poly)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 31 - 1))
def test_multiplication_respects_normal_forms(seed):
    system = ReductionSystem()
    random_state = np.random.RandomState(seed)
    x = random_poly(system.params, random_state, max_length=3)
    y = random_poly(system.params, random_state, max_length=3)
    assert system.multiply(system.normal_form(x), system.normal_form(y)) \
        == system.multiply(x, y)


def test_reduction_steps(system):
    steps, nf = system.reduction_steps(parse('A*B*A'))
    assert steps
    assert all(isinstance(step, ReductionUnit) for step in steps)
    assert nf == system.normal_form(parse('A*B*A'))
    assert ReductionChain(steps).transform(parse('A*B*A')) == nf


def test_reduction_chain(system):
    poly = parse('A*B + C')
    empty = ReductionChain([IdentityUnit(), ReductionChain([])])
    assert len(empty) == 0
    assert empty.label == 'id'
    assert empty.transform(poly) == poly
    steps, nf = system.reduction_steps(parse('A*C*C'))
    chain = ReductionChain([ReductionChain(steps[:1]), IdentityUnit()] +
                           steps[1:])
    assert list(chain) == steps
    assert chain.label == ' o '.join(s.label for s in reversed(steps))
    assert chain.transform(parse('A*C*C')) == nf


def test_quotient_equal(system):
    assert system.quotient_equal(parse('A*B'), parse('m*B*A + b'))
    assert not system.quotient_equal(parse('A*B'), parse('B*A'))


def test_overrides():
    broken = ReductionSystem(overrides={'beta': 'C*A'})
    assert broken.overrides == {'beta': 'C*A'}
    assert str(broken.normal_form(parse('A*C'))) == 'C*A'


@pytest.mark.parametrize('overrides', [
    {'zeta': 'A'},
    {'alpha': 'A*B*A'},
])
def test_invalid_overrides(overrides):
    with pytest.raises(ValueError):
        ReductionSystem(overrides=overrides)
