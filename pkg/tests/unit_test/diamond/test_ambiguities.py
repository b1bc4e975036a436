import pytest

from twistlie.diamond import OVERLAP, closed_form_ambiguities, \
    find_overlap_ambiguities, find_inclusion_ambiguities, \
    enumerate_ambiguities, ambiguities_frame, resolve, compose_ab, \
    a_units, b_units, verify_resolution_table, RESOLUTION_TABLE
from twistlie.engine.exceptions import NotResolvable
from twistlie.freealg import NcPoly, parse
from twistlie.rewrite import ReductionSystem, Rule
from twistlie.scalars import TwistParams, m_power


@pytest.fixture(scope='module')
def system():
    return ReductionSystem()


@pytest.mark.parametrize('max_k', [1, 2, 3, 5])
def test_enumerate_matches_catalogue(system, max_k):
    found = enumerate_ambiguities(system, max_k)
    assert len(found) == 5 + 4 * max_k
    assert all(ambiguity.name is not None for ambiguity in found)
    assert all(ambiguity.kind == OVERLAP for ambiguity in found)
    assert len(find_overlap_ambiguities(system, max_k)) == len(found)
    assert find_inclusion_ambiguities(system, max_k) == []


def test_catalogue_words(system):
    words = {a.label: a.word for a in closed_form_ambiguities(system, 2)}
    assert words['phi1'] == 'ABA'
    assert words['phi2'] == 'ACB'
    assert words['phi5'] == 'CBA'
    assert words['phi6(k=2)'] == 'ABCCA'
    assert words['phi9(k=2)'] == 'BCCAC'


def test_overlaps_of_gamma_have_both_contexts(system):
    for ambiguity in find_overlap_ambiguities(system, 3):
        assert ambiguity.left and ambiguity.middle and ambiguity.right
        assert ambiguity.word == ambiguity.mu.lhs + ambiguity.right
        assert ambiguity.word == ambiguity.left + ambiguity.nu.lhs


class _FixedRules(object):
    def __init__(self, *lhs):
        self._rules = [Rule(f'r{i}', word, NcPoly.zero())
                       for i, word in enumerate(lhs)]

    def rules(self, max_k):
        return self._rules


def test_overlaps_with_empty_context():
    found = find_overlap_ambiguities(_FixedRules('AB', 'ABC', 'BC'), 1)
    assert sorted(
        (a.mu.lhs, a.nu.lhs, a.left, a.middle, a.right) for a in found
    ) == [
        ('AB', 'ABC', '', 'AB', 'C'),
        ('AB', 'BC', 'A', 'B', 'C'),
        ('ABC', 'BC', 'A', 'BC', ''),
    ]
    for ambiguity in found:
        assert ambiguity.word == ambiguity.mu.lhs + ambiguity.right
        assert ambiguity.word == ambiguity.left + ambiguity.nu.lhs


def test_enumerate_rejects_bad_bound(system):
    with pytest.raises(ValueError):
        enumerate_ambiguities(system, 0)


def test_frame(system):
    frame = ambiguities_frame(enumerate_ambiguities(system, 2))
    assert len(frame) == 13
    assert frame['label'].tolist()[:2] == ['phi1', 'phi2']


@pytest.mark.parametrize('params', [
    TwistParams.symbolic(),
    TwistParams.concrete(2, 1),
    TwistParams.concrete(3, -2),
    TwistParams.concrete('1/2', '1/3'),
    TwistParams.concrete(-1, 1),
])
def test_all_ambiguities_resolve(params):
    system = ReductionSystem(params)
    for ambiguity in enumerate_ambiguities(system, 4):
        trace = resolve(ambiguity, system)
        assert trace.common == system.normal_form(NcPoly.word(
            ambiguity.word))
        record = trace.to_record()
        assert record['common_nf'] == str(trace.common)


def test_broken_rule_is_detected():
    broken = ReductionSystem(overrides={'beta': 'C*A'})
    phi2 = closed_form_ambiguities(broken, 1)[1]
    assert phi2.name == 'phi2'
    with pytest.raises(NotResolvable) as info:
        resolve(phi2, broken)
    assert info.value.lhs != info.value.rhs


@pytest.mark.parametrize('k', [1, 2, 3, 4])
def test_compositions_move(system, k):
    m_k = m_power(k)
    assert compose_ab('a', k, NcPoly.word('A' + 'C' * k), system) == \
        NcPoly.word('C' * k + 'A', m_k)
    assert compose_ab('b', k, NcPoly.word('C' * k + 'B'), system) == \
        NcPoly.word('B' + 'C' * k, m_k)


def test_compositions_fix_other_words(system):
    poly = parse('A*C + B^2')
    assert compose_ab('a', 2, poly, system) == poly
    assert compose_ab('b', 2, poly, system) == poly


def test_composition_units(system):
    assert len(a_units(3, system)) == 3
    assert len(b_units(3, system)) == 3
    with pytest.raises(ValueError):
        compose_ab('c', 1, parse('A'), system)
    with pytest.raises(ValueError):
        a_units(0, system)


def test_resolution_table(system):
    rows = verify_resolution_table(system, 3)
    assert len(rows) == 17
    assert {row.ambiguity.name for row in rows} == set(RESOLUTION_TABLE)
    for row in rows:
        assert row.passed
        assert row.lhs == system.normal_form(row.ambiguity.lhs_start())
        assert row.to_record()['lambda'] == row.printed_lambda


def test_resolution_table_concrete():
    system = ReductionSystem(TwistParams.concrete(2, 1))
    assert all(row.passed for row in verify_resolution_table(system, 4))
