from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistlie.engine.exceptions import DenominatorVanishes
from twistlie.freealg import NcPoly, bracket, parse, all_words, \
    filtration_degree, letter_power, render_word, word_sort_key
from twistlie.scalars import SYMBOL_M, SYMBOL_B, TwistParams, scalar_from

words = st.text(alphabet='ABC', max_size=4)
coefficients = st.one_of(
    st.fractions(min_value=-20, max_value=20, max_denominator=9).map(
        scalar_from),
    st.sampled_from([SYMBOL_M, SYMBOL_B, SYMBOL_M / (SYMBOL_M - 1),
                     -SYMBOL_B / (SYMBOL_M - 1), 1 / SYMBOL_M ** 2]),
)
polys = st.dictionaries(words, coefficients, max_size=4).map(NcPoly)


@given(polys, polys, polys)
def test_ring_associativity(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)


@given(polys, polys, polys)
def test_ring_distributivity(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(polys)
def test_ring_units(x):
    assert x * NcPoly.one() == x == NcPoly.one() * x
    assert (x - x).is_zero()
    assert x + NcPoly.zero() == x


@given(polys, polys)
def test_specialize_is_multiplicative(x, y):
    params = TwistParams.concrete(3, '-1/2')
    assert (x * y).specialize(params) == \
        x.specialize(params) * y.specialize(params)
    assert (x - y).specialize(params) == \
        x.specialize(params) - y.specialize(params)


def test_specialize():
    params = TwistParams.concrete(2, 1)
    poly = parse('(m/(m-1))*C - (b/(m-1))*I')
    assert str(poly.specialize(params)) == '2*C - I'
    assert parse('(b-1)*A').specialize(params).is_zero()
    with pytest.raises(DenominatorVanishes):
        parse('A/(m-2)').specialize(params)


@given(polys)
def test_render_parse_round_trip(x):
    assert parse(str(x)) == x


@given(polys, polys)
def test_bracket_antisymmetry(x, y):
    assert bracket(x, y) == -bracket(y, x)


def test_zero_coefficients_dropped():
    poly = NcPoly({'AB': 0, 'C': Fraction(1, 2)})
    assert poly.support == ['C']
    assert len(NcPoly.word('A') - NcPoly.word('A')) == 0


def test_invalid_word():
    with pytest.raises(ValueError):
        NcPoly.word('AD')


def test_power():
    a = NcPoly.word('A')
    assert a ** 3 == NcPoly.word('AAA')
    assert a ** 0 == NcPoly.one()
    with pytest.raises(ValueError):
        a ** -1


@pytest.mark.parametrize('poly,text', [
    (NcPoly.zero(), '0'),
    (NcPoly.one(), 'I'),
    (NcPoly.word('CCA', 2), '2*C^2*A'),
    (NcPoly.word('B', -1), '-B'),
    (NcPoly.word('C', Fraction(-2, 3)), '-(2/3)*C'),
    (NcPoly({'A': SYMBOL_M, 'B': -SYMBOL_B}), 'm*A - b*B'),
    (NcPoly({'C': SYMBOL_M / (SYMBOL_M - 1), '': -SYMBOL_B / (SYMBOL_M - 1)}),
     '(m/(m-1))*C - (b/(m-1))*I'),
])
def test_render(poly, text):
    assert str(poly) == text


def test_canonical_order():
    poly = parse('I + B*A + C + A*B + A')
    assert poly.support == ['AB', 'BA', 'C', 'A', '']
    assert poly.filtration_degree() == 2


def test_words():
    assert filtration_degree('CAB') == 4
    assert render_word('BBCCC') == 'B^2*C^3'
    assert sorted(['A', 'C', ''], key=word_sort_key) == ['C', 'A', '']
    assert len(list(all_words(2))) == 1 + 3 + 9
    assert render_word(letter_power('C', 2) + letter_power('A', 3)) == \
        'C^2*A^3'
    with pytest.raises(ValueError):
        letter_power('D', 1)
    with pytest.raises(ValueError):
        letter_power('A', -1)
