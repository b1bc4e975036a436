import numpy as np
from hypothesis import given, settings, strategies as st

from twistlie.freealg import NcPoly, parse
from twistlie.scalars import TwistParams, SYMBOL_M, scalar_equal
from twistlie.utils import EchelonSpan, random_poly, random_word, \
    random_scalar


def test_echelon_certificates():
    span = EchelonSpan()
    assert span.add(parse('C*A + m*B'), label='x')
    assert span.add(parse('B - A'), label='y')
    target = parse('C*A + m*A')
    coeffs = span.solve(target)
    combination = sum((parse(text).scale(coeffs.get(label, 0))
                       for label, text in (('x', 'C*A + m*B'),
                                           ('y', 'B - A'))),
                      NcPoly.zero())
    assert combination == target
    assert scalar_equal(coeffs['y'], -SYMBOL_M)
    assert span.solve(parse('C')) is None


def test_echelon_dependent_vectors():
    span = EchelonSpan.of([parse('A + B'), parse('2*A + 2*B'), parse('C')])
    assert len(span) == 2
    assert span.pivots == ['C', 'A']
    assert all(row.coefficient(row.support[0]) == 1 for row in span.basis())


def test_spans_equal():
    left = EchelonSpan.of([parse('A + B'), parse('A - B')])
    right = EchelonSpan.of([parse('A'), parse('B')])
    assert left.spans_equal(right)
    assert right.spans_equal(left)
    assert not left.spans_equal(EchelonSpan.of([parse('A')]))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 31 - 1))
def test_random_poly_is_seeded(seed):
    params = TwistParams.symbolic()
    first = random_poly(params, np.random.RandomState(seed), max_length=5)
    second = random_poly(params, np.random.RandomState(seed), max_length=5)
    assert first == second
    assert all(len(word) <= 5 for word in first.support)


def test_random_word_and_scalar():
    random_state = np.random.RandomState(0)
    for _ in range(20):
        assert set(random_word(4, random_state, 'AB')) <= {'A', 'B'}
    params = TwistParams.concrete(2, 1)
    for _ in range(20):
        value = random_scalar(params, random_state)
        assert value.numer and value.numer.is_ground
