from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from twistlie.engine.exceptions import DenominatorVanishes, DivisionByZero, \
    InvalidParams, RootOfUnityParam
from twistlie.scalars import TwistParams, SYMBOL_M, SYMBOL_B, ZERO, ONE, \
    scalar_from, scalar_arith, scalar_inv, scalar_equal, is_zero, m_power, \
    specialize, render_scalar, looks_negative

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)
slopes = rationals.filter(lambda value: value not in (0, 1))


@st.composite
def scalars(draw):
    coeffs = draw(st.lists(rationals, min_size=1, max_size=3))
    monomials = draw(st.lists(st.tuples(st.integers(0, 2),
                                        st.integers(0, 2)),
                              min_size=len(coeffs), max_size=len(coeffs)))
    numer = sum((scalar_from(c) * SYMBOL_M ** i * SYMBOL_B ** j
                 for c, (i, j) in zip(coeffs, monomials)), ZERO)
    denom = (SYMBOL_M - 1) ** draw(st.integers(0, 2)) * \
        SYMBOL_M ** draw(st.integers(0, 2))
    return numer / denom


@given(scalars(), scalars(), scalars())
def test_field_associativity(x, y, z):
    assert scalar_equal((x + y) + z, x + (y + z))
    assert scalar_equal((x * y) * z, x * (y * z))


@given(scalars(), scalars(), scalars())
def test_field_distributivity(x, y, z):
    assert scalar_equal(x * (y + z), x * y + x * z)


@given(scalars())
def test_field_inverse(x):
    if is_zero(x):
        with pytest.raises(DivisionByZero):
            scalar_inv(x)
    else:
        assert scalar_equal(scalar_inv(x) * x, ONE)


@given(scalars())
def test_render_is_stable(x):
    assert render_scalar(x) == render_scalar(x * ONE + ZERO)


def test_scalar_arith():
    m = SYMBOL_M
    assert scalar_equal(scalar_arith(m, 1, 'sub'), m - 1)
    assert scalar_equal(scalar_arith('1/2', '1/3', 'add'),
                        scalar_from(Fraction(5, 6)))
    with pytest.raises(ValueError):
        scalar_arith(m, m, 'div')


def test_gcd_cancellation():
    m = SYMBOL_M
    assert render_scalar((m ** 2 - 1) / (m - 1)) == 'm+1'


def test_render_scalar():
    m, b = SYMBOL_M, SYMBOL_B
    assert render_scalar(m / (m - 1)) == 'm/(m-1)'
    assert render_scalar(scalar_from(Fraction(-4, 6))) == '-2/3'
    assert render_scalar(m_power(-2)) == '1/m^2'
    assert looks_negative(-b / (m - 1))
    assert not looks_negative(m / (m - 1))


def test_specialize():
    m = SYMBOL_M
    params = TwistParams.concrete(2, 5)
    assert render_scalar(specialize((m ** 2 - 1) / (m - 1), params)) == '3'
    with pytest.raises(DenominatorVanishes):
        specialize(ONE / (m - 2), params)
    with pytest.raises(ValueError):
        specialize(m, TwistParams.symbolic())


@given(scalars(), scalars(), slopes, rationals)
def test_specialize_is_ring_homomorphism(x, y, m, b):
    params = TwistParams.concrete(m, b)
    sx, sy = specialize(x, params), specialize(y, params)
    assert scalar_equal(specialize(x + y, params), sx + sy)
    assert scalar_equal(specialize(x - y, params), sx - sy)
    assert scalar_equal(specialize(x * y, params), sx * sy)
    assume(not is_zero(sy))
    assert scalar_equal(specialize(x / y, params), sx / sy)


@pytest.mark.parametrize('m,b', [(0, 1), (1, 0), ('1', '2')])
def test_slope_guard(m, b):
    with pytest.raises(InvalidParams):
        TwistParams.concrete(m, b)


@pytest.mark.parametrize('m,b', [('x', 1), (2, None), (2, '1/0')])
def test_invalid_values(m, b):
    with pytest.raises(InvalidParams):
        TwistParams.concrete(m, b)


def test_unknown_mode():
    with pytest.raises(InvalidParams):
        TwistParams('floating')


def test_concrete_params():
    params = TwistParams.concrete('1/2', '-1/3')
    assert params.m == Fraction(1, 2)
    assert params.b == Fraction(-1, 3)
    assert params.describe() == {'mode': 'concrete', 'm': '1/2',
                                 'b': '-1/3'}
    assert params == TwistParams.concrete(Fraction(2, 4), '-2/6')
    assert params.lie_ok


def test_symbolic_params():
    params = TwistParams.symbolic()
    assert params.is_symbolic
    assert params.m is None
    assert params.m_scalar == SYMBOL_M
    assert params.describe() == {'mode': 'symbolic', 'm': None, 'b': None}


def test_root_of_unity():
    params = TwistParams.concrete(-1, 1)
    assert not params.lie_ok
    with pytest.raises(RootOfUnityParam):
        params.require_lie_ok()
