"""
Exact coefficient arithmetic over the rational function field Q(m, b).

Scalars are elements of ``sympy``'s sparse fraction field in the two
indeterminates ``m`` and ``b`` with lexicographic order ``m > b``. A concrete
parameter choice simply produces ground elements of the same field, so both
modes share one arithmetic.
"""

import typing
from fractions import Fraction

from sympy import QQ
from sympy.polys.fields import field, FracElement
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement

from twistlie.engine.exceptions import DivisionByZero, DenominatorVanishes

PARAM_FIELD, SYMBOL_M, SYMBOL_B = field('m,b', QQ, lex)
PARAM_RING = PARAM_FIELD.ring

Scalar = FracElement
ParamPoly = PolyElement
ScalarLike = typing.Union[Scalar, int, Fraction, str]

ZERO = PARAM_FIELD.zero
ONE = PARAM_FIELD.one

_ARITH = {
    'add': lambda x, y: x + y,
    'sub': lambda x, y: x - y,
    'mul': lambda x, y: x * y,
}


def to_fraction(value) -> Fraction:
    """:return: A ground element or rational-like value as `Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except AttributeError:
        raise TypeError(f"Cannot read {value!r} as a rational number.")


def scalar_from(value: ScalarLike) -> Scalar:
    """
    Coerce `value` into a :class:`Scalar`.

    Example:
        >>> render_scalar(scalar_from('3/6'))
        '1/2'
        >>> scalar_from(SYMBOL_M) == SYMBOL_M
        True

    :param value: A scalar, an integer, a `Fraction` or a rational string.
    :return: The corresponding scalar.
    """
    if isinstance(value, FracElement):
        return value
    if isinstance(value, PolyElement):
        return PARAM_FIELD(value)
    if isinstance(value, str):
        value = Fraction(value.strip())
    value = to_fraction(value)
    return PARAM_FIELD(QQ(value.numerator, value.denominator))


def is_zero(x: Scalar) -> bool:
    """:return: `True` if `x` is the zero of the field."""
    return not x.numer


def scalar_equal(x: Scalar, y: Scalar) -> bool:
    """
    Decide equality by cross-multiplication.

    Example:
        >>> m = SYMBOL_M
        >>> scalar_equal(m / (m - 1) - 1 / (m - 1), ONE)
        True

    """
    return x.numer * y.denom == y.numer * x.denom


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """
    Field arithmetic dispatched by operation name.

    :param x: Left operand.
    :param y: Right operand.
    :param op: One of `add`, `sub`, `mul`.
    :return: The result of `x op y`.
    """
    try:
        func = _ARITH[op]
    except KeyError:
        raise ValueError(f"Unknown scalar operation `{op}`.")
    return func(scalar_from(x), scalar_from(y))


def scalar_inv(x: Scalar) -> Scalar:
    """
    Multiplicative inverse.

    Example:
        >>> render_scalar(scalar_inv((SYMBOL_M - 1) ** 2))
        '1/(m^2-2*m+1)'
        >>> scalar_inv(ZERO)
        Traceback (most recent call last):
            ...
        twistlie.engine.exceptions.DivisionByZero: cannot invert zero

    :raises DivisionByZero: if `x` is zero.
    """
    x = scalar_from(x)
    if is_zero(x):
        raise DivisionByZero("cannot invert zero")
    return ONE / x


def m_power(k: int, params=None) -> Scalar:
    """
    Integer power of the slope parameter.

    Example:
        >>> render_scalar(m_power(-2))
        '1/m^2'
        >>> from twistlie.scalars.twist_params import TwistParams
        >>> render_scalar(m_power(2, TwistParams.concrete(3, 0)))
        '9'

    :param k: Exponent, negative values give powers of `1/m`.
    :param params: Twist parameters, symbolic when omitted.
    """
    base = SYMBOL_M if params is None else params.m_scalar
    return base ** k


def evaluate_poly(poly: ParamPoly, m: Fraction, b: Fraction) -> Fraction:
    """:return: The value of `poly` at the rational point `(m, b)`."""
    total = Fraction(0)
    for (i, j), coeff in poly.items():
        total += to_fraction(coeff) * m ** i * b ** j
    return total


def specialize(x: Scalar, params) -> Scalar:
    """
    Substitute the concrete values of `params` for `m` and `b`.

    Example:
        >>> from twistlie.scalars.twist_params import TwistParams
        >>> m = SYMBOL_M
        >>> p = TwistParams.concrete(2, 5)
        >>> render_scalar(specialize((m ** 2 - 1) / (m - 1), p))
        '3'

    :param x: Scalar to specialize.
    :param params: Concrete :class:`TwistParams`.
    :return: A ground scalar.
    :raises DenominatorVanishes: if the denominator of `x` evaluates to zero.
    """
    if params.is_symbolic:
        raise ValueError("specialize needs concrete twist parameters.")
    den = evaluate_poly(x.denom, params.m, params.b)
    if den == 0:
        raise DenominatorVanishes(
            f"denominator {render_poly(x.denom)} vanishes at "
            f"m={params.m}, b={params.b}")
    return scalar_from(evaluate_poly(x.numer, params.m, params.b) / den)


def is_ground(x: Scalar) -> bool:
    """:return: `True` if `x` does not involve `m` or `b`."""
    return x.numer.is_ground and x.denom.is_ground


def looks_negative(x: Scalar) -> bool:
    """:return: `True` if the leading coefficient of the numerator is < 0."""
    return bool(x.numer) and to_fraction(x.numer.LC) < 0


def _render_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def render_poly(poly: ParamPoly) -> str:
    """
    Canonical text of a polynomial in `m`, `b`.

    Example:
        >>> m, b = PARAM_RING.gens
        >>> render_poly(2 * m ** 2 * b - m + 1)
        '2*m^2*b-m+1'

    """
    if not poly:
        return '0'
    text = ''
    for (i, j), coeff in poly.terms():
        value = to_fraction(coeff)
        factors = []
        if i:
            factors.append('m' if i == 1 else f'm^{i}')
        if j:
            factors.append('b' if j == 1 else f'b^{j}')
        if abs(value) != 1 or not factors:
            factors.insert(0, _render_fraction(abs(value)))
        body = '*'.join(factors)
        if value < 0:
            text += '-' + body
        else:
            text += ('+' if text else '') + body
    return text


def render_scalar(x: Scalar) -> str:
    """
    Canonical text `p(m,b)/q(m,b)` of a scalar.

    Example:
        >>> m, b = SYMBOL_M, SYMBOL_B
        >>> render_scalar(m / (m - 1))
        'm/(m-1)'
        >>> render_scalar(-b / (m - 1))
        '-b/(m-1)'
        >>> render_scalar(scalar_from(Fraction(-4, 6)))
        '-2/3'

    """
    x = scalar_from(x)
    if x.denom == PARAM_RING.one:
        return render_poly(x.numer)
    if x.numer.is_ground and x.denom.is_ground:
        return _render_fraction(to_fraction(x.numer.LC) /
                                to_fraction(x.denom.LC))
    num = render_poly(x.numer)
    den = render_poly(x.denom)
    if len(x.numer) > 1:
        num = f'({num})'
    if len(x.denom) > 1 or '*' in den:
        den = f'({den})'
    return f'{num}/{den}'
