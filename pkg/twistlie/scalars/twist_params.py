"""Parameters `m`, `b` of the twisting map X -> mX + bI."""

import typing
from fractions import Fraction

from twistlie.engine.exceptions import InvalidParams, RootOfUnityParam
from twistlie.scalars.scalar import Scalar, SYMBOL_M, SYMBOL_B, scalar_from

RationalLike = typing.Union[int, Fraction, str]


def _to_rational(name: str, value: RationalLike) -> Fraction:
    if value is None:
        raise InvalidParams(f"Concrete mode requires a value for `{name}`.")
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InvalidParams(f"`{name}` must be a rational number, "
                            f"got {value!r}.")


class TwistParams(object):
    """
    Twist parameters in symbolic or concrete mode.

    In symbolic mode `m` and `b` stay indeterminates of Q(m, b); in concrete
    mode both are rationals. The slope must avoid 0 and 1.

    Examples:
        >>> TwistParams.symbolic().lie_ok
        True
        >>> TwistParams.concrete('1/2', '1/3').m
        Fraction(1, 2)
        >>> TwistParams.concrete(-1, 0).lie_ok
        False
        >>> TwistParams.concrete(1, 0)
        Traceback (most recent call last):
            ...
        twistlie.engine.exceptions.InvalidParams: The slope m must differ from 0 and 1, got m=1.

    """

    SYMBOLIC = 'symbolic'
    CONCRETE = 'concrete'
    MODES = (SYMBOLIC, CONCRETE)

    def __init__(
        self,
        mode: str = SYMBOLIC,
        m: typing.Optional[RationalLike] = None,
        b: typing.Optional[RationalLike] = None
    ):
        """
        :class:`TwistParams` constructor.

        :param mode: `symbolic` or `concrete`.
        :param m: Slope, required in concrete mode.
        :param b: Intercept, required in concrete mode.
        :raises InvalidParams: on an unknown mode, a missing or non-rational
            value, or a slope in {0, 1}.
        """
        if mode not in self.MODES:
            raise InvalidParams(f"Unknown mode `{mode}`, "
                                f"expected one of {self.MODES}.")
        self._mode = mode
        if mode == self.SYMBOLIC:
            self._m = None
            self._b = None
            self._m_scalar = SYMBOL_M
            self._b_scalar = SYMBOL_B
        else:
            self._m = _to_rational('m', m)
            self._b = _to_rational('b', b)
            if self._m in (0, 1):
                raise InvalidParams(f"The slope m must differ from 0 and 1, "
                                    f"got m={self._m}.")
            self._m_scalar = scalar_from(self._m)
            self._b_scalar = scalar_from(self._b)

    @classmethod
    def symbolic(cls) -> 'TwistParams':
        """:return: Parameters keeping `m` and `b` as indeterminates."""
        return cls(cls.SYMBOLIC)

    @classmethod
    def concrete(cls, m: RationalLike, b: RationalLike) -> 'TwistParams':
        """:return: Parameters fixing rational values of `m` and `b`."""
        return cls(cls.CONCRETE, m, b)

    @property
    def mode(self) -> str:
        """:return: `symbolic` or `concrete`."""
        return self._mode

    @property
    def is_symbolic(self) -> bool:
        """:return: `True` in symbolic mode."""
        return self._mode == self.SYMBOLIC

    @property
    def m(self) -> typing.Optional[Fraction]:
        """:return: Concrete slope, `None` in symbolic mode."""
        return self._m

    @property
    def b(self) -> typing.Optional[Fraction]:
        """:return: Concrete intercept, `None` in symbolic mode."""
        return self._b

    @property
    def m_scalar(self) -> Scalar:
        """:return: The scalar standing for `m` in the active mode."""
        return self._m_scalar

    @property
    def b_scalar(self) -> Scalar:
        """:return: The scalar standing for `b` in the active mode."""
        return self._b_scalar

    @property
    def lie_ok(self) -> bool:
        """
        :return: `True` unless `m` is a rational root of unity.

        The only rational roots of unity are 1 and -1, and 1 is already
        excluded at construction.
        """
        return self.is_symbolic or self._m != -1

    def require_lie_ok(self):
        """:raises RootOfUnityParam: if Lie operations are not available."""
        if not self.lie_ok:
            raise RootOfUnityParam(
                f"m={self._m} is a root of unity; the Lie subalgebra "
                f"characterization does not apply.")

    def describe(self) -> typing.Dict[str, typing.Optional[str]]:
        """:return: `{mode, m, b}` with canonical rational strings."""
        return {
            'mode': self._mode,
            'm': None if self._m is None else str(self._m),
            'b': None if self._b is None else str(self._b),
        }

    def __eq__(self, other):
        """:return: `True` if both select the same algebra."""
        return isinstance(other, TwistParams) and \
            self.describe() == other.describe()

    def __hash__(self):
        """:return: Hash of the description."""
        return hash(tuple(self.describe().items()))

    def __repr__(self) -> str:
        """:return: Formatted representation."""
        if self.is_symbolic:
            return 'TwistParams(symbolic)'
        return f'TwistParams(concrete, m={self._m}, b={self._b})'
