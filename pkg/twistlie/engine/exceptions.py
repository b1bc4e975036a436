"""Exceptions raised by TwistLie."""

import typing


class TwistLieError(Exception):
    """Base class of all TwistLie errors."""


class InvalidParams(TwistLieError, ValueError):
    """Twist parameters violate the defining restrictions (m = 0 or m = 1)."""


class RootOfUnityParam(InvalidParams):
    """Lie operations were requested with a slope that is a root of unity."""


class DivisionByZero(TwistLieError, ZeroDivisionError):
    """A scalar equal to zero was inverted."""


class DenominatorVanishes(TwistLieError, ZeroDivisionError):
    """A denominator evaluates to zero under a specialization."""


class ParseError(TwistLieError, ValueError):
    """
    Input text does not conform to the expression grammar.

    :param position: Offset of the offending token in the input text.
    :param expected: Descriptions of the tokens acceptable at `position`.
    :param message: Optional extra explanation.
    """

    def __init__(
        self,
        position: int,
        expected: typing.Iterable[str] = (),
        message: str = ''
    ):
        """:class:`ParseError` constructor."""
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        text = f"parse error at offset {position}"
        if message:
            text += f": {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)


class NotResolvable(TwistLieError):
    """
    Both sides of an ambiguity reduce to different normal forms.

    :param ambiguity: The offending ambiguity.
    :param lhs: Normal form reached from `f_mu R`.
    :param rhs: Normal form reached from `L f_nu`.
    """

    def __init__(self, ambiguity, lhs, rhs):
        """:class:`NotResolvable` constructor."""
        self.ambiguity = ambiguity
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(
            f"{ambiguity.label} is not resolvable: {lhs} != {rhs}")


class NotLiePolynomial(TwistLieError, ValueError):
    """
    An element outside the Lie subalgebra generated by A, B was given.

    :param complement: The nonzero complement part of the element.
    """

    def __init__(self, complement):
        """:class:`NotLiePolynomial` constructor."""
        self.complement = complement
        super().__init__(
            f"not a Lie polynomial, complement part is {complement}")
