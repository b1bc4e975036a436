"""Seeded random scalars, words and polynomials for the randomized checks."""

import typing
from fractions import Fraction

import numpy as np

from twistlie.freealg import NcPoly, LETTERS
from twistlie.scalars import Scalar, TwistParams, scalar_from


def random_scalar(
    params: TwistParams,
    random_state: np.random.RandomState
) -> Scalar:
    """
    A nonzero scalar with small numerator and denominator.

    In symbolic mode the rational factor is multiplied by `m^i b^j` with
    `i, j` in `{0, 1}`.
    """
    numerator = int(random_state.randint(1, 7))
    if random_state.randint(2):
        numerator = -numerator
    value = scalar_from(Fraction(numerator, int(random_state.randint(1, 5))))
    if params.is_symbolic:
        value = value * params.m_scalar ** int(random_state.randint(2))
        value = value * params.b_scalar ** int(random_state.randint(2))
    return value


def random_word(
    max_length: int,
    random_state: np.random.RandomState,
    letters: str = LETTERS
) -> str:
    """:return: A word of uniformly drawn length at most `max_length`."""
    length = int(random_state.randint(max_length + 1))
    return ''.join(letters[i] for i in
                   random_state.randint(len(letters), size=length))


def random_poly(
    params: TwistParams,
    random_state: np.random.RandomState,
    max_length: int = 10,
    max_terms: int = 3,
    letters: str = LETTERS
) -> NcPoly:
    """
    A random polynomial over words of length at most `max_length`.

    Example:
        >>> rng = np.random.RandomState(0)
        >>> poly = random_poly(TwistParams.symbolic(), rng, max_length=4)
        >>> all(len(word) <= 4 for word in poly.support)
        True

    """
    terms: typing.List[typing.Tuple[str, Scalar]] = []
    for _ in range(int(random_state.randint(1, max_terms + 1))):
        terms.append((random_word(max_length, random_state, letters),
                      random_scalar(params, random_state)))
    return NcPoly.from_terms(terms)
