"""Rewriting rules of the quotient algebra and their termination measure."""

import typing

from twistlie.freealg import NcPoly
from twistlie.scalars import TwistParams, scalar_inv, m_power

BASE_RULES = ('alpha', 'beta', 'gamma', 'delta')
EPSILON = 'epsilon'

BASE_LHS = {
    'alpha': 'AB',
    'beta': 'AC',
    'gamma': 'BA',
    'delta': 'CB',
}

_DISORDERED = {('A', 'C'), ('C', 'B')}


def disorder(word: str) -> int:
    """
    Number of letter pairs standing in the wrong order.

    A pair of positions `i < j` counts when the letters read `A ... C` or
    `C ... B`.

    Example:
        >>> disorder('ACB')
        2
        >>> disorder('CCA')
        0

    """
    count = 0
    seen_a = 0
    seen_c = 0
    for letter in word:
        if letter == 'C':
            count += seen_a
            seen_c += 1
        elif letter == 'B':
            count += seen_c
        elif letter == 'A':
            seen_a += 1
    return count


def measure(word: str) -> typing.Tuple[int, int]:
    """
    Well-founded termination measure `(length, disorder)`.

    Compared lexicographically, every reduction step strictly decreases it.

    Example:
        >>> measure('AC') > measure('CA')
        True
        >>> measure('BCA') > measure('CC')
        True

    """
    return len(word), disorder(word)


def epsilon_lhs(k: int) -> str:
    """:return: The word `B C^k A`."""
    return 'B' + 'C' * k + 'A'


class Rule(typing.NamedTuple):
    """
    A rewriting rule `lhs -> rhs`.

    :param name: One of `alpha`, `beta`, `gamma`, `delta`, `epsilon`.
    :param lhs: The left hand side word.
    :param rhs: The replacement polynomial.
    :param k: Family index of `epsilon` rules, `None` otherwise.
    """

    name: str
    lhs: str
    rhs: NcPoly
    k: typing.Optional[int] = None

    @property
    def label(self) -> str:
        """:return: `alpha`, ..., `delta` or `epsilon(k)`."""
        if self.k is None:
            return self.name
        return f'{self.name}({self.k})'

    def decreases_measure(self) -> bool:
        """:return: `True` if every word of `rhs` is smaller than `lhs`."""
        bound = measure(self.lhs)
        return all(measure(word) < bound for word in self.rhs.support)

    def __str__(self) -> str:
        """:return: `label: lhs -> rhs`."""
        return f'{self.label}: {self.lhs} -> {self.rhs}'


def base_rhs(name: str, params: TwistParams) -> NcPoly:
    """
    Right hand side of a base rule.

    Example:
        >>> print(base_rhs('alpha', TwistParams.symbolic()))
        (m/(m-1))*C - (b/(m-1))*I
        >>> print(base_rhs('delta', TwistParams.concrete(2, 0)))
        2*B*C

    :param name: One of `alpha`, `beta`, `gamma`, `delta`.
    :param params: Twist parameters.
    """
    m, b = params.m_scalar, params.b_scalar
    c = NcPoly.word('C')
    unity = NcPoly.one()
    denom = scalar_inv(m - 1)
    if name == 'alpha':
        return (c * m - unity * b) * denom
    if name == 'beta':
        return NcPoly.word('CA', m)
    if name == 'gamma':
        return (c - unity * b) * denom
    if name == 'delta':
        return NcPoly.word('BC', m)
    raise ValueError(f"Unknown rule `{name}`, expected one of {BASE_RULES}.")


def epsilon_rhs(k: int, params: TwistParams) -> NcPoly:
    """
    Right hand side `(C^(k+1) - b C^k) / (m^k (m-1))` of `epsilon(k)`.

    Example:
        >>> print(epsilon_rhs(1, TwistParams.symbolic()))
        (1/(m^2-m))*C^2 - (b/(m^2-m))*C

    """
    if k < 1:
        raise ValueError(f"epsilon rules need k >= 1, got {k}.")
    m, b = params.m_scalar, params.b_scalar
    denom = scalar_inv(m_power(k, params) * (m - 1))
    return (NcPoly.word('C' * (k + 1)) - NcPoly.word('C' * k, b)) * denom
