"""Splitting normal forms into a Lie part and a complement part."""

import typing

from twistlie.freealg import NcPoly
from twistlie.rewrite import ReductionSystem


def is_complement_word(word: str) -> bool:
    """
    :return: `True` for `I`, `A^n` and `B^n` with `n >= 2`.

    Example:
        >>> [is_complement_word(w) for w in ('', 'A', 'AA', 'BBB', 'CA')]
        [True, False, True, True, False]

    """
    if not word:
        return True
    return len(word) >= 2 and len(set(word)) == 1 and word[0] in 'AB'


class Decomposition(typing.NamedTuple):
    """
    Normal form split along the direct sum `Lie subalgebra + complement`.

    :param lie_part: Terms on `A`, `B`, `C^k`, `C^k A^l`, `B^l C^k`.
    :param complement_part: Terms on `I`, `A^n`, `B^n` with `n >= 2`.
    """

    lie_part: NcPoly
    complement_part: NcPoly

    @property
    def is_lie(self) -> bool:
        """:return: `True` if the complement part vanishes."""
        return self.complement_part.is_zero()


def decompose(poly: NcPoly, system: ReductionSystem) -> Decomposition:
    """
    Decompose the normal form of `poly`.

    Example:
        >>> from twistlie.freealg import parse
        >>> system = ReductionSystem()
        >>> parts = decompose(parse('A*B'), system)
        >>> print(parts.lie_part)
        (m/(m-1))*C
        >>> print(parts.complement_part)
        -(b/(m-1))*I

    :param poly: Input polynomial.
    :param system: The reduction system.
    :raises RootOfUnityParam: if `m` is a root of unity.
    """
    system.params.require_lie_ok()
    lie_terms = []
    complement_terms = []
    for word, coeff in system.normal_form(poly).items():
        if is_complement_word(word):
            complement_terms.append((word, coeff))
        else:
            lie_terms.append((word, coeff))
    return Decomposition(NcPoly.from_terms(lie_terms),
                         NcPoly.from_terms(complement_terms))


def is_lie_polynomial(poly: NcPoly, system: ReductionSystem) -> bool:
    """
    :return: `True` if `poly` lies in the Lie subalgebra generated by A, B.

    Example:
        >>> from twistlie.freealg import parse
        >>> system = ReductionSystem()
        >>> is_lie_polynomial(parse('[A,B]'), system)
        True
        >>> is_lie_polynomial(parse('A^2'), system)
        False

    """
    return decompose(poly, system).is_lie


def ad_power(
    x: NcPoly,
    k: int,
    y: NcPoly,
    system: ReductionSystem
) -> NcPoly:
    """
    Normal form of `(ad x)^k (y)`.

    Example:
        >>> from twistlie.freealg import parse
        >>> system = ReductionSystem()
        >>> print(ad_power(parse('C'), 2, parse('A'), system))
        (m^2-2*m+1)*C^2*A

    :param x: The polynomial acting by brackets.
    :param k: Number of brackets, at least 0.
    :param y: The polynomial acted on.
    :param system: The reduction system.
    """
    if k < 0:
        raise ValueError(f"ad powers need k >= 0, got {k}.")
    x = system.normal_form(x)
    result = system.normal_form(y)
    for _ in range(k):
        result = system.normal_form(x * result - result * x)
    return result
