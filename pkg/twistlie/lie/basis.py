"""Normal-form bases of the Lie subalgebra and of its complement."""

import typing

import numpy as np

from twistlie.freealg import NcPoly, filtration_degree
from twistlie.rewrite import ReductionSystem
from twistlie.utils import random_scalar


def kappa_basis(max_degree: int) -> typing.List[str]:
    """
    Words `A`, `B`, `C^k`, `C^k A^l`, `B^l C^k` (`k, l >= 1`) of filtration
    degree at most `max_degree`.

    Example:
        >>> kappa_basis(3)
        ['A', 'B', 'C', 'CA', 'BC']

    """
    words = [w for w in ('A', 'B') if filtration_degree(w) <= max_degree]
    for k in range(1, max_degree // 2 + 1):
        words.append('C' * k)
        for n in range(1, max_degree - 2 * k + 1):
            words.append('C' * k + 'A' * n)
            words.append('B' * n + 'C' * k)
    return sorted(words, key=lambda w: (filtration_degree(w), w[0] != 'C',
                                        w))


def complement_basis(max_degree: int) -> typing.List[str]:
    """
    Words `I`, `A^n`, `B^n` (`n >= 2`) of degree at most `max_degree`.

    Example:
        >>> complement_basis(3)
        ['', 'AA', 'BB', 'AAA', 'BBB']

    """
    words = ['']
    for n in range(2, max_degree + 1):
        words.extend(['A' * n, 'B' * n])
    return words


def _random_combination(
    words: typing.List[str],
    system: ReductionSystem,
    random_state: np.random.RandomState,
    max_terms: int
) -> NcPoly:
    size = int(random_state.randint(1, min(max_terms, len(words)) + 1))
    chosen = random_state.choice(len(words), size=size, replace=False)
    return NcPoly.from_terms(
        (words[i], random_scalar(system.params, random_state))
        for i in sorted(chosen))


def random_lie_polynomial(
    system: ReductionSystem,
    max_degree: int,
    random_state: np.random.RandomState,
    max_terms: int = 4
) -> NcPoly:
    """:return: A random combination of Lie basis words."""
    return _random_combination(kappa_basis(max_degree), system,
                               random_state, max_terms)


def random_element(
    system: ReductionSystem,
    max_degree: int,
    random_state: np.random.RandomState,
    max_terms: int = 4
) -> NcPoly:
    """
    A random normal form of degree at most `max_degree`.

    Half of the draws are Lie polynomials, the other half carry a nonzero
    complement part.
    """
    lie_part = random_lie_polynomial(system, max_degree, random_state,
                                     max_terms)
    if random_state.randint(2):
        return lie_part
    return lie_part + _random_combination(complement_basis(max_degree),
                                          system, random_state, max_terms)
