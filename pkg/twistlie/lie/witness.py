"""
Bracket witnesses of Lie polynomials.

Every Lie basis word is written as an explicit combination of brackets in
`A` and `B`:

* `C = [A, B]`;
* `(1 - m^(k+1)) C^(k+1) = (1 - m^k) b C^k
  - m^k (1 - m)^(1-k) [B, (ad C)^k (A)]`;
* `(m^k - 1)^l C^k A^l = (ad A)^l (C^k)`;
* `(1 - m^k)^l B^l C^k = (ad B)^l (C^k)`.
"""

import re
import typing
import weakref

from twistlie.engine.exceptions import NotLiePolynomial
from twistlie.freealg import NcPoly
from twistlie.lie.decomposition import decompose
from twistlie.lie.lie_expr import LieExpr, Tree
from twistlie.rewrite import ReductionSystem
from twistlie.scalars import scalar_inv, m_power, ONE

_BASIS_WORD = re.compile(r'(?P<b>B*)(?P<c>C*)(?P<a>A*)')

_COMMUTATOR: Tree = ('A', 'B')


class WitnessBuilder(object):
    """
    Builds and memoizes witnesses of basis words for one reduction system.

    Example:
        >>> builder = WitnessBuilder(ReductionSystem())
        >>> print(builder.basis_word('C'))
        [A,B]
        >>> print(builder.basis_word('CA'))
        (1/(m-1))*[A,[A,B]]

    """

    def __init__(self, system: ReductionSystem):
        """
        :class:`WitnessBuilder` constructor.

        :param system: The reduction system; `m` must not be a root of
            unity.
        """
        system.params.require_lie_ok()
        self._system = system
        self._powers: typing.Dict[int, LieExpr] = {
            1: LieExpr.tree(_COMMUTATOR),
        }

    def power_of_c(self, k: int) -> LieExpr:
        """:return: Witness of `C^k`, `k >= 1`."""
        if k < 1:
            raise ValueError(f"Powers of C need k >= 1, got {k}.")
        params = self._system.params
        m, b = params.m_scalar, params.b_scalar
        top = max(self._powers)
        while top < k:
            nested: Tree = 'A'
            for _ in range(top):
                nested = (_COMMUTATOR, nested)
            previous = self._powers[top]
            bracket_term = LieExpr.tree(
                ('B', nested),
                m_power(top, params) * (ONE - m) ** (1 - top))
            combined = previous.scale((ONE - m_power(top, params)) * b) - \
                bracket_term
            self._powers[top + 1] = combined.scale(
                scalar_inv(ONE - m_power(top + 1, params)))
            top += 1
        return self._powers[k]

    def basis_word(self, word: str) -> LieExpr:
        """
        Witness of a single Lie basis word.

        :raises NotLiePolynomial: if `word` is not a Lie basis word.
        """
        match = _BASIS_WORD.fullmatch(word)
        if word in ('A', 'B'):
            return LieExpr.leaf(word)
        if not match or not match.group('c') or \
                (match.group('a') and match.group('b')):
            raise NotLiePolynomial(NcPoly.word(word))
        k = len(match.group('c'))
        expr = self.power_of_c(k)
        params = self._system.params
        if match.group('a'):
            letter, factor = 'A', m_power(k, params) - ONE
            count = len(match.group('a'))
        else:
            letter, factor = 'B', ONE - m_power(k, params)
            count = len(match.group('b'))
        if not count:
            return expr
        generator = LieExpr.leaf(letter)
        for _ in range(count):
            expr = generator.ad(expr)
        return expr.scale(scalar_inv(factor ** count))

    def __call__(self, poly: NcPoly) -> LieExpr:
        """
        Witness of a Lie polynomial.

        :param poly: A Lie polynomial.
        :return: A bracket expression expanding to the normal form of
            `poly`.
        :raises NotLiePolynomial: if `poly` has a complement part.
        """
        parts = decompose(poly, self._system)
        if not parts.is_lie:
            raise NotLiePolynomial(parts.complement_part)
        result = LieExpr.zero()
        for word, coeff in parts.lie_part.items():
            result = result + self.basis_word(word).scale(coeff)
        return result


_BUILDERS: 'weakref.WeakKeyDictionary[ReductionSystem, WitnessBuilder]' = \
    weakref.WeakKeyDictionary()


def witness(poly: NcPoly, system: ReductionSystem) -> LieExpr:
    """
    Bracket expression of a Lie polynomial.

    Example:
        >>> from twistlie.freealg import parse
        >>> system = ReductionSystem()
        >>> print(witness(parse('C*A'), system))
        (1/(m-1))*[A,[A,B]]

    :param poly: A Lie polynomial.
    :param system: The reduction system.
    :raises NotLiePolynomial: if `poly` has a complement part.
    :raises RootOfUnityParam: if `m` is a root of unity.
    """
    if system not in _BUILDERS:
        _BUILDERS[system] = WitnessBuilder(system)
    return _BUILDERS[system](poly)
