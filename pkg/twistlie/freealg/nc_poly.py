"""Noncommutative polynomials over {A, B, C} with scalar coefficients."""

import re
import typing

from twistlie.freealg.words import filtration_degree, render_word, \
    word_sort_key, is_word
from twistlie.scalars import Scalar, ONE, scalar_from, scalar_equal, \
    is_zero, render_scalar, looks_negative, specialize

_PLAIN_SCALAR = re.compile(r'\d+|[mb]')


def render_term(coeff: Scalar, body: str, first: bool) -> str:
    """
    Render one `coefficient * body` summand.

    :param coeff: Coefficient of the summand.
    :param body: Text of the basis element (a word or a bracket).
    :param first: Whether the summand opens the sum.
    """
    negative = looks_negative(coeff)
    if negative:
        coeff = -coeff
    if coeff == ONE:
        text = body
    else:
        scalar_text = render_scalar(coeff)
        if not _PLAIN_SCALAR.fullmatch(scalar_text):
            scalar_text = f'({scalar_text})'
        text = f'{scalar_text}*{body}'
    if first:
        return f'-{text}' if negative else text
    return f' - {text}' if negative else f' + {text}'


class NcPoly(object):
    """
    Finite scalar-linear combination of words.

    Values are immutable; zero coefficients are never stored.

    Examples:
        >>> a, b = NcPoly.word('A'), NcPoly.word('B')
        >>> print((a - b) * (a + b))
        A^2 + A*B - B*A - B^2
        >>> print(bracket(a, a * b))
        A^2*B - A*B*A
        >>> print(NcPoly.zero())
        0

    """

    __slots__ = ('_terms',)

    def __init__(self, terms: typing.Optional[typing.Mapping] = None):
        """
        :class:`NcPoly` constructor.

        :param terms: Mapping from words to scalar-like coefficients.
        """
        clean = {}
        for word, coeff in (terms or {}).items():
            if not is_word(word):
                raise ValueError(f"`{word}` is not a word over A, B, C.")
            coeff = scalar_from(coeff)
            if not is_zero(coeff):
                clean[word] = coeff
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> 'NcPoly':
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> 'NcPoly':
        """:return: The zero polynomial."""
        return cls._raw({})

    @classmethod
    def one(cls) -> 'NcPoly':
        """:return: The unity `I`."""
        return cls._raw({'': ONE})

    @classmethod
    def word(cls, word: str, coeff=ONE) -> 'NcPoly':
        """:return: `coeff` times the single word `word`."""
        return cls({word: coeff})

    @classmethod
    def scalar(cls, coeff) -> 'NcPoly':
        """:return: `coeff` times `I`."""
        return cls({'': coeff})

    @classmethod
    def from_terms(
        cls,
        terms: typing.Iterable[typing.Tuple[str, typing.Any]]
    ) -> 'NcPoly':
        """:return: Sum of `coeff * word` over `(word, coeff)` pairs."""
        acc = {}
        for word, coeff in terms:
            coeff = scalar_from(coeff)
            acc[word] = acc[word] + coeff if word in acc else coeff
        return cls(acc)

    @property
    def support(self) -> typing.List[str]:
        """:return: Words with nonzero coefficient, in canonical order."""
        return sorted(self._terms, key=word_sort_key)

    def terms(self) -> typing.List[typing.Tuple[str, Scalar]]:
        """:return: `(word, coeff)` pairs in canonical order."""
        return [(word, self._terms[word]) for word in self.support]

    def items(self) -> typing.ItemsView:
        """:return: Unordered view of `(word, coeff)` pairs."""
        return self._terms.items()

    def coefficient(self, word: str) -> Scalar:
        """:return: Coefficient of `word`, zero if absent."""
        return self._terms.get(word, scalar_from(0))

    def is_zero(self) -> bool:
        """:return: `True` for the zero polynomial."""
        return not self._terms

    def is_scalar(self) -> bool:
        """:return: `True` if the support is contained in `{I}`."""
        return set(self._terms) <= {''}

    def filtration_degree(self) -> int:
        """:return: Maximal filtration degree over the support, 0 if zero."""
        return max((filtration_degree(w) for w in self._terms), default=0)

    def map_coefficients(self, func: typing.Callable) -> 'NcPoly':
        """:return: The polynomial with `func` applied to every coefficient."""
        return NcPoly({word: func(c) for word, c in self._terms.items()})

    def specialize(self, params) -> 'NcPoly':
        """
        Substitute concrete values for `m` and `b` in every coefficient.

        Example:
            >>> from twistlie.scalars import TwistParams, SYMBOL_M, SYMBOL_B
            >>> poly = NcPoly.from_terms([('C', SYMBOL_M / (SYMBOL_M - 1)),
            ...                           ('', SYMBOL_B - 1)])
            >>> print(poly.specialize(TwistParams.concrete(2, 1)))
            2*C

        :param params: Concrete :class:`TwistParams`.
        :raises DenominatorVanishes: if a coefficient has a pole at the
            point.
        """
        return self.map_coefficients(lambda coeff: specialize(coeff, params))

    def scale(self, coeff) -> 'NcPoly':
        """:return: `coeff` times this polynomial."""
        coeff = scalar_from(coeff)
        if is_zero(coeff):
            return NcPoly.zero()
        return NcPoly._raw({w: coeff * c for w, c in self._terms.items()})

    def __bool__(self):
        """:return: `False` for the zero polynomial."""
        return bool(self._terms)

    def __len__(self) -> int:
        """:return: Number of words in the support."""
        return len(self._terms)

    def __add__(self, other) -> 'NcPoly':
        """:return: Sum."""
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            if word in acc:
                total = acc[word] + coeff
                if is_zero(total):
                    del acc[word]
                else:
                    acc[word] = total
            else:
                acc[word] = coeff
        return NcPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> 'NcPoly':
        """:return: Additive inverse."""
        return NcPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> 'NcPoly':
        """:return: Difference."""
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'NcPoly':
        """:return: Difference with a scalar on the left."""
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> 'NcPoly':
        """:return: Product (concatenation extended bilinearly)."""
        if not isinstance(other, NcPoly):
            try:
                return self.scale(other)
            except (TypeError, ValueError):
                return NotImplemented
        acc = {}
        for left, c1 in self._terms.items():
            for right, c2 in other._terms.items():
                word = left + right
                coeff = c1 * c2
                acc[word] = acc[word] + coeff if word in acc else coeff
        return NcPoly._raw({w: c for w, c in acc.items() if not is_zero(c)})

    def __rmul__(self, other) -> 'NcPoly':
        """:return: Scalar multiple with the scalar on the left."""
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __pow__(self, exponent: int) -> 'NcPoly':
        """:return: Power with a nonnegative integer exponent."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("NcPoly exponents must be nonnegative integers.")
        result = NcPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        """:return: `True` if both have the same canonical map."""
        if not isinstance(other, NcPoly):
            other = _coerce(other)
            if other is NotImplemented:
                return False
        if self._terms.keys() != other._terms.keys():
            return False
        return all(scalar_equal(c, other._terms[w])
                   for w, c in self._terms.items())

    __hash__ = None

    def render(self) -> str:
        """
        Canonical text, parseable by :func:`twistlie.freealg.parse`.

        Example:
            >>> from twistlie.scalars import SYMBOL_M, SYMBOL_B
            >>> m, b = SYMBOL_M, SYMBOL_B
            >>> poly = NcPoly({'C': m / (m - 1), '': -b / (m - 1)})
            >>> poly.render()
            '(m/(m-1))*C - (b/(m-1))*I'

        """
        if not self._terms:
            return '0'
        return ''.join(render_term(coeff, render_word(word), index == 0)
                       for index, (word, coeff) in enumerate(self.terms()))

    def __str__(self) -> str:
        """:return: Canonical text."""
        return self.render()

    def __repr__(self) -> str:
        """:return: Formatted representation."""
        return f'NcPoly({self.render()})'


def _coerce(value) -> typing.Union[NcPoly, type(NotImplemented)]:
    if isinstance(value, NcPoly):
        return value
    try:
        return NcPoly.scalar(value)
    except (TypeError, ValueError):
        return NotImplemented


def bracket(left: NcPoly, right: NcPoly) -> NcPoly:
    """
    Commutator `[P, Q] = PQ - QP` in the free algebra.

    Example:
        >>> print(bracket(NcPoly.word('A'), NcPoly.word('B')))
        A*B - B*A

    """
    return left * right - right * left
