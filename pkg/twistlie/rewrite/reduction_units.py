"""Reductions as composable transform units."""

import abc
import typing

from twistlie.freealg import NcPoly, render_word
from twistlie.rewrite.rules import Rule
from twistlie.scalars import is_zero


class BaseUnit(metaclass=abc.ABCMeta):
    """A linear map of the free algebra applied by :meth:`transform`."""

    @abc.abstractmethod
    def transform(self, poly: NcPoly) -> NcPoly:
        """Abstract base method, need to be implemented in subclass."""

    @property
    @abc.abstractmethod
    def label(self) -> str:
        """Short name of the unit used in traces."""


class IdentityUnit(BaseUnit):
    """
    The identity map.

    Example:
        >>> poly = NcPoly.word('AB')
        >>> IdentityUnit().transform(poly) == poly
        True

    """

    def transform(self, poly: NcPoly) -> NcPoly:
        """:return: `poly` unchanged."""
        return poly

    @property
    def label(self) -> str:
        """:return: `id`."""
        return 'id'

    def __repr__(self) -> str:
        """:return: Formatted representation."""
        return 'IdentityUnit()'


class ReductionUnit(BaseUnit):
    """
    The reduction `r_{L mu R}`.

    It sends the basis word `L W R` to `L f R`, where `W -> f` is the rule,
    and fixes every other word.

    Example:
        >>> from twistlie.scalars import TwistParams
        >>> from twistlie.rewrite.rules import Rule, base_rhs
        >>> params = TwistParams.symbolic()
        >>> beta = Rule('beta', 'AC', base_rhs('beta', params))
        >>> unit = ReductionUnit('', beta, 'C')
        >>> unit.label
        'r_{beta C}'
        >>> print(unit.transform(NcPoly.word('ACC')))
        m*C*A*C
        >>> print(unit.transform(NcPoly.word('AC')))
        A*C

    """

    def __init__(self, left: str, rule: Rule, right: str):
        """
        :class:`ReductionUnit` constructor.

        :param left: Word `L` standing left of the rule.
        :param rule: The rule applied.
        :param right: Word `R` standing right of the rule.
        """
        self._left = left
        self._rule = rule
        self._right = right

    @property
    def left(self) -> str:
        """:return: Left context `L`."""
        return self._left

    @property
    def rule(self) -> Rule:
        """:return: The rule applied."""
        return self._rule

    @property
    def right(self) -> str:
        """:return: Right context `R`."""
        return self._right

    @property
    def word(self) -> str:
        """:return: The only word moved by the unit, `L W R`."""
        return self._left + self._rule.lhs + self._right

    def image(self) -> NcPoly:
        """:return: `L f R`, the image of :attr:`word`."""
        return NcPoly.word(self._left) * self._rule.rhs * \
            NcPoly.word(self._right)

    def transform(self, poly: NcPoly) -> NcPoly:
        """
        Apply the reduction to `poly`.

        :param poly: Input polynomial.
        :return: `poly` with its :attr:`word` term replaced.
        """
        word = self.word
        coeff = poly.coefficient(word)
        if is_zero(coeff):
            return poly
        return poly - NcPoly.word(word, coeff) + self.image().scale(coeff)

    @property
    def label(self) -> str:
        """:return: `r_{L mu R}` with empty contexts left out."""
        parts = [self._rule.label]
        if self._left:
            parts.insert(0, render_word(self._left))
        if self._right:
            parts.append(render_word(self._right))
        return 'r_{' + ' '.join(parts) + '}'

    def as_tuple(self) -> typing.Tuple[str, str, str]:
        """:return: `(L, rule label, R)`."""
        return self._left, self._rule.label, self._right

    def __eq__(self, other):
        """:return: `True` for the same contexts and rule."""
        return isinstance(other, ReductionUnit) and \
            self.as_tuple() == other.as_tuple()

    def __hash__(self):
        """:return: Hash of :meth:`as_tuple`."""
        return hash(self.as_tuple())

    def __repr__(self) -> str:
        """:return: Formatted representation."""
        return f'ReductionUnit({self._left!r}, {self._rule.label}, ' \
               f'{self._right!r})'


class ReductionChain(BaseUnit):
    """
    A composite of reductions, applied in list order.

    Nested chains are flattened and identity units dropped, so a chain
    is a plain sequence of :class:`ReductionUnit`. The label is written
    in composition order, the unit applied last leftmost.

    Example:
        >>> from twistlie.scalars import TwistParams
        >>> from twistlie.rewrite.rules import Rule, base_rhs
        >>> params = TwistParams.symbolic()
        >>> beta = Rule('beta', 'AC', base_rhs('beta', params))
        >>> chain = ReductionChain([ReductionUnit('', beta, 'C'),
        ...                         IdentityUnit(),
        ...                         ReductionChain([ReductionUnit('C', beta,
        ...                                                       '')])])
        >>> len(chain), chain.label
        (2, 'r_{C beta} o r_{beta C}')
        >>> print(chain.transform(NcPoly.word('ACC')))
        (m^2)*C^2*A
        >>> ReductionChain([IdentityUnit()]).label
        'id'

    """

    def __init__(self, units: typing.Iterable[BaseUnit]):
        """:param units: Units in application order."""
        self._units: typing.List[ReductionUnit] = []
        for unit in units:
            if isinstance(unit, ReductionChain):
                self._units.extend(unit)
            elif not isinstance(unit, IdentityUnit):
                self._units.append(unit)

    def transform(self, poly: NcPoly) -> NcPoly:
        """:return: `poly` after every unit of the chain."""
        for unit in self._units:
            poly = unit.transform(poly)
        return poly

    @property
    def label(self) -> str:
        """:return: `r_2 o r_1` style label, `id` for the empty chain."""
        if not self._units:
            return 'id'
        return ' o '.join(unit.label for unit in reversed(self._units))

    def __iter__(self) -> typing.Iterator[ReductionUnit]:
        """:return: Iterator over the units in application order."""
        return iter(self._units)

    def __len__(self) -> int:
        """:return: Number of reductions."""
        return len(self._units)

    def __repr__(self) -> str:
        """:return: Formatted representation."""
        return f'ReductionChain({self._units!r})'
