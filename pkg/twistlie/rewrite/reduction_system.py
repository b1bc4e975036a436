"""The reduction system of the twisted quotient algebra."""

import re
import typing

import numpy as np

from twistlie.freealg import NcPoly, parse
from twistlie.logger import logger
from twistlie.rewrite.reduction_units import ReductionUnit
from twistlie.rewrite.rules import Rule, BASE_RULES, BASE_LHS, EPSILON, \
    base_rhs, epsilon_rhs, epsilon_lhs
from twistlie.scalars import TwistParams

_IRREDUCIBLE = re.compile(r'C*A*|B*C*')

_FIRST_RULE = {
    ('A', 'B'): 'alpha',
    ('A', 'C'): 'beta',
    ('B', 'A'): 'gamma',
    ('C', 'B'): 'delta',
}


def matches_irreducible_pattern(word: str) -> bool:
    """
    :return: `True` if `word` reads `C^k A^l` or `B^l C^k`.

    Example:
        >>> matches_irreducible_pattern('CCAAA')
        True
        >>> matches_irreducible_pattern('ACA')
        False

    """
    return _IRREDUCIBLE.fullmatch(word) is not None


class Redex(typing.NamedTuple):
    """Occurrence of a rule left hand side inside a word."""

    position: int
    rule: Rule


class ReductionSystem(object):
    """
    Rewriting rules `alpha`, `beta`, `gamma`, `delta` and `epsilon(k)`.

    The rules `alpha: AB`, `beta: AC`, `gamma: BA`, `delta: CB` and
    `epsilon(k): B C^k A` never compete at one position, so the leftmost
    strategy is deterministic. Word normal forms are memoized per instance.

    Examples:
        >>> system = ReductionSystem()
        >>> print(system.normal_form(parse('A*B')))
        (m/(m-1))*C - (b/(m-1))*I
        >>> system.find_leftmost_redex('BCCA').rule.label
        'epsilon(2)'
        >>> system.quotient_equal(parse('A*B'), parse('m*B*A + b'))
        True

    Rule right hand sides can be swapped out, e.g. to confirm that checks
    notice a broken rule:

        >>> broken = ReductionSystem(overrides={'beta': 'C*A'})
        >>> print(broken.rule('beta'))
        beta: AC -> C*A

    """

    def __init__(
        self,
        params: typing.Optional[TwistParams] = None,
        overrides: typing.Optional[typing.Mapping[str, typing.Any]] = None
    ):
        """
        :class:`ReductionSystem` constructor.

        :param params: Twist parameters, symbolic when omitted.
        :param overrides: Replacement right hand sides of base rules keyed
            by rule name, either as :class:`NcPoly` or as text.
        :raises ValueError: if an override names an unknown rule or does
            not decrease the termination measure.
        """
        self._params = params or TwistParams.symbolic()
        self._overrides = dict(overrides or {})
        self._rules = {}
        for name in BASE_RULES:
            rhs = self._overrides.pop(name, None)
            if rhs is None:
                rhs = base_rhs(name, self._params)
            elif isinstance(rhs, str):
                rhs = parse(rhs, self._params)
            rule = Rule(name, BASE_LHS[name], rhs)
            if not rule.decreases_measure():
                raise ValueError(f"Override of `{name}` does not decrease "
                                 f"the termination measure.")
            self._rules[name] = rule
        if self._overrides:
            raise ValueError(f"Unknown rules overridden: "
                             f"{sorted(self._overrides)}.")
        self._overrides = {name: str(self._rules[name].rhs)
                           for name in (overrides or {})}
        if self._overrides:
            logger.info(f"Reduction system with overridden rules "
                        f"{sorted(self._overrides)}.")
        self._epsilon = {}
        self._memo = {}

    @property
    def params(self) -> TwistParams:
        """:return: Twist parameters of the system."""
        return self._params

    @property
    def overrides(self) -> typing.Dict[str, str]:
        """:return: Rendered right hand sides of overridden rules."""
        return dict(self._overrides)

    def rule(self, name: str, k: typing.Optional[int] = None) -> Rule:
        """
        Look up a rule.

        :param name: `alpha`, `beta`, `gamma`, `delta` or `epsilon`.
        :param k: Family index, required for `epsilon`.
        """
        if name == EPSILON:
            if k is None:
                raise ValueError("`epsilon` needs a family index k.")
            return self.epsilon(k)
        try:
            return self._rules[name]
        except KeyError:
            raise ValueError(f"Unknown rule `{name}`.")

    def epsilon(self, k: int) -> Rule:
        """:return: The rule `epsilon(k): B C^k A -> ...`."""
        if k not in self._epsilon:
            self._epsilon[k] = Rule(EPSILON, epsilon_lhs(k),
                                    epsilon_rhs(k, self._params), k)
        return self._epsilon[k]

    def rules(self, max_k: int) -> typing.List[Rule]:
        """:return: Base rules followed by `epsilon(1..max_k)`."""
        return [self._rules[name] for name in BASE_RULES] + \
            [self.epsilon(k) for k in range(1, max_k + 1)]

    def match_at(self, word: str, position: int) -> typing.Optional[Rule]:
        """:return: The rule whose left hand side starts at `position`."""
        pair = word[position:position + 2]
        if len(pair) < 2:
            return None
        name = _FIRST_RULE.get((pair[0], pair[1]))
        if name is not None:
            return self._rules[name]
        if pair == 'BC':
            end = position + 1
            while end < len(word) and word[end] == 'C':
                end += 1
            if end < len(word) and word[end] == 'A':
                return self.epsilon(end - position - 1)
        return None

    def find_leftmost_redex(self, word: str) -> typing.Optional[Redex]:
        """
        :return: The leftmost redex of `word`, `None` if it is irreducible.

        Example:
            >>> ReductionSystem().find_leftmost_redex('CAA') is None
            True

        """
        for position in range(len(word) - 1):
            rule = self.match_at(word, position)
            if rule is not None:
                return Redex(position, rule)
        return None

    def find_redexes(self, word: str) -> typing.List[Redex]:
        """:return: Every redex of `word`, left to right."""
        found = []
        for position in range(len(word) - 1):
            rule = self.match_at(word, position)
            if rule is not None:
                found.append(Redex(position, rule))
        return found

    @classmethod
    def unit_for(cls, word: str, redex: Redex) -> ReductionUnit:
        """:return: The reduction rewriting `redex` inside `word`."""
        end = redex.position + len(redex.rule.lhs)
        return ReductionUnit(word[:redex.position], redex.rule, word[end:])

    def is_irreducible(self, word: str) -> bool:
        """
        :return: `True` if no rule applies anywhere in `word`.

        Example:
            >>> system = ReductionSystem()
            >>> system.is_irreducible(''), system.is_irreducible('ACA')
            (True, False)

        """
        return self.find_leftmost_redex(word) is None

    @classmethod
    def reduce_at(cls, poly: NcPoly, left: str, rule: Rule,
                  right: str) -> NcPoly:
        """:return: `r_{L mu R}` applied to `poly`."""
        return ReductionUnit(left, rule, right).transform(poly)

    def word_normal_form(self, word: str) -> NcPoly:
        """
        Normal form of a single word.

        Leftmost reductions are expanded depth first without recursion;
        every intermediate word lands in the memo.

        :param word: Word over A, B, C.
        :return: Its normal form.
        """
        memo = self._memo
        if word in memo:
            return memo[word]
        stack = [word]
        while stack:
            current = stack[-1]
            if current in memo:
                stack.pop()
                continue
            redex = self.find_leftmost_redex(current)
            if redex is None:
                memo[current] = NcPoly.word(current)
                stack.pop()
                continue
            image = self.unit_for(current, redex).image()
            pending = [w for w, _ in image.items() if w not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[current] = sum((memo[w].scale(c) for w, c in image.items()),
                                NcPoly.zero())
            stack.pop()
        return memo[word]

    def normal_form(self, poly: NcPoly) -> NcPoly:
        """
        Normal form of a polynomial, term by term.

        The support of the result only holds words `C^k A^l` and `B^l C^k`.

        :param poly: Input polynomial.
        :return: Its normal form.
        """
        result = NcPoly.zero()
        for word, coeff in poly.items():
            result = result + self.word_normal_form(word).scale(coeff)
        return result

    def random_normal_form(
        self,
        poly: NcPoly,
        random_state: typing.Optional[np.random.RandomState] = None
    ) -> NcPoly:
        """
        Normal form reached by reducing randomly chosen redexes.

        :param poly: Input polynomial.
        :param random_state: Source of randomness.
        :return: Its normal form, which equals :meth:`normal_form`.
        """
        random_state = random_state or np.random.RandomState()
        while True:
            reducible = [(word, self.find_redexes(word))
                         for word in poly.support]
            reducible = [pair for pair in reducible if pair[1]]
            if not reducible:
                return poly
            word, redexes = reducible[random_state.randint(len(reducible))]
            redex = redexes[random_state.randint(len(redexes))]
            poly = self.unit_for(word, redex).transform(poly)

    def reduction_steps(
        self,
        poly: NcPoly
    ) -> typing.Tuple[typing.List[ReductionUnit], NcPoly]:
        """
        Explicit leftmost reduction sequence of `poly`.

        Each step reduces the first reducible word in canonical order at
        its leftmost redex.

        Example:
            >>> system = ReductionSystem()
            >>> steps, nf = system.reduction_steps(parse('A*C'))
            >>> [step.label for step in steps], str(nf)
            (['r_{beta}'], 'm*C*A')

        :return: The reductions applied, in order, and the normal form.
        """
        steps = []
        while True:
            for word in poly.support:
                redex = self.find_leftmost_redex(word)
                if redex is not None:
                    unit = self.unit_for(word, redex)
                    steps.append(unit)
                    poly = unit.transform(poly)
                    break
            else:
                return steps, poly

    def quotient_equal(self, left: NcPoly, right: NcPoly) -> bool:
        """:return: `True` if both sides have the same normal form."""
        return self.normal_form(left - right).is_zero()

    def multiply(self, left: NcPoly, right: NcPoly) -> NcPoly:
        """:return: Normal form of the product `left * right`."""
        return self.normal_form(left * right)

    def __repr__(self) -> str:
        """:return: Formatted representation."""
        return f'ReductionSystem({self._params!r})'
