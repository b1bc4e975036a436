"""Termination, basis, strategy independence and specialization of the
reduction system."""

import typing

import numpy as np
from tqdm import tqdm

from twistlie.checks.check_report import CheckResult
from twistlie.engine.base_check import BaseCheck
from twistlie.engine.param_table import ParamTable
from twistlie.freealg import NcPoly, all_words, render_word
from twistlie.logger import logger
from twistlie.rewrite import ReductionSystem, measure, \
    matches_irreducible_pattern
from twistlie.scalars import TwistParams
from twistlie.utils import random_poly


class RuleMeasureCheck(BaseCheck):
    """Every rule with `epsilon(k)`, `k <= max_k`, decreases the measure."""

    ALIAS = 'rule_measure'
    REQUIRES = ('max_k',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the check."""
        results = []
        for rule in system.rules(params['max_k']):
            bound = measure(rule.lhs)
            offending = [w for w in rule.rhs.support if measure(w) >= bound]
            record = {'rule': rule.label}
            if offending:
                results.append(CheckResult(
                    'rule_measure', record, False,
                    f'{rule}: {[render_word(w) for w in offending]} do not '
                    f'decrease {bound}'))
            else:
                results.append(CheckResult('rule_measure', record, True))
        return results


class NormalFormBasisCheck(BaseCheck):
    """
    Normal forms of all words up to `basis_length` letters.

    The support of every normal form reads `C^k A^n` or `B^n C^k`, the
    irreducible words are exactly the words of that shape, and they are
    fixed by the normal form. One result per word length.

    Example:
        >>> from twistlie.engine import ParamTable, Param
        >>> params = ParamTable()
        >>> params.add(Param('basis_length', 3))
        >>> results = NormalFormBasisCheck()(ReductionSystem(), params)
        >>> [(r.params['length'], r.passed) for r in results]
        [(0, True), (1, True), (2, True), (3, True)]

    """

    ALIAS = 'normal_form_basis'
    REQUIRES = ('basis_length',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the check."""
        max_length = params['basis_length']
        failures = {length: None for length in range(max_length + 1)}
        counts = dict.fromkeys(failures, 0)
        words = all_words(max_length)
        if verbose:
            words = tqdm(words, total=(3 ** (max_length + 1) - 1) // 2,
                         desc='Normal form basis')
        for word in words:
            counts[len(word)] += 1
            if failures[len(word)] is None:
                failures[len(word)] = self._inspect(word, system)
        return [CheckResult('normal_form_basis',
                            {'length': length, 'words': counts[length]},
                            failures[length] is None, failures[length])
                for length in failures]

    @classmethod
    def _inspect(cls, word: str, system: ReductionSystem) \
            -> typing.Optional[str]:
        irreducible = system.is_irreducible(word)
        if irreducible != matches_irreducible_pattern(word):
            return f'{render_word(word)}: irreducible={irreducible} ' \
                f'disagrees with the C^k A^n / B^n C^k pattern'
        nf = system.normal_form(NcPoly.word(word))
        if irreducible and nf != NcPoly.word(word):
            return f'irreducible {render_word(word)} reduces to {nf}'
        stray = [w for w in nf.support if not matches_irreducible_pattern(w)]
        if stray:
            return f'normal form of {render_word(word)} is {nf}'
        return None


class ConfluenceCheck(BaseCheck):
    """
    Leftmost and randomly ordered reductions reach the same normal form.

    `trials` random polynomials over words of at most `max_word_length`
    letters are drawn from a generator seeded with `seed`.
    """

    ALIAS = 'confluence'
    REQUIRES = ('trials', 'max_word_length', 'seed')

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the check."""
        random_state = np.random.RandomState(params['seed'])
        trials = range(params['trials'])
        if verbose:
            trials = tqdm(trials, desc='Confluence')
        record = {'trials': params['trials'],
                  'max_word_length': params['max_word_length'],
                  'seed': params['seed']}
        for trial in trials:
            poly = random_poly(system.params, random_state,
                               max_length=params['max_word_length'])
            leftmost = system.normal_form(poly)
            randomized = system.random_normal_form(poly, random_state)
            if leftmost != randomized:
                return [CheckResult(
                    'confluence', record, False,
                    f'trial {trial}: {poly} reduces to {leftmost} '
                    f'(leftmost) and {randomized} (random order)')]
        return [CheckResult('confluence', record, True)]


class MultiplicativityCheck(BaseCheck):
    """
    The normal form of a product only depends on the normal forms of its
    factors.

    Draws `trials // 10` pairs (at least one) of random polynomials over
    words of at most `max_word_length // 2` letters.
    """

    ALIAS = 'multiplicativity'
    REQUIRES = ('trials', 'max_word_length', 'seed')

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the check."""
        random_state = np.random.RandomState(params['seed'])
        samples = max(1, params['trials'] // 10)
        max_length = max(1, params['max_word_length'] // 2)
        record = {'samples': samples, 'max_word_length': max_length,
                  'seed': params['seed']}
        pairs = range(samples)
        if verbose:
            pairs = tqdm(pairs, desc='Multiplicativity')
        for _ in pairs:
            left = random_poly(system.params, random_state, max_length)
            right = random_poly(system.params, random_state, max_length)
            direct = system.multiply(left, right)
            staged = system.multiply(system.normal_form(left),
                                     system.normal_form(right))
            if direct != staged:
                return [CheckResult(
                    'multiplicativity', record, False,
                    f'NF(({left})*({right})) = {direct} but the product of '
                    f'normal forms reduces to {staged}')]
        return [CheckResult('multiplicativity', record, True)]


class SpecializationCheck(BaseCheck):
    """
    Reduction commutes with substituting the concrete `m` and `b`.

    Random polynomials with coefficients in `Q(m, b)` are reduced by the
    symbolic system and specialized, then compared with the normal form
    of their specialization. The check only applies to concrete systems
    whose slope is no root of unity, where no coefficient of a normal
    form has a pole.
    """

    ALIAS = 'specialization'
    REQUIRES = ('trials', 'max_word_length', 'seed')

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the check."""
        twist = system.params
        if twist.is_symbolic or not twist.lie_ok:
            logger.warning(f"Skipping {self.ALIAS}: needs a concrete slope "
                           f"that is no root of unity.")
            return []
        symbolic = ReductionSystem(TwistParams.symbolic())
        random_state = np.random.RandomState(params['seed'])
        samples = max(1, params['trials'] // 10)
        record = {'samples': samples,
                  'max_word_length': params['max_word_length'],
                  'seed': params['seed']}
        polys = range(samples)
        if verbose:
            polys = tqdm(polys, desc='Specialization')
        for _ in polys:
            poly = random_poly(symbolic.params, random_state,
                               params['max_word_length'])
            reduced_first = symbolic.normal_form(poly).specialize(twist)
            specialized_first = system.normal_form(poly.specialize(twist))
            if reduced_first != specialized_first:
                return [CheckResult(
                    'specialization', record, False,
                    f'{poly} reduces and specializes to {reduced_first} '
                    f'but specializes and reduces to {specialized_first}')]
        return [CheckResult('specialization', record, True)]
