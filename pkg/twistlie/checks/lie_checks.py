"""Lie subalgebra generated by `A` and `B`: basis, membership, witnesses."""

import abc
import itertools
import typing

import numpy as np
from tqdm import tqdm

from twistlie.checks.check_report import CheckResult
from twistlie.engine.base_check import BaseCheck
from twistlie.engine.exceptions import InvalidParams, RootOfUnityParam
from twistlie.engine.param_table import ParamTable
from twistlie.freealg import NcPoly, bracket, parse, render_word
from twistlie.lie import decompose, expand, is_lie_polynomial, \
    lie_closure, random_element, random_lie_polynomial, witness
from twistlie.logger import logger
from twistlie.rewrite import ReductionSystem
from twistlie.scalars import TwistParams
from twistlie.utils import EchelonSpan


def lie_basis_words(max_exp: int) -> typing.List[str]:
    """
    `A`, `B`, `C^k`, `C^k A^n` and `B^n C^k` with `1 <= k, n <= max_exp`.

    Example:
        >>> len(lie_basis_words(2))
        12

    """
    words = ['A', 'B']
    for k in range(1, max_exp + 1):
        words.append('C' * k)
        for n in range(1, max_exp + 1):
            words.extend(['C' * k + 'A' * n, 'B' * n + 'C' * k])
    return words


class LieCheck(BaseCheck):
    """
    Base class of checks that need the Lie subalgebra characterization.

    When `m` is a root of unity the check is skipped and returns no
    results.
    """

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run :meth:`run` if the slope admits Lie operations."""
        if not system.params.lie_ok:
            logger.warning(f"Skipping {self.ALIAS}: m={system.params.m} is "
                           f"a root of unity.")
            return []
        return self.run(system, params, verbose)

    @abc.abstractmethod
    def run(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the check on a system with a slope that is no root of unity."""


class BasisBracketCheck(LieCheck):
    """
    Brackets of pairs of Lie basis words with exponents up to `bracket_exp`
    have no complement part.
    """

    ALIAS = 'basis_bracket_closure'
    REQUIRES = ('bracket_exp',)

    def run(self, system, params, verbose=0):
        """Bracket every unordered pair of basis words."""
        words = lie_basis_words(params['bracket_exp'])
        pairs = list(itertools.combinations(words, 2))
        if verbose:
            pairs = tqdm(pairs, desc='Basis brackets')
        results = []
        for u, v in pairs:
            parts = decompose(bracket(NcPoly.word(u), NcPoly.word(v)), system)
            record = {'u': render_word(u), 'v': render_word(v)}
            if parts.is_lie:
                results.append(CheckResult('basis_bracket', record, True))
            else:
                results.append(CheckResult(
                    'basis_bracket', record, False,
                    f'complement part {parts.complement_part}'))
        return results


class BracketShapeCheck(LieCheck):
    """
    `[C^u A^v, B^y C^x]` only involves `C^k`, `C^k A^n` and `B^n C^k` with
    `k, n >= 1`, for `1 <= u, v, x, y <= shape_exp`.

    Example:
        >>> from twistlie.engine import ParamTable, Param
        >>> params = ParamTable()
        >>> params.add(Param('shape_exp', 1))
        >>> [r.passed for r in BracketShapeCheck()(ReductionSystem(), params)]
        [True]

    """

    ALIAS = 'bracket_shape'
    REQUIRES = ('shape_exp',)

    def run(self, system, params, verbose=0):
        """Check the support of each bracket."""
        exponents = range(1, params['shape_exp'] + 1)
        jobs = list(itertools.product(exponents, repeat=4))
        if verbose:
            jobs = tqdm(jobs, desc='Bracket shapes')
        results = []
        for u, v, x, y in jobs:
            left = NcPoly.word('C' * u + 'A' * v)
            right = NcPoly.word('B' * y + 'C' * x)
            nf = system.normal_form(bracket(left, right))
            stray = [w for w in nf.support if 'C' not in w]
            record = {'u': u, 'v': v, 'x': x, 'y': y}
            if stray:
                results.append(CheckResult(
                    'bracket_shape', record, False,
                    f'normal form {nf} involves '
                    f'{[render_word(w) for w in stray]}'))
            else:
                results.append(CheckResult('bracket_shape', record, True))
        return results


class ClosureCheck(LieCheck):
    """Bracket closure of `{A, B}` spans exactly the Lie basis words."""

    ALIAS = 'lie_closure'
    REQUIRES = ('max_deg',)

    def run(self, system, params, verbose=0):
        """Compute the closure and compare spans."""
        report = lie_closure(system, params['max_deg'], verbose=verbose)
        record = {'max_deg': report.max_degree}
        if report.spans_equal:
            return [CheckResult('lie_closure', record, True,
                                note=f'dimension {report.dimension}')]
        return [CheckResult(
            'lie_closure', record, False,
            f'closure has dimension {report.dimension}, the Lie basis '
            f'words {len(report.predicted_basis)}')]


class MembershipCheck(LieCheck):
    """
    :func:`twistlie.lie.is_lie_polynomial` agrees with membership in the
    span computed by bracket closure on random elements.
    """

    ALIAS = 'lie_membership'
    REQUIRES = ('max_deg', 'membership_samples', 'seed')

    def run(self, system, params, verbose=0):
        """Compare both oracles."""
        max_deg = params['max_deg']
        span = EchelonSpan.of(lie_closure(system, max_deg).computed_basis)
        random_state = np.random.RandomState(params['seed'])
        samples = range(params['membership_samples'])
        if verbose:
            samples = tqdm(samples, desc='Lie membership')
        record = {'samples': params['membership_samples'],
                  'max_deg': max_deg, 'seed': params['seed']}
        verdicts = {True: 0, False: 0}
        for _ in samples:
            element = random_element(system, max_deg, random_state)
            claimed = is_lie_polynomial(element, system)
            actual = span.contains(system.normal_form(element))
            if claimed != actual:
                return [CheckResult(
                    'lie_membership', record, False,
                    f'{element}: decomposition says {claimed}, closure '
                    f'span says {actual}')]
            verdicts[actual] += 1
        return [CheckResult(
            'lie_membership', record, True,
            note=f'{verdicts[True]} Lie, {verdicts[False]} not Lie')]


class WitnessCheck(LieCheck):
    """
    Bracket witnesses of random Lie polynomials expand back to them, also
    after rendering and parsing.
    """

    ALIAS = 'witness_soundness'
    REQUIRES = ('max_deg', 'witness_samples', 'seed')

    def run(self, system, params, verbose=0):
        """Build and expand witnesses."""
        random_state = np.random.RandomState(params['seed'])
        samples = range(params['witness_samples'])
        if verbose:
            samples = tqdm(samples, desc='Witnesses')
        record = {'samples': params['witness_samples'],
                  'max_deg': params['max_deg'], 'seed': params['seed']}
        for _ in samples:
            poly = random_lie_polynomial(system, params['max_deg'],
                                         random_state)
            expr = witness(poly, system)
            lie_part = decompose(poly, system).lie_part
            reparsed = system.normal_form(parse(str(expr), system.params))
            if expand(expr, system) != lie_part or reparsed != lie_part:
                return [CheckResult(
                    'witness_soundness', record, False,
                    f'{expr} does not expand to {lie_part}')]
        return [CheckResult('witness_soundness', record, True)]


class ParamGuardCheck(BaseCheck):
    """
    Slopes 0 and 1 are rejected outright; the slope -1 is rejected by Lie
    operations only.

    Runs independently of the system under test.
    """

    ALIAS = 'param_guard'
    REQUIRES = ('max_deg',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Probe the guards."""
        results = []
        for m in (0, 1):
            try:
                TwistParams.concrete(m, 1)
            except InvalidParams:
                results.append(CheckResult('guard_slope', {'m': m}, True))
            else:
                results.append(CheckResult('guard_slope', {'m': m}, False,
                                           f'm={m} was accepted'))
        unity = ReductionSystem(TwistParams.concrete(-1, 1))
        element = parse('A*B', unity.params)
        operations = {
            'decompose': lambda: decompose(element, unity),
            'witness': lambda: witness(NcPoly.word('A'), unity),
            'lie_closure': lambda: lie_closure(unity, params['max_deg']),
        }
        for name, operation in operations.items():
            try:
                operation()
            except RootOfUnityParam:
                results.append(CheckResult('guard_root_of_unity',
                                           {'operation': name}, True))
            else:
                results.append(CheckResult(
                    'guard_root_of_unity', {'operation': name}, False,
                    f'{name} accepted m=-1'))
        nf = unity.normal_form(element)
        results.append(CheckResult.compare(
            'guard_root_of_unity', {'operation': 'normal_form'},
            nf - parse('(1/2)*C + (1/2)*I', unity.params)))
        return results
