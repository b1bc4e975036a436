"""Ambiguities of the reduction system and their resolutions."""

import typing

from tqdm import tqdm

from twistlie.checks.check_report import CheckResult
from twistlie.diamond import closed_form_ambiguities, \
    find_overlap_ambiguities, find_inclusion_ambiguities, resolve, \
    verify_resolution_table, compose_ab
from twistlie.engine.base_check import BaseCheck
from twistlie.engine.exceptions import NotResolvable
from twistlie.engine.param_table import ParamTable
from twistlie.freealg import NcPoly
from twistlie.rewrite import ReductionSystem


def _ambiguity_params(ambiguity) -> typing.Dict[str, int]:
    return {} if ambiguity.k is None else {'k': ambiguity.k}


class AmbiguityCatalogueCheck(BaseCheck):
    """
    Brute-force search finds exactly the catalogued overlaps and no
    inclusion.

    Example:
        >>> from twistlie.engine import ParamTable, Param
        >>> params = ParamTable()
        >>> params.add(Param('max_k', 3))
        >>> results = AmbiguityCatalogueCheck()(ReductionSystem(), params)
        >>> [(r.name, r.passed) for r in results]
        [('inclusions_empty', True), ('overlaps_catalogued', True)]

    """

    ALIAS = 'ambiguity_catalogue'
    REQUIRES = ('max_k',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the check."""
        max_k = params['max_k']
        record = {'max_k': max_k}
        catalogue = {a.key for a in closed_form_ambiguities(system, max_k)}
        found = {a.key for a in find_overlap_ambiguities(system, max_k)}
        results = []
        if found == catalogue:
            results.append(CheckResult('overlaps_catalogued', record, True))
        else:
            results.append(CheckResult(
                'overlaps_catalogued', record, False,
                f'uncatalogued: {sorted(found - catalogue)}, '
                f'missing: {sorted(catalogue - found)}'))
        inclusions = find_inclusion_ambiguities(system, max_k)
        if inclusions:
            results.append(CheckResult(
                'inclusions_empty', record, False,
                f'{len(inclusions)} inclusions, first: '
                f'{inclusions[0].label}'))
        else:
            results.append(CheckResult('inclusions_empty', record, True))
        return results


class ResolvabilityCheck(BaseCheck):
    """Every catalogued ambiguity up to `max_k` is resolvable."""

    ALIAS = 'resolvability'
    REQUIRES = ('max_k',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Resolve each ambiguity."""
        ambiguities = closed_form_ambiguities(system, params['max_k'])
        if verbose:
            ambiguities = tqdm(ambiguities, desc='Resolving ambiguities')
        results = []
        for ambiguity in ambiguities:
            record = _ambiguity_params(ambiguity)
            try:
                resolve(ambiguity, system)
            except NotResolvable as error:
                results.append(CheckResult(
                    ambiguity.name, record, False,
                    f'f_mu R reduces to {error.lhs}, '
                    f'L f_nu reduces to {error.rhs}'))
            else:
                results.append(CheckResult(ambiguity.name, record, True))
        return results


class ResolutionTableCheck(BaseCheck):
    """
    The tabulated reductions `lambda`, `rho` of every catalogued ambiguity
    up to `table_k` lead both sides to their common normal form.
    """

    ALIAS = 'resolution_table'
    REQUIRES = ('table_k',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Replay the table."""
        results = []
        for row in verify_resolution_table(system, params['table_k'], verbose):
            ambiguity = row.ambiguity
            name = f'table_{ambiguity.name}'
            record = _ambiguity_params(ambiguity)
            nf = system.normal_form(ambiguity.lhs_start())
            if row.passed and row.lhs == nf:
                results.append(CheckResult(name, record, True))
            else:
                results.append(CheckResult(
                    name, record, False,
                    f'{row.printed_lambda} gives {row.lhs}, '
                    f'{row.printed_rho} gives {row.rhs}, '
                    f'normal form {nf}'))
        return results


class CompositionCheck(BaseCheck):
    """
    The compositions `a_k`, `b_k` on the words they are built for and on
    the words they leave alone, for `1 <= k, n <= max_exp`.

    Example:
        >>> from twistlie.engine import ParamTable, Param
        >>> params = ParamTable()
        >>> params.add(Param('max_exp', 2))
        >>> results = CompositionCheck()(ReductionSystem(), params)
        >>> len(results), all(r.passed for r in results)
        (16, True)

    """

    ALIAS = 'compositions'
    REQUIRES = ('max_exp',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the four families."""
        m = system.params.m_scalar
        powers = range(1, params['max_exp'] + 1)
        if verbose:
            powers = tqdm(powers, desc='Compositions')
        results = []
        for k in powers:
            for n in range(1, params['max_exp'] + 1):
                record = {'k': k, 'n': n}
                a_word, b_word = NcPoly.word('A' + 'C' * n), \
                    NcPoly.word('C' * n + 'B')
                if n == k:
                    a_expected = NcPoly.word('C' * k + 'A', m ** k)
                    b_expected = NcPoly.word('B' + 'C' * k, m ** k)
                else:
                    a_expected, b_expected = a_word, b_word
                fixed_a = NcPoly.word('C' * n + 'A')
                fixed_b = NcPoly.word('B' + 'C' * n)
                results.extend([
                    CheckResult.compare(
                        'a_k_move', record,
                        compose_ab('a', k, a_word, system) - a_expected),
                    CheckResult.compare(
                        'b_k_move', record,
                        compose_ab('b', k, b_word, system) - b_expected),
                    CheckResult.compare(
                        'a_k_fix', record,
                        compose_ab('a', k, fixed_a, system) - fixed_a),
                    CheckResult.compare(
                        'b_k_fix', record,
                        compose_ab('b', k, fixed_b, system) - fixed_b),
                ])
        return results
