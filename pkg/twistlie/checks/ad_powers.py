"""Iterated brackets with powers of `C`."""

import typing

from tqdm import tqdm

from twistlie.checks.check_report import CheckResult
from twistlie.engine.base_check import BaseCheck
from twistlie.engine.param_table import ParamTable
from twistlie.freealg import NcPoly, bracket
from twistlie.lie import ad_power
from twistlie.rewrite import ReductionSystem

_A, _B, _C = NcPoly.word('A'), NcPoly.word('B'), NcPoly.word('C')


def _c(k: int, coeff=1) -> NcPoly:
    return NcPoly.word('C' * k, coeff)


class AdPowersCheck(BaseCheck):
    """
    Brackets that build powers of `C` and the words `C^k A^n`, `B^n C^k`.

    For `1 <= k <= k_max` and `1 <= n <= l_max`:

    * `(ad C)^k (A) = (1-m)^k C^k A`;
    * `(1-m^(k+1)) C^(k+1)
      = (1-m^k) b C^k - m^k (1-m)^(1-k) [B, (ad C)^k (A)]`;
    * `(ad A)^n (C^k) = (m^k-1)^n C^k A^n`;
    * `(ad B)^n (C^k) = (1-m^k)^n B^n C^k`.

    Example:
        >>> from twistlie.engine import ParamTable, Param
        >>> params = ParamTable()
        >>> params.add(Param('k_max', 2))
        >>> params.add(Param('l_max', 2))
        >>> results = AdPowersCheck()(ReductionSystem(), params)
        >>> len(results), all(r.passed for r in results)
        (12, True)

    """

    ALIAS = 'ad_powers'
    REQUIRES = ('k_max', 'l_max')

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run all four families."""
        m, b = system.params.m_scalar, system.params.b_scalar
        powers = range(1, params['k_max'] + 1)
        if verbose:
            powers = tqdm(powers, desc='Ad powers')
        results = []
        for k in powers:
            ad_c = ad_power(_C, k, _A, system)
            results.append(CheckResult.compare(
                'adCA', {'k': k},
                ad_c - NcPoly.word('C' * k + 'A', (1 - m) ** k)))
            rhs = _c(k, (1 - m ** k) * b) - system.normal_form(
                bracket(_B, ad_c)).scale(m ** k * (1 - m) ** (1 - k))
            results.append(CheckResult.compare(
                'powerofC', {'k': k},
                system.normal_form(_c(k + 1, 1 - m ** (k + 1)) - rhs)))
            for n in range(1, params['l_max'] + 1):
                results.append(CheckResult.compare(
                    'adApowerC', {'k': k, 'n': n},
                    ad_power(_A, n, _c(k), system) -
                    NcPoly.word('C' * k + 'A' * n, (m ** k - 1) ** n)))
                results.append(CheckResult.compare(
                    'adBpowerC', {'k': k, 'n': n},
                    ad_power(_B, n, _c(k), system) -
                    NcPoly.word('B' * n + 'C' * k, (1 - m ** k) ** n)))
        return results
