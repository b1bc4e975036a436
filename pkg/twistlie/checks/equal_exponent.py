"""Products `A^n B^n` and `B^n A^n` as polynomials in `C`."""

import typing

from tqdm import tqdm

from twistlie.checks.check_report import CheckResult
from twistlie.engine.base_check import BaseCheck
from twistlie.engine.param_table import ParamTable
from twistlie.freealg import NcPoly
from twistlie.rewrite import ReductionSystem


def c_product(
    exponents: typing.Iterable[int],
    system: ReductionSystem
) -> NcPoly:
    """
    The product of `m^i C - b I` over `exponents`.

    Example:
        >>> print(c_product([1, 2], ReductionSystem()))
        (m^3)*C^2 - (m^2*b+m*b)*C + (b^2)*I

    """
    params = system.params
    result = NcPoly.one()
    for i in exponents:
        result = result * (NcPoly.word('C', params.m_scalar ** i) -
                           NcPoly.scalar(params.b_scalar))
    return result


def _is_c_power(word: str) -> bool:
    return bool(word) and set(word) == {'C'}


class EqualExponentCheck(BaseCheck):
    """
    `(m-1)^n A^n B^n` and `(m-1)^n B^n A^n` for `1 <= n <= n_max`.

    Both products reduce to polynomials in `C`: the first to the product
    of `m^i C - b I` for `i = 1..n`, the second to the product of
    `m^(-i) C - b I` for `i = 0..n-1`. Their coefficient of `I` is
    `(-b)^n` and every other word is a positive power of `C`.
    """

    ALIAS = 'equal_exponent'
    REQUIRES = ('n_max',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the check for every `n`."""
        m, b = system.params.m_scalar, system.params.b_scalar
        exponents = range(1, params['n_max'] + 1)
        if verbose:
            exponents = tqdm(exponents, desc='Equal exponents')
        results = []
        for n in exponents:
            scale = (m - 1) ** n
            ab = system.normal_form(
                NcPoly.word('A' * n + 'B' * n, scale))
            ba = system.normal_form(
                NcPoly.word('B' * n + 'A' * n, scale))
            results.append(CheckResult.compare(
                'equal_AB', {'n': n},
                ab - c_product(range(1, n + 1), system)))
            results.append(CheckResult.compare(
                'equal_BA', {'n': n},
                ba - c_product(range(0, -n, -1), system)))
            for name, poly in (('shape_AB', ab), ('shape_BA', ba)):
                results.append(self._shape(name, n, poly, b))
        return results

    @classmethod
    def _shape(cls, name: str, n: int, poly: NcPoly, b) -> CheckResult:
        constant = NcPoly.scalar(poly.coefficient('') - (-b) ** n)
        stray = [w for w in poly.support if w and not _is_c_power(w)]
        if constant.is_zero() and not stray:
            return CheckResult(name, {'n': n}, True)
        return CheckResult(
            name, {'n': n}, False,
            f'normal form {poly}: I-coefficient minus (-b)^n is '
            f'{constant}, words outside C^k: {stray}')
