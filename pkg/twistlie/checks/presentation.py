"""
Equality of the ideal of the defining relation and the ideal of the rules.

The defining relation is generated by

* `zeta1 = AB - m BA - b I`,
* `zeta2 = C - AB + BA`,

and the reduction rules by

* `xi1 = AB - (m C - b I)/(m-1)`,
* `xi2 = AC - m CA`,
* `xi3 = BA - (C - b I)/(m-1)`,
* `xi4 = CB - m BC`,
* `xi5(k) = B C^k A - (C^(k+1) - b C^k)/(m^k (m-1))`.

Every computation here happens in the free algebra; nothing is reduced.
"""

import itertools
import typing

from tqdm import tqdm

from twistlie.checks.check_report import CheckResult
from twistlie.engine.base_check import BaseCheck
from twistlie.engine.param_table import ParamTable
from twistlie.freealg import NcPoly, bracket, render_term
from twistlie.rewrite import ReductionSystem
from twistlie.scalars import TwistParams, scalar_inv
from twistlie.utils import EchelonSpan

Generators = typing.Dict[str, NcPoly]

_MULTIPLIERS = ('', 'A', 'B', 'C')


def _w(word: str, coeff=1) -> NcPoly:
    return NcPoly.word(word, coeff)


def relation_generators(params: TwistParams) -> Generators:
    """:return: `zeta1`, `zeta2` as elements of the free algebra."""
    m, b = params.m_scalar, params.b_scalar
    return {
        'zeta1': _w('AB') - _w('BA', m) - NcPoly.scalar(b),
        'zeta2': _w('C') - _w('AB') + _w('BA'),
    }


def rule_generator(params: TwistParams, k: int) -> NcPoly:
    """:return: `xi5(k)`, with `xi5(0) = xi3`."""
    m, b = params.m_scalar, params.b_scalar
    scale = scalar_inv(m ** k * (m - 1))
    return _w('B' + 'C' * k + 'A') - \
        (_w('C' * (k + 1)) - _w('C' * k, b)).scale(scale)


def rule_generators(params: TwistParams) -> Generators:
    """
    :return: `xi1` ... `xi4` as elements of the free algebra.

    Example:
        >>> print(rule_generators(TwistParams.symbolic())['xi1'])
        A*B - (m/(m-1))*C + (b/(m-1))*I

    """
    m, b = params.m_scalar, params.b_scalar
    inv = scalar_inv(m - 1)
    return {
        'xi1': _w('AB') - (_w('C', m) - NcPoly.scalar(b)).scale(inv),
        'xi2': _w('AC') - _w('CA', m),
        'xi3': rule_generator(params, 0),
        'xi4': _w('CB') - _w('BC', m),
    }


def _label(left: str, name: str, right: str) -> str:
    return '*'.join(part for part in (left, name, right) if part)


def solve_combination(
    target: NcPoly,
    generators: Generators
) -> typing.Optional[typing.Dict[str, typing.Any]]:
    """
    Write `target` as a combination of `u g v` with `g` in `generators` and
    `u`, `v` in `{I, A, B, C}`.

    Example:
        >>> params = TwistParams.symbolic()
        >>> xi = rule_generators(params)
        >>> zeta = relation_generators(params)
        >>> print(render_combination(solve_combination(zeta['zeta2'], xi)))
        -xi1 + xi3

    :return: Coefficients keyed by labels such as `A*zeta1`, `None` if no
        such combination exists.
    """
    span = EchelonSpan()
    for left, (name, generator), right in itertools.product(
            _MULTIPLIERS, sorted(generators.items()), _MULTIPLIERS):
        span.add(_w(left) * generator * _w(right),
                 label=_label(left, name, right))
    return span.solve(target)


def render_combination(combination: typing.Dict[str, typing.Any]) -> str:
    """:return: The combination as `c1*label1 + c2*label2 ...`."""
    if not combination:
        return '0'
    return ''.join(render_term(coeff, label, index == 0)
                   for index, (label, coeff) in
                   enumerate(sorted(combination.items())))


def _expand(combination: typing.Dict[str, typing.Any],
            generators: Generators) -> NcPoly:
    result = NcPoly.zero()
    for label, coeff in combination.items():
        factors = label.split('*')
        term = NcPoly.one()
        for factor in factors:
            term = term * (generators[factor] if factor in generators
                           else _w(factor))
        result = result + term.scale(coeff)
    return result


def explicit_identities(params: TwistParams) -> typing.Dict[
        str, typing.Tuple[NcPoly, NcPoly, typing.Optional[NcPoly]]]:
    """
    Hand-written expressions of each generator through the other ideal.

    :return: Generator name mapped to `(value, corrected expression,
        printed expression)`; the printed expression is `None` where it
        coincides with the corrected one.
    """
    m = params.m_scalar
    a, b_ = _w('A'), _w('B')
    zeta = relation_generators(params)
    xi = rule_generators(params)
    inv = scalar_inv(1 - m)
    return {
        'zeta1': (zeta['zeta1'], xi['xi1'] - xi['xi3'].scale(m),
                  xi['xi1'] - xi['xi2'].scale(m)),
        'zeta2': (zeta['zeta2'], xi['xi3'] - xi['xi1'],
                  xi['xi2'] - xi['xi1']),
        'xi1': (xi['xi1'], (zeta['zeta1'] + zeta['zeta2'].scale(m))
                .scale(inv), None),
        'xi2': (xi['xi2'], bracket(a, zeta['zeta1']) + a * zeta['zeta2'] -
                (zeta['zeta2'] * a).scale(m),
                bracket(a, zeta['zeta1']) + a * zeta['zeta1'] -
                (zeta['zeta2'] * a).scale(m)),
        'xi3': (xi['xi3'], (zeta['zeta1'] + zeta['zeta2']).scale(inv), None),
        'xi4': (xi['xi4'], bracket(zeta['zeta1'], b_) + zeta['zeta2'] * b_ -
                (b_ * zeta['zeta2']).scale(m), None),
    }


def rule_generator_closed_form(
    params: TwistParams,
    k: int,
    printed: bool = False
) -> NcPoly:
    """
    `xi5(k)` through `xi3` and `xi4`:
    `m^(-k) C^k xi3 - sum_i m^(i-1-k) C^(k-i) xi4 C^(i-1) A`.

    :param printed: Drop the factor `C^k` in front of `xi3`, the way the
        identity is usually printed.
    """
    m = params.m_scalar
    xi = rule_generators(params)
    head = xi['xi3'] if printed else _w('C' * k) * xi['xi3']
    result = head.scale(m ** -k)
    for i in range(1, k + 1):
        term = _w('C' * (k - i)) * xi['xi4'] * _w('C' * (i - 1) + 'A')
        result = result - term.scale(m ** (i - 1 - k))
    return result


class PresentationCheck(BaseCheck):
    """
    Each generator of one ideal is a two-sided combination of generators
    of the other.

    Combinations are found by exact row reduction over candidate products
    `u g v` and are then compared with hand-written identities; where a
    printed identity differs from the verified one, the result carries a
    note. `xi5(k)` is checked for `1 <= k <= presentation_k` through the
    recursion `xi5(k) = m^(-1) C xi5(k-1) - m^(-1) xi4 C^(k-1) A` and its
    closed form.

    Example:
        >>> from twistlie.engine import ParamTable, Param
        >>> params = ParamTable()
        >>> params.add(Param('presentation_k', 2))
        >>> results = PresentationCheck()(ReductionSystem(), params)
        >>> all(r.passed for r in results)
        True
        >>> sorted({r.name for r in results
        ...         if r.note and 'printed' in r.note})
        ['ideal_xi2', 'ideal_xi5_closed_form', 'ideal_zeta1', 'ideal_zeta2']

    """

    ALIAS = 'presentation'
    REQUIRES = ('presentation_k',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run the ideal comparison."""
        twist = system.params
        zeta = relation_generators(twist)
        xi = rule_generators(twist)
        results = []
        for name, (value, corrected, printed) in \
                explicit_identities(twist).items():
            others = xi if name.startswith('zeta') else zeta
            results.append(self._generator(name, value, corrected, printed,
                                           others))
        m = twist.m_scalar
        indices = range(1, params['presentation_k'] + 1)
        if verbose:
            indices = tqdm(indices, desc='Rule generators xi5(k)')
        for k in indices:
            value = rule_generator(twist, k)
            recursion = (_w('C') * rule_generator(twist, k - 1) -
                         xi['xi4'] * _w('C' * (k - 1) + 'A')).scale(
                scalar_inv(m))
            results.append(CheckResult.compare(
                'ideal_xi5_recursion', {'k': k}, value - recursion))
            printed = value - rule_generator_closed_form(twist, k, True)
            note = None
            if not printed.is_zero():
                note = 'printed form without C^k in front of xi3 differs'
            results.append(CheckResult.compare(
                'ideal_xi5_closed_form', {'k': k},
                value - rule_generator_closed_form(twist, k), note))
        return results

    @classmethod
    def _generator(cls, name, value, corrected, printed,
                   others: Generators) -> CheckResult:
        result_name = f'ideal_{name}'
        combination = solve_combination(value, others)
        if combination is None:
            return CheckResult(result_name, {}, False,
                               f'{name} = {value} is not a combination of '
                               f'{sorted(others)} with one-letter factors')
        if not (_expand(combination, others) - value).is_zero():
            return CheckResult(result_name, {}, False,
                               f'solved combination '
                               f'{render_combination(combination)} does '
                               f'not expand to {name}')
        note = f'{name} = {render_combination(combination)}'
        if printed is not None and not (value - printed).is_zero():
            note += '; the printed identity does not hold'
        return CheckResult.compare(result_name, {}, value - corrected, note)
