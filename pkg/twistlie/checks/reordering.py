"""Reordering identities of the quotient algebra."""

import itertools
import typing

from tqdm import tqdm

from twistlie.checks.check_report import CheckResult
from twistlie.engine.base_check import BaseCheck
from twistlie.engine.param_table import ParamTable
from twistlie.freealg import NcPoly, bracket, letter_power
from twistlie.rewrite import ReductionSystem
from twistlie.scalars import Scalar, ONE, scalar_inv

Builder = typing.Callable[..., NcPoly]


def _w(word: str, coeff=ONE) -> NcPoly:
    return NcPoly.word(word, coeff)


def _ca(k: int, n: int) -> str:
    return letter_power('C', k) + letter_power('A', n)


def _bc(n: int, k: int) -> str:
    return letter_power('B', n) + letter_power('C', k)


class Identity(typing.NamedTuple):
    """
    A family `lhs = rhs` indexed by positive integer exponents.

    Builders take the scalars `m`, `b` followed by the exponents as
    keyword arguments. `printed` is an alternative right hand side that
    circulates in the literature and is reported when it disagrees.
    """

    variables: typing.Tuple[str, ...]
    lhs: Builder
    rhs: Builder
    printed: typing.Optional[Builder] = None


def _bracket_a_bc(m: Scalar, b: Scalar, x: int, y: int,
                  b_coeff=None) -> NcPoly:
    inv = scalar_inv(m - 1)
    if b_coeff is None:
        b_coeff = m ** -x - 1
    return _w(_bc(y - 1, x + 1), (m ** y - m ** -x) * inv) + \
        _w(_bc(y - 1, x), b_coeff * b * inv)


def _bracket_b_ca(m: Scalar, b: Scalar, x: int, y: int) -> NcPoly:
    inv = scalar_inv(m - 1)
    return _w(_ca(x + 1, y - 1), (m ** -x - m ** y) * inv) + \
        _w(_ca(x, y - 1), (1 - m ** -x) * b * inv)


IDENTITIES: typing.Dict[str, Identity] = {
    'reorder_AC': Identity(
        ('k', 'n'),
        lambda m, b, k, n: _w('A' * n + 'C' * k),
        lambda m, b, k, n: _w(_ca(k, n), m ** (k * n))),
    'reorder_BC': Identity(
        ('k', 'n'),
        lambda m, b, k, n: _w('C' * k + 'B' * n),
        lambda m, b, k, n: _w(_bc(n, k), m ** (k * n))),
    'bracket_A_Cx': Identity(
        ('x',),
        lambda m, b, x: bracket(_w('A'), _w('C' * x)),
        lambda m, b, x: _w(_ca(x, 1), m ** x - 1)),
    'bracket_A_CA': Identity(
        ('x', 'y'),
        lambda m, b, x, y: bracket(_w('A'), _w(_ca(x, y))),
        lambda m, b, x, y: _w(_ca(x, y + 1), m ** x - 1)),
    'bracket_C_CA': Identity(
        ('k', 'x', 'y'),
        lambda m, b, k, x, y: bracket(_w('C' * k), _w(_ca(x, y))),
        lambda m, b, k, x, y: _w(_ca(k + x, y), 1 - m ** (k * y))),
    'bracket_CA_CA': Identity(
        ('k', 'n', 'x', 'y'),
        lambda m, b, k, n, x, y: bracket(_w(_ca(k, n)), _w(_ca(x, y))),
        lambda m, b, k, n, x, y: _w(_ca(k + x, n + y),
                                    m ** (n * x) - m ** (k * y))),
    'bracket_B_Cx': Identity(
        ('x',),
        lambda m, b, x: bracket(_w('B'), _w('C' * x)),
        lambda m, b, x: _w(_bc(1, x), 1 - m ** x)),
    'bracket_B_BC': Identity(
        ('x', 'y'),
        lambda m, b, x, y: bracket(_w('B'), _w(_bc(y, x))),
        lambda m, b, x, y: _w(_bc(y + 1, x), 1 - m ** x)),
    'bracket_C_BC': Identity(
        ('k', 'x', 'y'),
        lambda m, b, k, x, y: bracket(_w('C' * k), _w(_bc(y, x))),
        lambda m, b, k, x, y: _w(_bc(y, k + x), m ** (k * y) - 1),
        lambda m, b, k, x, y: _w(_bc(y, k + x), m ** (x * y) - 1)),
    'bracket_BC_BC': Identity(
        ('k', 'n', 'x', 'y'),
        lambda m, b, k, n, x, y: bracket(_w(_bc(n, k)), _w(_bc(y, x))),
        lambda m, b, k, n, x, y: _w(_bc(n + y, k + x),
                                    m ** (k * y) - m ** (n * x))),
    'bracket_A_BC': Identity(
        ('x', 'y'),
        lambda m, b, x, y: bracket(_w('A'), _w(_bc(y, x))),
        _bracket_a_bc,
        lambda m, b, x, y: _bracket_a_bc(m, b, x, y, m ** -x - m)),
    'bracket_B_CA': Identity(
        ('x', 'y'),
        lambda m, b, x, y: bracket(_w('B'), _w(_ca(x, y))),
        _bracket_b_ca),
}


def check_identity(
    name: str,
    exponents: typing.Dict[str, int],
    system: ReductionSystem
) -> CheckResult:
    """
    Verify one instance of a reordering identity.

    Example:
        >>> system = ReductionSystem()
        >>> params = {'k': 1, 'x': 2, 'y': 1}
        >>> check_identity('bracket_C_BC', params, system).note
        'printed coefficient differs: lhs - printed = -(m^2-m)*B*C^3'
        >>> check_identity('bracket_B_CA', {'x': 1, 'y': 1}, system).passed
        True

    :param name: Key of :data:`IDENTITIES`.
    :param exponents: Values of the identity's variables.
    :param system: The reduction system.
    """
    identity = IDENTITIES[name]
    m, b = system.params.m_scalar, system.params.b_scalar
    lhs = system.normal_form(identity.lhs(m, b, **exponents))
    difference = system.normal_form(lhs - identity.rhs(m, b, **exponents))
    note = None
    if identity.printed is not None:
        printed = system.normal_form(
            lhs - identity.printed(m, b, **exponents))
        if not printed.is_zero():
            note = f'printed coefficient differs: lhs - printed = {printed}'
    return CheckResult.compare(name, dict(exponents), difference, note)


class ReorderingCheck(BaseCheck):
    """
    Move `A` right and `B` left through powers of `C`, and the bracket
    tables of powers of `A`, `B` and `C`.

    Every family is checked for all exponents in `[1, max_exp]`.

    Example:
        >>> from twistlie.engine import ParamTable, Param
        >>> params = ParamTable()
        >>> params.add(Param('max_exp', 1))
        >>> results = ReorderingCheck()(ReductionSystem(), params)
        >>> len(results), all(r.passed for r in results)
        (12, True)

    """

    ALIAS = 'reordering'
    REQUIRES = ('max_exp',)

    def __call__(
        self,
        system: ReductionSystem,
        params: ParamTable,
        verbose: int = 0
    ) -> typing.List[CheckResult]:
        """Run every reordering family."""
        exponents = range(1, params['max_exp'] + 1)
        jobs = [(name, dict(zip(identity.variables, values)))
                for name, identity in IDENTITIES.items()
                for values in itertools.product(
                    exponents, repeat=len(identity.variables))]
        if verbose:
            jobs = tqdm(jobs, desc='Reordering identities')
        return [check_identity(name, values, system)
                for name, values in jobs]
