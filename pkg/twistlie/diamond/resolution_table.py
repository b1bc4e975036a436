"""Replay of the hand-made resolutions of every catalogued ambiguity."""

import typing

from tqdm import tqdm

from twistlie.diamond.ambiguity import Ambiguity, closed_form_ambiguities
from twistlie.diamond.compositions import a_units, b_units
from twistlie.freealg import NcPoly
from twistlie.rewrite import ReductionSystem, ReductionUnit, BaseUnit, \
    IdentityUnit, ReductionChain

Units = typing.List[BaseUnit]


def _single(system, left, name, right, k=None) -> Units:
    return [ReductionUnit(left, system.rule(name, k), right)]


def _identity(system, k) -> Units:
    return [IdentityUnit()]


# Catalogue name -> (printed lambda, printed rho, lambda units, rho units).
RESOLUTION_TABLE: typing.Dict[str, typing.Tuple[
        str, str,
        typing.Callable[[ReductionSystem, typing.Optional[int]], Units],
        typing.Callable[[ReductionSystem, typing.Optional[int]], Units]]] = {
    'phi1': ('id', 'r_beta', _identity,
             lambda s, k: _single(s, '', 'beta', '')),
    'phi2': ('r_{C alpha}', 'r_{alpha C}',
             lambda s, k: _single(s, 'C', 'alpha', ''),
             lambda s, k: _single(s, '', 'alpha', 'C')),
    'phi3': ('r_delta', 'id',
             lambda s, k: _single(s, '', 'delta', ''), _identity),
    'phi4': ('id', 'r_epsilon(1)', _identity,
             lambda s, k: _single(s, '', 'epsilon', '', 1)),
    'phi5': ('r_epsilon(1)', 'id',
             lambda s, k: _single(s, '', 'epsilon', '', 1), _identity),
    'phi6': ('id', 'a_k o a_(k+1)', _identity,
             lambda s, k: a_units(k + 1, s) + a_units(k, s)),
    'phi7': ('r_epsilon(k+1)', 'id',
             lambda s, k: _single(s, '', 'epsilon', '', k + 1), _identity),
    'phi8': ('b_k o b_(k+1)', 'id',
             lambda s, k: b_units(k + 1, s) + b_units(k, s), _identity),
    'phi9': ('id', 'r_epsilon(k+1)', _identity,
             lambda s, k: _single(s, '', 'epsilon', '', k + 1)),
}


class TableRow(typing.NamedTuple):
    """Outcome of replaying one row of the resolution table."""

    ambiguity: Ambiguity
    printed_lambda: str
    printed_rho: str
    lhs: NcPoly
    rhs: NcPoly

    @property
    def passed(self) -> bool:
        """:return: `True` if both sides agree."""
        return self.lhs == self.rhs

    def to_record(self) -> typing.Dict[str, typing.Any]:
        """:return: The row as a flat, serializable record."""
        return {
            'ambiguity': self.ambiguity.label,
            'k': self.ambiguity.k,
            'lambda': self.printed_lambda,
            'rho': self.printed_rho,
            'passed': self.passed,
            'lhs': str(self.lhs),
            'rhs': str(self.rhs),
        }


def replay_row(ambiguity: Ambiguity, system: ReductionSystem) -> TableRow:
    """
    Apply the tabulated `lambda` to `f_mu R` and `rho` to `L f_nu`.

    Example:
        >>> system = ReductionSystem()
        >>> phi6 = closed_form_ambiguities(system, 2)[6]
        >>> phi6.label
        'phi6(k=2)'
        >>> row = replay_row(phi6, system)
        >>> row.passed
        True
        >>> print(row.lhs)
        (m/(m-1))*C^3*A - (b/(m-1))*C^2*A

    """
    printed_lambda, printed_rho, lam, rho = RESOLUTION_TABLE[ambiguity.name]
    lhs = ReductionChain(lam(system, ambiguity.k)).transform(
        ambiguity.lhs_start())
    rhs = ReductionChain(rho(system, ambiguity.k)).transform(
        ambiguity.rhs_start())
    return TableRow(ambiguity, printed_lambda, printed_rho, lhs, rhs)


def verify_resolution_table(
    system: ReductionSystem,
    max_k: int,
    verbose: int = 0
) -> typing.List[TableRow]:
    """
    Replay the resolution table for every catalogued ambiguity.

    :param system: The reduction system.
    :param max_k: Largest family index of `phi6 ... phi9`.
    :param verbose: Verbosity, 1 shows a progress bar.
    :return: One :class:`TableRow` per ambiguity, failures included.
    """
    if max_k < 1:
        raise ValueError(f"max_k must be at least 1, got {max_k}.")
    ambiguities = closed_form_ambiguities(system, max_k)
    if verbose:
        ambiguities = tqdm(ambiguities, desc='Replaying resolutions')
    return [replay_row(ambiguity, system) for ambiguity in ambiguities]
