"""Bracket closure of the generators, computed independently of the basis."""

import typing

import pandas as pd
from tqdm import tqdm

from twistlie.freealg import NcPoly, bracket
from twistlie.lie.basis import kappa_basis
from twistlie.logger import logger
from twistlie.rewrite import ReductionSystem
from twistlie.utils import EchelonSpan


class ClosureReport(typing.NamedTuple):
    """
    Outcome of :func:`lie_closure`.

    :param max_degree: Filtration degree bound `D`.
    :param computed_basis: Independent normal forms found by bracketing.
    :param predicted_basis: Lie basis words of degree at most `D`.
    :param spans_equal: Whether both spans coincide.
    :param rounds: Dimension of the computed span after each round.
    """

    max_degree: int
    computed_basis: typing.List[NcPoly]
    predicted_basis: typing.List[NcPoly]
    spans_equal: bool
    rounds: typing.List[int]

    @property
    def dimension(self) -> int:
        """:return: Dimension of the computed span."""
        return len(self.computed_basis)

    def to_frame(self) -> pd.DataFrame:
        """:return: The computed basis, one rendered element per row."""
        return pd.DataFrame(data={
            'element': [str(p) for p in self.computed_basis],
            'degree': [p.filtration_degree() for p in self.computed_basis],
        }, columns=['element', 'degree'])

    def to_record(self) -> typing.Dict[str, typing.Any]:
        """:return: The report as a flat, serializable record."""
        return {
            'max_degree': self.max_degree,
            'dimension': self.dimension,
            'predicted_dimension': len(self.predicted_basis),
            'spans_equal': self.spans_equal,
            'rounds': list(self.rounds),
            'computed_basis': [str(p) for p in self.computed_basis],
        }


def lie_closure(
    system: ReductionSystem,
    max_degree: int,
    max_supported_degree: int = 10,
    verbose: int = 0
) -> ClosureReport:
    """
    Close `{A, B}` under brackets up to filtration degree `max_degree`.

    Each round brackets every known element with every element found in
    the previous round, keeps the normal forms of degree at most
    `max_degree` and grows an exactly row-reduced span, until a round adds
    nothing.

    Example:
        >>> report = lie_closure(ReductionSystem(), 3)
        >>> report.spans_equal, report.dimension
        (True, 5)

    :param system: The reduction system.
    :param max_degree: Filtration degree bound, at least 1.
    :param max_supported_degree: Largest accepted `max_degree`.
    :param verbose: Verbosity, 1 shows progress bars.
    :raises RootOfUnityParam: if `m` is a root of unity.
    """
    system.params.require_lie_ok()
    if not 1 <= max_degree <= max_supported_degree:
        raise ValueError(f"max_degree must lie in [1, {max_supported_degree}]"
                         f", got {max_degree}.")
    span = EchelonSpan()
    elements = []
    for letter in ('A', 'B'):
        generator = system.normal_form(NcPoly.word(letter))
        if generator.filtration_degree() <= max_degree and \
                span.add(generator):
            elements.append(generator)
    frontier = list(elements)
    rounds = []
    while frontier:
        pairs = [(x, y) for x in list(elements) for y in frontier]
        if verbose:
            pairs = tqdm(pairs, desc=f'Closure round {len(rounds) + 1}')
        found = []
        for x, y in pairs:
            z = system.normal_form(bracket(x, y))
            if z.is_zero() or z.filtration_degree() > max_degree:
                continue
            if span.add(z):
                found.append(z)
        elements.extend(found)
        frontier = found
        rounds.append(span.dimension)
        if verbose:
            logger.info(f"Closure round {len(rounds)}: dimension "
                        f"{span.dimension}.")
    predicted = [NcPoly.word(w) for w in kappa_basis(max_degree)]
    spans_equal = span.spans_equal(EchelonSpan.of(predicted))
    return ClosureReport(max_degree, elements, predicted, spans_equal, rounds)
