"""Resolving ambiguities by reduction to normal form."""

import typing

from twistlie.diamond.ambiguity import Ambiguity
from twistlie.engine.exceptions import NotResolvable
from twistlie.freealg import NcPoly
from twistlie.rewrite import ReductionSystem, ReductionUnit


class ResolutionTrace(typing.NamedTuple):
    """
    Both reduction paths of a resolved ambiguity.

    Applying `lhs_steps` to `lhs_start` and `rhs_steps` to `rhs_start`
    yields `common`.
    """

    ambiguity: Ambiguity
    lhs_start: NcPoly
    rhs_start: NcPoly
    lhs_steps: typing.List[ReductionUnit]
    rhs_steps: typing.List[ReductionUnit]
    common: NcPoly

    def to_record(self) -> typing.Dict[str, typing.Any]:
        """:return: The trace as a flat, serializable record."""
        return {
            'ambiguity': self.ambiguity.label,
            'k': self.ambiguity.k,
            'resolvable': True,
            'steps_lhs': [step.label for step in self.lhs_steps],
            'steps_rhs': [step.label for step in self.rhs_steps],
            'common_nf': str(self.common),
        }


def resolve(ambiguity: Ambiguity, system: ReductionSystem) -> ResolutionTrace:
    """
    Reduce both sides of `ambiguity` to normal form.

    Example:
        >>> from twistlie.diamond.ambiguity import closed_form_ambiguities
        >>> system = ReductionSystem()
        >>> phi1 = closed_form_ambiguities(system, 1)[0]
        >>> trace = resolve(phi1, system)
        >>> [step.label for step in trace.lhs_steps]
        []
        >>> [step.label for step in trace.rhs_steps]
        ['r_{beta}']
        >>> print(trace.common)
        (m/(m-1))*C*A - (b/(m-1))*A

    :param ambiguity: An ambiguity of `system`.
    :param system: The reduction system.
    :return: The trace of both reductions.
    :raises NotResolvable: if the normal forms differ.
    """
    lhs_start = ambiguity.lhs_start()
    rhs_start = ambiguity.rhs_start()
    lhs_steps, lhs = system.reduction_steps(lhs_start)
    rhs_steps, rhs = system.reduction_steps(rhs_start)
    if lhs != rhs:
        raise NotResolvable(ambiguity, lhs, rhs)
    return ResolutionTrace(ambiguity, lhs_start, rhs_start,
                           lhs_steps, rhs_steps, lhs)
