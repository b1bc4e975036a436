"""Configuration and driver of a full verification run."""

import typing

from twistlie.checks.check_report import CheckReport
from twistlie.engine.base_check import BaseCheck, parse_check, \
    list_available_checks
from twistlie.engine.param import Param
from twistlie.engine.param_table import ParamTable
from twistlie.logger import logger
from twistlie.rewrite import ReductionSystem


def _positive(value) -> bool:
    return isinstance(value, int) and value >= 1


def default_check_params() -> ParamTable:
    """
    Bounds of the default verification run.

    Example:
        >>> params = default_check_params()
        >>> params['max_k'], params['trials'], params['seed']
        (20, 1000, 0)
        >>> params['max_deg'] = 11
        Traceback (most recent call last):
            ...
        ValueError: Validator not satisfied.
        The validator's definition is as follows:
        validator=lambda x: isinstance(x, int) and 1 <= x <= 10,

    """
    params = ParamTable()
    params.add(Param(
        'max_exp', 6, _positive,
        desc="Exponent bound of the reordering and composition families."))
    params.add(Param(
        'n_max', 8, _positive,
        desc="Largest n of the products A^n B^n and B^n A^n."))
    params.add(Param(
        'max_k', 20, _positive,
        desc="Largest epsilon index of the ambiguity checks."))
    params.add(Param(
        'table_k', 20, _positive,
        desc="Largest epsilon index of the resolution table replay."))
    params.add(Param(
        'k_max', 6, _positive,
        desc="Largest power of C in the ad-power families."))
    params.add(Param(
        'l_max', 6, _positive,
        desc="Largest number of brackets in the ad-power families."))
    params.add(Param(
        'trials', 1000, _positive,
        desc="Random polynomials of the confluence check."))
    params.add(Param(
        'max_word_length', 10, _positive,
        desc="Longest random word of the confluence check."))
    params.add(Param(
        'basis_length', 8, _positive,
        desc="Longest word of the exhaustive normal form check."))
    params.add(Param(
        name='max_deg',
        value=6,
        validator=lambda x: isinstance(x, int) and 1 <= x <= 10,
        desc="Filtration degree bound of the Lie checks."))
    params.add(Param(
        'membership_samples', 100, _positive,
        desc="Random elements of the membership check."))
    params.add(Param(
        'witness_samples', 200, _positive,
        desc="Random Lie polynomials of the witness check."))
    params.add(Param(
        'presentation_k', 10, _positive,
        desc="Largest k of the rule generators xi5(k)."))
    params.add(Param(
        'bracket_exp', 4, _positive,
        desc="Exponent bound of the Lie basis bracket table."))
    params.add(Param(
        'shape_exp', 3, _positive,
        desc="Exponent bound of the bracket support check."))
    params.add(Param(
        name='seed',
        value=0,
        validator=lambda x: isinstance(x, int) and x >= 0,
        desc="Seed of every randomized check."))
    return params


def run_all(
    params: typing.Optional[ParamTable] = None,
    system: typing.Optional[ReductionSystem] = None,
    checks: typing.Optional[typing.Iterable[
        typing.Union[str, BaseCheck]]] = None,
    verbose: int = 0
) -> CheckReport:
    """
    Run every check whose parameters are filled.

    Example:
        >>> run_all(ParamTable()).results
        []
        >>> params = ParamTable()
        >>> params.add(Param('n_max', 2))
        >>> report = run_all(params)
        >>> report.passed, len(report)
        (True, 8)

    :param params: Check configuration, :func:`default_check_params` when
        omitted.
    :param system: The reduction system, symbolic when omitted.
    :param checks: Checks to consider, all available checks when omitted.
    :param verbose: Verbosity, 1 shows progress bars.
    :return: The aggregated :class:`CheckReport`.
    """
    if params is None:
        params = default_check_params()
    system = system or ReductionSystem()
    if checks is None:
        checks = list_available_checks()
    checks = [parse_check(check) for check in checks]
    config = {
        'twist': system.params.describe(),
        'overrides': system.overrides,
        'params': {param.name: param.value for param in params if param},
    }
    results = []
    for check in checks:
        if not check.applicable(params):
            continue
        found = check(system, params, verbose=verbose)
        failed = sum(not result.passed for result in found)
        logger.debug(f"{check}: {len(found)} results, {failed} failed.")
        results.extend(found)
    report = CheckReport(results, config)
    logger.info(f"Ran {len(report)} checks, {len(report.failures)} failed.")
    return report
