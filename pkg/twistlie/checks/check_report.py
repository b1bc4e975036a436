"""TwistLie CheckReport, the outcome of a verification run."""

import json
import typing
from pathlib import Path

import dill
import pandas as pd
from tabulate import tabulate

PASS = 'pass'
FAIL = 'fail'


class CheckResult(typing.NamedTuple):
    """
    Outcome of one verified instance of an identity family.

    :param name: Identity family, e.g. `reorder_AC` or `phi6`.
    :param params: Parameters of the instance, e.g. `{'k': 2, 'l': 1}`.
    :param passed: Whether the identity holds.
    :param counterexample: Rendered evidence of a failure, required when
        `passed` is `False`.
    :param note: Free-form remark attached to the instance.
    """

    name: str
    params: typing.Dict[str, typing.Any]
    passed: bool
    counterexample: typing.Optional[str] = None
    note: typing.Optional[str] = None

    @classmethod
    def compare(
        cls,
        name: str,
        params: typing.Dict[str, typing.Any],
        difference,
        note: typing.Optional[str] = None
    ) -> 'CheckResult':
        """
        Result of an identity `lhs = rhs` given `lhs - rhs` in normal form.

        The rendered difference is the counterexample of a failure.
        """
        if difference.is_zero():
            return cls(name, params, True, None, note)
        return cls(name, params, False, f'lhs - rhs = {difference}', note)

    @property
    def status(self) -> str:
        """:return: `pass` or `fail`."""
        return PASS if self.passed else FAIL

    def to_record(self) -> typing.Dict[str, typing.Any]:
        """:return: The result as a flat, serializable record."""
        return {
            'name': self.name,
            'params': dict(self.params),
            'status': self.status,
            'counterexample': self.counterexample,
            'note': self.note,
        }


def _render_params(params: typing.Dict[str, typing.Any]) -> str:
    return ', '.join(f'{key}={value}' for key, value in params.items())


class CheckReport(object):
    """
    Ordered collection of :class:`CheckResult`.

    Results are kept sorted by family name; the order within a family is
    the order in which the instances were checked.

    :param results: Check results.
    :param config: Description of the run, e.g. twist parameters and
        bounds.

    Example:
        >>> report = CheckReport([
        ...     CheckResult('reorder_BC', {'k': 1}, True),
        ...     CheckResult('reorder_AC', {'k': 1}, False, 'lhs - rhs = A'),
        ... ])
        >>> len(report), report.passed
        (2, False)
        >>> [r.name for r in report]
        ['reorder_AC', 'reorder_BC']
        >>> report.failures[0].counterexample
        'lhs - rhs = A'
        >>> list(report.frame.columns)
        ['name', 'params', 'status', 'counterexample', 'note']

    """

    DATA_FILENAME = 'report.dill'

    def __init__(
        self,
        results: typing.Iterable[CheckResult] = (),
        config: typing.Optional[typing.Dict[str, typing.Any]] = None
    ):
        """:class:`CheckReport` initializer."""
        self._results = sorted(results, key=lambda result: result.name)
        self._config = dict(config or {})

    @property
    def results(self) -> typing.List[CheckResult]:
        """:return: All results."""
        return list(self._results)

    @property
    def config(self) -> typing.Dict[str, typing.Any]:
        """:return: Description of the run."""
        return dict(self._config)

    @property
    def passed(self) -> bool:
        """:return: `True` if every result passed."""
        return all(result.passed for result in self._results)

    @property
    def failures(self) -> typing.List[CheckResult]:
        """:return: Failed results."""
        return [result for result in self._results if not result.passed]

    @property
    def frame(self) -> pd.DataFrame:
        """:return: One row per result."""
        return pd.DataFrame(data={
            'name': [r.name for r in self._results],
            'params': [_render_params(r.params) for r in self._results],
            'status': [r.status for r in self._results],
            'counterexample': [r.counterexample for r in self._results],
            'note': [r.note for r in self._results],
        }, columns=['name', 'params', 'status', 'counterexample', 'note'])

    def summary(self) -> pd.DataFrame:
        """
        Pass and fail counts per identity family.

        Example:
            >>> report = CheckReport([
            ...     CheckResult('phi1', {}, True),
            ...     CheckResult('phi6', {'k': 1}, True),
            ...     CheckResult('phi6', {'k': 2}, False, 'lhs - rhs = C'),
            ... ])
            >>> report.summary()
               name  checked  passed  failed
            0  phi1        1       1       0
            1  phi6        2       1       1

        """
        if not self._results:
            return pd.DataFrame(
                columns=['name', 'checked', 'passed', 'failed'])
        frame = self.frame
        passed = frame['status'] == PASS
        summary = frame.assign(passed=passed, failed=~passed).groupby(
            'name', sort=True).agg(checked=('status', 'size'),
                                   passed=('passed', 'sum'),
                                   failed=('failed', 'sum'))
        return summary.reset_index()

    def to_records(self) -> typing.List[typing.Dict[str, typing.Any]]:
        """:return: One record per result."""
        return [result.to_record() for result in self._results]

    def to_json(self, **kwargs) -> str:
        """:return: The report as a JSON document."""
        return json.dumps({
            'config': self._config,
            'passed': self.passed,
            'results': self.to_records(),
        }, default=str, **kwargs)

    def merge(self, other: 'CheckReport') -> 'CheckReport':
        """:return: A report holding the results of both reports."""
        config = dict(self._config)
        config.update(other.config)
        return CheckReport(self._results + other.results, config)

    def __len__(self) -> int:
        """:return: Number of results."""
        return len(self._results)

    def __iter__(self) -> typing.Iterator[CheckResult]:
        """:return: Iterator over the results."""
        return iter(self._results)

    def __str__(self) -> str:
        """:return: Summary table followed by every failure."""
        if not self._results:
            return 'No checks were run.'
        text = tabulate(self.summary(), headers='keys', tablefmt='simple',
                        showindex=False)
        failures = self.failures
        if failures:
            rows = [(r.name, _render_params(r.params), r.counterexample)
                    for r in failures]
            text += '\n\nFailures:\n' + tabulate(
                rows, headers=['name', 'params', 'counterexample'],
                tablefmt='simple')
        notes = [(r.name, _render_params(r.params), r.note)
                 for r in self._results if r.note]
        if notes:
            text += '\n\nNotes:\n' + tabulate(
                notes, headers=['name', 'params', 'note'], tablefmt='simple')
        status = 'all checks passed' if self.passed else \
            f'{len(failures)} of {len(self)} checks failed'
        return f'{text}\n\n{status}'

    def save(self, dirpath: typing.Union[str, Path]):
        """
        Save the :class:`CheckReport` object.

        A saved :class:`CheckReport` is represented as a directory holding
        the report serialized by `dill`.

        :param dirpath: directory path of the saved :class:`CheckReport`.
        """
        dirpath = Path(dirpath)
        data_file_path = dirpath.joinpath(self.DATA_FILENAME)

        if data_file_path.exists():
            raise FileExistsError
        elif not dirpath.exists():
            dirpath.mkdir()

        with open(data_file_path, mode='wb') as data_file:
            dill.dump(self, data_file)


def load_check_report(dirpath: typing.Union[str, Path]) -> CheckReport:
    """
    Load a :class:`CheckReport`. The reverse function of :meth:`save`.

    :param dirpath: directory path of the saved report.
    :return: a :class:`CheckReport` instance.
    """
    dirpath = Path(dirpath)

    data_file_path = dirpath.joinpath(CheckReport.DATA_FILENAME)
    with open(data_file_path, 'rb') as data_file:
        report = dill.load(data_file)

    return report
