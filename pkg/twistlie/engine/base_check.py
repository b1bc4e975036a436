"""Check base class and some related utilities."""

import abc
import typing

from twistlie.engine.param_table import ParamTable


class BaseCheck(abc.ABC):
    """
    Check base class.

    A check verifies one family of identities of the quotient algebra and
    returns one :class:`twistlie.checks.CheckResult` per verified instance.
    It only runs when every parameter named in `REQUIRES` is filled.
    """

    ALIAS = 'base_check'
    REQUIRES: typing.Tuple[str, ...] = ()

    @abc.abstractmethod
    def __call__(
        self,
        system,
        params: ParamTable,
        verbose: int = 0
    ) -> list:
        """
        Call to run the check.

        :param system: The :class:`twistlie.rewrite.ReductionSystem` to
            verify identities in.
        :param params: Check configuration, see
            :func:`twistlie.checks.default_check_params`.
        :param verbose: Verbosity, 1 shows progress bars.
        :return: A list of :class:`twistlie.checks.CheckResult`.
        """

    def applicable(self, params: ParamTable) -> bool:
        """:return: `True` if every required parameter is filled."""
        return params.filled(self.REQUIRES)

    def __repr__(self) -> str:
        """:return: Formated string representation of the check."""
        return self.ALIAS

    def __eq__(self, other):
        """:return: `True` if two checks are equal, `False` otherwise."""
        return (type(self) is type(other)) and (vars(self) == vars(other))

    def __hash__(self):
        """:return: Hashing value using the check as `str`."""
        return str(self).__hash__()


def list_available_checks() -> typing.List[typing.Type[BaseCheck]]:
    """:return: All concrete :class:`BaseCheck` subclasses, sorted by alias."""
    found = []
    stack = list(BaseCheck.__subclasses__())
    while stack:
        subclass = stack.pop()
        stack.extend(subclass.__subclasses__())
        if not getattr(subclass, '__abstractmethods__', None):
            found.append(subclass)
    return sorted(found, key=lambda subclass: subclass.ALIAS)


def parse_check(check: typing.Union[str,
                                    typing.Type[BaseCheck],
                                    BaseCheck]) -> BaseCheck:
    """
    Parse input check in any form into a :class:`BaseCheck` instance.

    :param check: Input check in any form.
    :return: A :class:`BaseCheck` instance.

    Examples::
        >>> from twistlie import checks
        >>> from twistlie.engine import parse_check

    Use `str` as check alias:
        >>> type(parse_check('equal_exponent'))
        <class 'twistlie.checks.equal_exponent.EqualExponentCheck'>

    Use :class:`BaseCheck` subclasses or instances:
        >>> type(parse_check(checks.EqualExponentCheck))
        <class 'twistlie.checks.equal_exponent.EqualExponentCheck'>
        >>> type(parse_check(checks.EqualExponentCheck()))
        <class 'twistlie.checks.equal_exponent.EqualExponentCheck'>

    """
    if isinstance(check, BaseCheck):
        return check
    elif isinstance(check, str):
        alias = check.lower()
        for subclass in list_available_checks():
            if alias == subclass.ALIAS:
                return subclass()
        raise ValueError(f"Unknown check `{check}`.")
    elif isinstance(check, type) and issubclass(check, BaseCheck):
        return check()
    raise TypeError(f"Cannot parse {check!r} as a check.")
