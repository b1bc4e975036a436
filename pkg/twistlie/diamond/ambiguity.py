"""Overlap and inclusion ambiguities of the reduction system."""

import typing

import pandas as pd

from twistlie.freealg import NcPoly, render_word
from twistlie.logger import logger
from twistlie.rewrite import Rule, ReductionSystem

OVERLAP = 'overlap'
INCLUSION = 'inclusion'


class Ambiguity(typing.NamedTuple):
    """
    Two rule left hand sides sharing letters inside the word `L X R`.

    For an overlap `W_mu = L X` and `W_nu = X R`; for an inclusion
    `W_mu = X` and `W_nu = L X R`.

    :param kind: `overlap` or `inclusion`.
    :param mu: First rule.
    :param nu: Second rule.
    :param left: Word `L`.
    :param middle: Shared word `X`, never empty.
    :param right: Word `R`.
    :param name: Catalogue name `phi1` ... `phi9`, if known.
    :param k: Family index of the catalogue entry.
    """

    kind: str
    mu: Rule
    nu: Rule
    left: str
    middle: str
    right: str
    name: typing.Optional[str] = None
    k: typing.Optional[int] = None

    @property
    def key(self) -> typing.Tuple[str, str, str, str, str, str]:
        """:return: `(kind, mu, nu, L, X, R)` with rules by label."""
        return (self.kind, self.mu.label, self.nu.label,
                self.left, self.middle, self.right)

    @property
    def label(self) -> str:
        """:return: `phi6(k=2)` style name, or the raw tuple."""
        if self.name is None:
            return '({}, {}, {}, {}, {})'.format(
                self.mu.label, self.nu.label, render_word(self.left),
                render_word(self.middle), render_word(self.right))
        if self.k is None:
            return self.name
        return f'{self.name}(k={self.k})'

    @property
    def word(self) -> str:
        """:return: The ambiguous word `L X R`."""
        return self.left + self.middle + self.right

    def lhs_start(self) -> NcPoly:
        """:return: `f_mu R` for overlaps, `L f_mu R` for inclusions."""
        if self.kind == INCLUSION:
            return NcPoly.word(self.left) * self.mu.rhs * \
                NcPoly.word(self.right)
        return self.mu.rhs * NcPoly.word(self.right)

    def rhs_start(self) -> NcPoly:
        """:return: `L f_nu` for overlaps, `f_nu` for inclusions."""
        if self.kind == INCLUSION:
            return self.nu.rhs
        return NcPoly.word(self.left) * self.nu.rhs

    def named(self, name: str, k: typing.Optional[int]) -> 'Ambiguity':
        """:return: A copy carrying a catalogue name."""
        return self._replace(name=name, k=k)


def closed_form_ambiguities(
    system: ReductionSystem,
    max_k: int
) -> typing.List[Ambiguity]:
    """
    The catalogued overlap ambiguities `phi1 ... phi5` and `phi6(k) ...
    phi9(k)` for `1 <= k <= max_k`.

    Example:
        >>> system = ReductionSystem()
        >>> [a.label for a in closed_form_ambiguities(system, 1)][-2:]
        ['phi8(k=1)', 'phi9(k=1)']
        >>> len(closed_form_ambiguities(system, 3))
        17

    """
    alpha, beta, gamma, delta = (system.rule(name) for name in
                                 ('alpha', 'beta', 'gamma', 'delta'))
    found = [
        Ambiguity(OVERLAP, alpha, gamma, 'A', 'B', 'A', 'phi1'),
        Ambiguity(OVERLAP, beta, delta, 'A', 'C', 'B', 'phi2'),
        Ambiguity(OVERLAP, gamma, alpha, 'B', 'A', 'B', 'phi3'),
        Ambiguity(OVERLAP, gamma, beta, 'B', 'A', 'C', 'phi4'),
        Ambiguity(OVERLAP, delta, gamma, 'C', 'B', 'A', 'phi5'),
    ]
    for k in range(1, max_k + 1):
        eps = system.epsilon(k)
        tail = 'C' * k + 'A'
        head = 'B' + 'C' * k
        found.extend([
            Ambiguity(OVERLAP, alpha, eps, 'A', 'B', tail, 'phi6', k),
            Ambiguity(OVERLAP, delta, eps, 'C', 'B', tail, 'phi7', k),
            Ambiguity(OVERLAP, eps, alpha, head, 'A', 'B', 'phi8', k),
            Ambiguity(OVERLAP, eps, beta, head, 'A', 'C', 'phi9', k),
        ])
    return sorted(found, key=_catalogue_order)


def _catalogue_order(ambiguity: Ambiguity):
    return int(ambiguity.name[3:]), ambiguity.k or 0


def find_overlap_ambiguities(
    system: ReductionSystem,
    max_k: int
) -> typing.List[Ambiguity]:
    """
    Brute-force overlaps: every `W_mu = L X`, `W_nu = X R` with `X`
    nonempty, over the base rules and `epsilon(1..max_k)`.

    `L` or `R` may be empty. A rule is not paired with itself along its
    whole left hand side.
    """
    rules = system.rules(max_k)
    found = []
    for mu in rules:
        for nu in rules:
            for cut in range(len(mu.lhs)):
                left, middle = mu.lhs[:cut], mu.lhs[cut:]
                if not nu.lhs.startswith(middle):
                    continue
                right = nu.lhs[len(middle):]
                if not left and not right and mu.label == nu.label:
                    continue
                found.append(Ambiguity(OVERLAP, mu, nu, left, middle, right))
    return found


def find_inclusion_ambiguities(
    system: ReductionSystem,
    max_k: int
) -> typing.List[Ambiguity]:
    """
    Brute-force inclusions: every occurrence of `W_mu` inside a different
    `W_nu`, over the base rules and `epsilon(1..max_k)`.

    Example:
        >>> find_inclusion_ambiguities(ReductionSystem(), 5)
        []

    """
    rules = system.rules(max_k)
    found = []
    for mu in rules:
        for nu in rules:
            if mu.label == nu.label:
                continue
            start = nu.lhs.find(mu.lhs)
            while start >= 0:
                end = start + len(mu.lhs)
                found.append(Ambiguity(INCLUSION, mu, nu, nu.lhs[:start],
                                       mu.lhs, nu.lhs[end:]))
                start = nu.lhs.find(mu.lhs, start + 1)
    return found


def enumerate_ambiguities(
    system: ReductionSystem,
    max_k: int
) -> typing.List[Ambiguity]:
    """
    All ambiguities with `epsilon` rules up to `max_k`, by brute force.

    Entries matching the catalogue carry their catalogue name; the result
    is sorted in catalogue order with unnamed entries last.

    Example:
        >>> ambiguities = enumerate_ambiguities(ReductionSystem(), 1)
        >>> len(ambiguities)
        9
        >>> ambiguities[0].label
        'phi1'

    :param system: The reduction system.
    :param max_k: Largest `epsilon` index, at least 1.
    """
    if max_k < 1:
        raise ValueError(f"max_k must be at least 1, got {max_k}.")
    catalogue = {a.key: a for a in closed_form_ambiguities(system, max_k)}
    found = find_overlap_ambiguities(system, max_k) + \
        find_inclusion_ambiguities(system, max_k)
    named = []
    unnamed = []
    for ambiguity in found:
        known = catalogue.get(ambiguity.key)
        if known is None:
            unnamed.append(ambiguity)
        else:
            named.append(known)
    if unnamed or len(named) != len(catalogue):
        logger.warning(f"Brute-force ambiguities differ from the catalogue: "
                       f"{len(unnamed)} uncatalogued, "
                       f"{len(catalogue) - len(named)} missing.")
    return sorted(named, key=_catalogue_order) + unnamed


def ambiguities_frame(ambiguities: typing.List[Ambiguity]) -> pd.DataFrame:
    """
    Tabular view of ambiguities.

    Example:
        >>> frame = ambiguities_frame(
        ...     enumerate_ambiguities(ReductionSystem(), 1))
        >>> list(frame.columns)
        ['label', 'kind', 'mu', 'nu', 'L', 'X', 'R']
        >>> frame['kind'].unique().tolist()
        ['overlap']

    """
    return pd.DataFrame(data={
        'label': [a.label for a in ambiguities],
        'kind': [a.kind for a in ambiguities],
        'mu': [a.mu.label for a in ambiguities],
        'nu': [a.nu.label for a in ambiguities],
        'L': [render_word(a.left) for a in ambiguities],
        'X': [render_word(a.middle) for a in ambiguities],
        'R': [render_word(a.right) for a in ambiguities],
    }, columns=['label', 'kind', 'mu', 'nu', 'L', 'X', 'R'])
