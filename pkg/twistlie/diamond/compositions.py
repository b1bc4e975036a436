"""
The compositions `a_k` and `b_k` of `k` reductions.

`a_k` moves `A` to the right through a block `C^k` with `beta` reductions,
`b_k` moves `B` to the left through `C^k` with `delta` reductions:

* `a_k(A C^l) = m^k C^k A` if `l = k`, and `A C^l` otherwise;
* `b_k(C^k B) = m^k B C^k`, and `b_k(B C^h) = B C^h`.
"""

import typing

from twistlie.freealg import NcPoly
from twistlie.rewrite import ReductionSystem, ReductionUnit, ReductionChain


def a_units(k: int, system: ReductionSystem) -> typing.List[ReductionUnit]:
    """
    Reductions of `a_k` in application order.

    Example:
        >>> [u.label for u in a_units(3, ReductionSystem())]
        ['r_{beta C^2}', 'r_{C beta C}', 'r_{C^2 beta}']

    """
    _check_index(k)
    beta = system.rule('beta')
    return [ReductionUnit('C' * i, beta, 'C' * (k - 1 - i))
            for i in range(k)]


def b_units(k: int, system: ReductionSystem) -> typing.List[ReductionUnit]:
    """
    Reductions of `b_k` in application order.

    The reduction `r_{C^(k-1) delta}` comes first, `r_{delta C^(k-1)}` last.

    Example:
        >>> [u.label for u in b_units(2, ReductionSystem())]
        ['r_{C delta}', 'r_{delta C}']

    """
    _check_index(k)
    delta = system.rule('delta')
    return [ReductionUnit('C' * i, delta, 'C' * (k - 1 - i))
            for i in reversed(range(k))]


def compose_ab(
    kind: str,
    k: int,
    poly: NcPoly,
    system: ReductionSystem
) -> NcPoly:
    """
    Apply `a_k` or `b_k` to `poly`.

    Example:
        >>> from twistlie.freealg import parse
        >>> system = ReductionSystem()
        >>> print(compose_ab('a', 2, parse('A*C^2'), system))
        (m^2)*C^2*A
        >>> print(compose_ab('a', 2, parse('A*C'), system))
        A*C
        >>> print(compose_ab('b', 1, parse('B*C'), system))
        B*C

    :param kind: `a` or `b`.
    :param k: Number of reductions, at least 1.
    :param poly: Input polynomial.
    :param system: The reduction system providing `beta` and `delta`.
    """
    if kind == 'a':
        units = a_units(k, system)
    elif kind == 'b':
        units = b_units(k, system)
    else:
        raise ValueError(f"Unknown composition `{kind}`, expected `a` or `b`.")
    return ReductionChain(units).transform(poly)


def _check_index(k: int):
    if k < 1:
        raise ValueError(f"Compositions need k >= 1, got {k}.")
