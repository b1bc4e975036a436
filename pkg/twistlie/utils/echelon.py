"""Exact incremental row reduction of spans of noncommutative polynomials."""

import typing

from twistlie.freealg import NcPoly, word_sort_key
from twistlie.scalars import Scalar, scalar_inv, is_zero

Certificate = typing.Dict[typing.Hashable, Scalar]


def _combine(target: Certificate, source: Certificate, coeff: Scalar):
    for label, value in source.items():
        total = target.get(label, 0) + coeff * value
        if is_zero(total):
            target.pop(label, None)
        else:
            target[label] = total


class EchelonSpan(object):
    """
    Span of polynomials kept in echelon form over the scalar field.

    Every row is stored under its pivot, the leading word of its support in
    canonical order, and is scaled so that the pivot coefficient is one. Each
    row carries a certificate expressing it through the labelled vectors
    that were added, so membership queries can return explicit linear
    combinations.

    Example:
        >>> from twistlie.freealg import parse
        >>> from twistlie.scalars import render_scalar
        >>> span = EchelonSpan()
        >>> span.add(parse('A + B'), label='u')
        True
        >>> span.add(parse('A - B'), label='v')
        True
        >>> span.add(parse('2*A'), label='w')
        False
        >>> span.dimension
        2
        >>> coeffs = span.solve(parse('B'))
        >>> sorted((label, render_scalar(c)) for label, c in coeffs.items())
        [('u', '1/2'), ('v', '-1/2')]
        >>> span.contains(parse('C'))
        False

    """

    def __init__(self):
        """:class:`EchelonSpan` constructor."""
        self._rows: typing.Dict[str, typing.Tuple[NcPoly, Certificate]] = {}
        self._count = 0

    @property
    def dimension(self) -> int:
        """:return: Dimension of the span."""
        return len(self._rows)

    @property
    def pivots(self) -> typing.List[str]:
        """:return: Pivot words in canonical order."""
        return sorted(self._rows, key=word_sort_key)

    def basis(self) -> typing.List[NcPoly]:
        """:return: The echelon rows ordered by pivot."""
        return [self._rows[pivot][0] for pivot in self.pivots]

    def reduce(
        self,
        vector: NcPoly
    ) -> typing.Tuple[NcPoly, Certificate]:
        """
        Eliminate every pivot word from `vector`.

        :param vector: Vector to reduce.
        :return: The residual and the combination `c` of labelled vectors
            with `vector = residual + sum(c[label] * vector[label])`.
        """
        residual = vector
        used: Certificate = {}
        while True:
            for word in residual.support:
                if word in self._rows:
                    row, certificate = self._rows[word]
                    coeff = residual.coefficient(word)
                    residual = residual - row.scale(coeff)
                    _combine(used, certificate, coeff)
                    break
            else:
                return residual, used

    def add(
        self,
        vector: NcPoly,
        label: typing.Optional[typing.Hashable] = None
    ) -> bool:
        """
        Insert `vector` into the span.

        :param vector: Vector to insert.
        :param label: Name of the vector in certificates, its insertion
            index when omitted.
        :return: `True` if the span grew, `False` if `vector` was already
            contained.
        """
        if label is None:
            label = self._count
        self._count += 1
        residual, used = self.reduce(vector)
        if residual.is_zero():
            return False
        pivot = residual.support[0]
        inverse = scalar_inv(residual.coefficient(pivot))
        certificate: Certificate = {label: inverse}
        _combine(certificate, used, -inverse)
        self._rows[pivot] = (residual.scale(inverse), certificate)
        return True

    def contains(self, vector: NcPoly) -> bool:
        """:return: `True` if `vector` lies in the span."""
        return self.reduce(vector)[0].is_zero()

    def solve(self, vector: NcPoly) -> typing.Optional[Certificate]:
        """
        Express `vector` through the labelled vectors.

        :return: Coefficients keyed by label, `None` if `vector` lies
            outside the span.
        """
        residual, used = self.reduce(vector)
        if not residual.is_zero():
            return None
        return used

    def spans_equal(self, other: 'EchelonSpan') -> bool:
        """:return: `True` if both spans contain each other."""
        return self.dimension == other.dimension and \
            all(other.contains(row) for row in self.basis())

    @classmethod
    def of(cls, vectors: typing.Iterable[NcPoly]) -> 'EchelonSpan':
        """:return: The span of `vectors`, labelled by position."""
        span = cls()
        for vector in vectors:
            span.add(vector)
        return span

    def __len__(self) -> int:
        """:return: Dimension of the span."""
        return self.dimension

    def __repr__(self) -> str:
        """:return: Formatted representation."""
        return f'EchelonSpan(dimension={self.dimension})'
