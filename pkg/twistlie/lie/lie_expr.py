"""Scalar combinations of bracket trees in the generators A and B."""

import typing
import weakref

from twistlie.freealg import NcPoly, render_term, bracket
from twistlie.rewrite import ReductionSystem
from twistlie.scalars import Scalar, ONE, scalar_from, is_zero, \
    scalar_equal

Tree = typing.Union[str, tuple]

LEAVES = ('A', 'B')

_TREE_IMAGES: 'weakref.WeakKeyDictionary[ReductionSystem, dict]' = \
    weakref.WeakKeyDictionary()


def is_tree(tree) -> bool:
    """:return: `True` for a leaf `A`, `B` or a pair of trees."""
    if isinstance(tree, str):
        return tree in LEAVES
    return isinstance(tree, tuple) and len(tree) == 2 and \
        is_tree(tree[0]) and is_tree(tree[1])


def render_tree(tree: Tree) -> str:
    """
    Bracket notation of a tree.

    Example:
        >>> render_tree(('A', ('A', 'B')))
        '[A,[A,B]]'

    """
    if isinstance(tree, str):
        return tree
    return f'[{render_tree(tree[0])},{render_tree(tree[1])}]'


def tree_size(tree: Tree) -> int:
    """:return: Number of leaves of `tree`."""
    if isinstance(tree, str):
        return 1
    return tree_size(tree[0]) + tree_size(tree[1])


def _tree_key(tree: Tree):
    return -tree_size(tree), render_tree(tree)


class LieExpr(object):
    """
    Finite scalar-linear combination of bracket trees.

    A tree is a leaf `'A'`, `'B'` or a pair `(left, right)` standing for the
    bracket `[left, right]`. Every expression expands to a Lie polynomial.

    Examples:
        >>> a, b = LieExpr.leaf('A'), LieExpr.leaf('B')
        >>> c = LieExpr.bracket(a, b)
        >>> print(c)
        [A,B]
        >>> print(a.ad(c).scale(2) - b)
        2*[A,[A,B]] - B

    """

    __slots__ = ('_terms',)

    def __init__(self, terms: typing.Optional[typing.Mapping] = None):
        """
        :class:`LieExpr` constructor.

        :param terms: Mapping from trees to scalar-like coefficients.
        """
        clean = {}
        for tree, coeff in (terms or {}).items():
            if not is_tree(tree):
                raise ValueError(f"{tree!r} is not a bracket tree.")
            coeff = scalar_from(coeff)
            if not is_zero(coeff):
                clean[tree] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> 'LieExpr':
        """:return: The empty combination."""
        return cls()

    @classmethod
    def leaf(cls, name: str) -> 'LieExpr':
        """:return: The generator `A` or `B`."""
        return cls({name: ONE})

    @classmethod
    def tree(cls, tree: Tree, coeff=ONE) -> 'LieExpr':
        """:return: `coeff` times a single tree."""
        return cls({tree: coeff})

    @classmethod
    def bracket(cls, left: 'LieExpr', right: 'LieExpr') -> 'LieExpr':
        """:return: The bilinear bracket `[left, right]`, tree by tree."""
        acc = {}
        for t1, c1 in left._terms.items():
            for t2, c2 in right._terms.items():
                key = (t1, t2)
                coeff = c1 * c2
                acc[key] = acc[key] + coeff if key in acc else coeff
        return cls(acc)

    def ad(self, other: 'LieExpr') -> 'LieExpr':
        """:return: `[self, other]`."""
        return LieExpr.bracket(self, other)

    def items(self) -> typing.ItemsView:
        """:return: Unordered view of `(tree, coeff)` pairs."""
        return self._terms.items()

    def terms(self) -> typing.List[typing.Tuple[Tree, Scalar]]:
        """:return: `(tree, coeff)` pairs, larger trees first."""
        return sorted(self._terms.items(), key=lambda kv: _tree_key(kv[0]))

    def is_zero(self) -> bool:
        """:return: `True` for the empty combination."""
        return not self._terms

    def size(self) -> int:
        """:return: Total number of leaves over all trees."""
        return sum(tree_size(tree) for tree in self._terms)

    def scale(self, coeff) -> 'LieExpr':
        """:return: `coeff` times this expression."""
        coeff = scalar_from(coeff)
        return LieExpr({t: coeff * c for t, c in self._terms.items()})

    def __add__(self, other: 'LieExpr') -> 'LieExpr':
        """:return: Sum."""
        if not isinstance(other, LieExpr):
            return NotImplemented
        acc = dict(self._terms)
        for tree, coeff in other._terms.items():
            acc[tree] = acc[tree] + coeff if tree in acc else coeff
        return LieExpr(acc)

    def __neg__(self) -> 'LieExpr':
        """:return: Additive inverse."""
        return LieExpr({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: 'LieExpr') -> 'LieExpr':
        """:return: Difference."""
        if not isinstance(other, LieExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, coeff) -> 'LieExpr':
        """:return: Scalar multiple."""
        try:
            return self.scale(coeff)
        except (TypeError, ValueError):
            return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        """:return: `True` for identical tree combinations."""
        if not isinstance(other, LieExpr):
            return False
        if self._terms.keys() != other._terms.keys():
            return False
        return all(scalar_equal(c, other._terms[t])
                   for t, c in self._terms.items())

    __hash__ = None

    def free_expansion(self) -> NcPoly:
        """:return: The expression as an element of the free algebra."""
        result = NcPoly.zero()
        for tree, coeff in self._terms.items():
            result = result + _free_tree(tree).scale(coeff)
        return result

    def render(self) -> str:
        """
        Text with nested brackets, parseable by
        :func:`twistlie.freealg.parse`.
        """
        if not self._terms:
            return '0'
        return ''.join(render_term(coeff, render_tree(tree), index == 0)
                       for index, (tree, coeff) in enumerate(self.terms()))

    def __str__(self) -> str:
        """:return: Rendered text."""
        return self.render()

    def __repr__(self) -> str:
        """:return: Formatted representation."""
        return f'LieExpr({self.render()})'


def _free_tree(tree: Tree) -> NcPoly:
    if isinstance(tree, str):
        return NcPoly.word(tree)
    return bracket(_free_tree(tree[0]), _free_tree(tree[1]))


def expand_tree(tree: Tree, system: ReductionSystem) -> NcPoly:
    """
    Normal form of a bracket tree, memoized per reduction system.

    Example:
        >>> print(expand_tree(('A', 'B'), ReductionSystem()))
        C

    """
    images = _TREE_IMAGES.setdefault(system, {})
    if tree not in images:
        if isinstance(tree, str):
            images[tree] = system.normal_form(NcPoly.word(tree))
        else:
            left = expand_tree(tree[0], system)
            right = expand_tree(tree[1], system)
            images[tree] = system.normal_form(bracket(left, right))
    return images[tree]


def expand(expr: LieExpr, system: ReductionSystem) -> NcPoly:
    """
    Interpret `expr` in the quotient algebra.

    Example:
        >>> system = ReductionSystem()
        >>> c = LieExpr.tree(('A', 'B'))
        >>> print(expand(LieExpr.leaf('A').ad(c), system))
        (m-1)*C*A

    :param expr: A combination of bracket trees.
    :param system: The reduction system.
    :return: The normal form of the expanded expression.
    """
    result = NcPoly.zero()
    for tree, coeff in expr.items():
        result = result + expand_tree(tree, system).scale(coeff)
    return result
