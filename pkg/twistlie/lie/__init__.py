from .lie_expr import LieExpr, Tree, render_tree, tree_size, is_tree, \
    expand, expand_tree
from .decomposition import Decomposition, decompose, is_lie_polynomial, \
    ad_power, is_complement_word
from .basis import kappa_basis, complement_basis, random_lie_polynomial, \
    random_element
from .witness import WitnessBuilder, witness
from .closure import ClosureReport, lie_closure
