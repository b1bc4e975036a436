from .rules import Rule, BASE_RULES, BASE_LHS, EPSILON, measure, disorder, \
    epsilon_lhs, base_rhs, epsilon_rhs
from .reduction_units import BaseUnit, IdentityUnit, ReductionUnit, \
    ReductionChain
from .reduction_system import ReductionSystem, Redex, \
    matches_irreducible_pattern
