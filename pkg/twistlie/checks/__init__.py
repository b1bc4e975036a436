from .check_report import CheckResult, CheckReport, load_check_report
from .reordering import ReorderingCheck, IDENTITIES, check_identity
from .equal_exponent import EqualExponentCheck, c_product
from .ad_powers import AdPowersCheck
from .presentation import PresentationCheck, relation_generators, \
    rule_generators, rule_generator, rule_generator_closed_form, \
    solve_combination, render_combination, explicit_identities
from .rewriting import RuleMeasureCheck, NormalFormBasisCheck, \
    ConfluenceCheck, MultiplicativityCheck, SpecializationCheck
from .diamond_checks import AmbiguityCatalogueCheck, ResolvabilityCheck, \
    ResolutionTableCheck, CompositionCheck
from .lie_checks import LieCheck, BasisBracketCheck, BracketShapeCheck, \
    ClosureCheck, MembershipCheck, WitnessCheck, ParamGuardCheck, \
    lie_basis_words
from .run_all import default_check_params, run_all
