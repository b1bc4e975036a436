from .logger import logger
from .version import __version__

from . import engine
from . import scalars
from . import freealg
from . import rewrite
from . import diamond
from . import utils
from . import lie
from . import checks

from .scalars import TwistParams
from .freealg import NcPoly, parse, bracket
from .rewrite import ReductionSystem
from .diamond import enumerate_ambiguities, resolve, verify_resolution_table
from .lie import LieExpr, decompose, is_lie_polynomial, witness, \
    lie_closure
from .checks import CheckReport, load_check_report, run_all, \
    default_check_params
