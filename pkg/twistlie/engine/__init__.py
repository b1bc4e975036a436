from .param import Param
from .param_table import ParamTable
from .base_check import BaseCheck, parse_check, list_available_checks
from . import exceptions
