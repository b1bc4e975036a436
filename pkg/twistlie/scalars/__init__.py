from .scalar import Scalar, ParamPoly, PARAM_FIELD, PARAM_RING, SYMBOL_M, \
    SYMBOL_B, ZERO, ONE, scalar_from, scalar_arith, scalar_inv, \
    scalar_equal, is_zero, is_ground, m_power, specialize, render_scalar, \
    render_poly, looks_negative, to_fraction
from .twist_params import TwistParams
