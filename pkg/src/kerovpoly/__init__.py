"""Exact computation of Kerov's character polynomials."""

from .engine import (
    KerovResult,
    c_m_explicit,
    c_series,
    linear_coefficient,
    p_series,
    pure_power_coeff,
    sigma,
    sigma_biane,
    sigma_k2_closed,
    sigma_k4_closed,
    sigma_k4_series,
    sigma_main,
    sigma_maingen,
    sigma_mainmod,
    stanley_value,
    to_c_basis,
    to_r_basis,
)
from .exact import BasisError, NotInvertibleError, Poly, Series, TruncationError

__version__ = "0.1.0"
