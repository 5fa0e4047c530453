"""Optimal quadrature weights for Fourier integrals of W2^(1,0) functions."""

from ._core import (
    ArgumentError,
    DataError,
    NumericalError,
    builtin_functions,
    certify,
    discrete_identity_violation,
    extremal_discrepancy,
    integrate,
    norm_squared,
    norm_squared_asymptotic,
    norm_squared_bruteforce,
    optimal_coefficients,
    oracle_coefficients,
    trapezoid_coefficients,
)

__all__ = [
    "ArgumentError",
    "DataError",
    "NumericalError",
    "builtin_functions",
    "certify",
    "discrete_identity_violation",
    "extremal_discrepancy",
    "integrate",
    "norm_squared",
    "norm_squared_asymptotic",
    "norm_squared_bruteforce",
    "optimal_coefficients",
    "oracle_coefficients",
    "trapezoid_coefficients",
]
