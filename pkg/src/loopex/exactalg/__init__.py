"""Exact arithmetic kernel: rationals, Laurent polynomials, truncated series,
interpolation and exact linear solving.  Everything here is immutable and
side-effect free; no floating point is used anywhere."""

from .laurent import (LaurentPolynomial, Rational, VariableMismatchError,
                      laurent_arith)
from .linalg import (InterpolationResult, LinearSolveResult,
                     interpolate_polynomial, solve_linear_exact)
from .series import (ParameterMismatchError, SeriesDomainError,
                     TruncatedSeries, series_arith, substitute_exponential)

__all__ = [
    "Rational",
    "LaurentPolynomial",
    "TruncatedSeries",
    "VariableMismatchError",
    "ParameterMismatchError",
    "SeriesDomainError",
    "laurent_arith",
    "series_arith",
    "substitute_exponential",
    "interpolate_polynomial",
    "solve_linear_exact",
    "InterpolationResult",
    "LinearSolveResult",
]
