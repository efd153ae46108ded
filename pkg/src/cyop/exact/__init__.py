"""Exact arithmetic substrate: rationals, polynomials, series, jets."""

from .jet import JET_DEPTH, Jet, JetSeries
from .linalg import LinearSolution, nullspace, rank, rational_linear_solve
from .poly import NEG_INF, Poly, stirling2_row, theta_power_expand
from .quadext import QuadExt, quadratic_roots
from .ratfunc import RatFunc
from .rational import as_fraction, format_rational, parse_rational
from .series import (
    PowerSeries,
    format_series,
    parse_series,
    series_exp_log,
    series_mul_div,
    series_revert,
)

__all__ = [
    "JET_DEPTH", "Jet", "JetSeries", "LinearSolution", "nullspace", "rank",
    "rational_linear_solve", "NEG_INF", "Poly", "stirling2_row", "theta_power_expand",
    "QuadExt", "quadratic_roots", "RatFunc", "as_fraction", "format_rational",
    "parse_rational", "PowerSeries", "format_series", "parse_series",
    "series_exp_log", "series_mul_div", "series_revert",
]
