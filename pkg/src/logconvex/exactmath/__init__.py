"""Exact arithmetic substrate: rationals, polynomials, rational functions,
truncated power series and quadratic surds."""

from .poly import Polynomial, binomial_shift_reference, sturm_positive_on_interval
from .ratfunc import (
    RationalFunction,
    ratfunc_arith,
    ratfunc_derivative,
    ratfunc_substitute_shift,
)
from .rational import (
    ExactRational,
    as_rational,
    parse_rational,
    rational_str,
    to_decimal_string,
)
from .series import TruncatedPowerSeries, series_inv_sqrt, series_sqrt
from .surd import GOLDEN_RATIO, GOLDEN_RATIO_SQUARED, QuadraticSurd, surd_compare


def poly_shift(p: Polynomial, k) -> Polynomial:
    """``q(x) = p(x + k)``."""
    return p.shift(k)


__all__ = [
    "ExactRational",
    "GOLDEN_RATIO",
    "GOLDEN_RATIO_SQUARED",
    "Polynomial",
    "QuadraticSurd",
    "RationalFunction",
    "TruncatedPowerSeries",
    "as_rational",
    "binomial_shift_reference",
    "parse_rational",
    "poly_shift",
    "ratfunc_arith",
    "ratfunc_derivative",
    "ratfunc_substitute_shift",
    "rational_str",
    "series_inv_sqrt",
    "series_sqrt",
    "sturm_positive_on_interval",
    "surd_compare",
    "to_decimal_string",
]
