"""Growth constants, limits of ratio sequences and generating-function checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath

from ..exactmath import (
    QuadraticSurd,
    TruncatedPowerSeries,
    as_rational,
    rational_str,
    series_inv_sqrt,
    series_sqrt,
    to_decimal_string,
)
from ..sequences import RatioSequence, SequenceTable, delannoy, motzkin_short

# -- growth constants ----------------------------------------------------------


def _alpha_g(l: int, x: Fraction) -> Fraction:
    return x**l * (x - 2) ** 2 - 1


def alpha_root(l: int, tol) -> tuple[Fraction, Fraction]:
    """Enclose the largest real root of ``x**l * (x - 2)**2 = 1``.

    ``g(x) = x**l (x-2)**2 - 1`` is strictly increasing on ``(2, 3]`` with
    ``g(2) = -1`` and ``g(3) >= 0``, so bisection on ``[2, 3]`` with dyadic
    midpoints finds it.  An exact hit returns a degenerate interval.
    """
    if l < 0:
        raise ValueError("rank must be non-negative")
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    lo, hi = Fraction(2), Fraction(3)
    if _alpha_g(l, lo) >= 0 or _alpha_g(l, hi) < 0:
        raise ArithmeticError(f"root of x^{l}(x-2)^2 = 1 not bracketed by [2, 3]")
    if _alpha_g(l, hi) == 0:
        return hi, hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        g = _alpha_g(l, mid)
        if g == 0:
            return mid, mid
        if g < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def surd_in_interval(s: Union[QuadraticSurd, Fraction, int], interval) -> bool:
    lo, hi = interval
    s = s if isinstance(s, QuadraticSurd) else QuadraticSurd(s)
    return s.compare(lo) >= 0 and s.compare(hi) <= 0


# -- limits ----------------------------------------------------------------------


@dataclass(frozen=True)
class LimitReport:
    name: str
    n: int
    value: Fraction
    target: QuadraticSurd
    tol: Optional[Fraction]
    gap_sign: int                # sign of x_N - target
    within_tol: Optional[bool]

    def to_dict(self, digits: int = 20) -> dict:
        gap = QuadraticSurd(self.value) - self.target
        return {
            "name": self.name,
            "n": self.n,
            "value": to_decimal_string(self.value, digits),
            "target": str(self.target),
            "gap": gap.to_decimal_string(digits),
            "gap_sign": self.gap_sign,
            "tol": None if self.tol is None else rational_str(self.tol),
            "within_tol": self.within_tol,
        }


def limit_report(r: RatioSequence, target, tol=None, n: Optional[int] = None) -> LimitReport:
    """Compare ``x_N`` with ``target`` exactly; ``N`` defaults to the last index.

    ``|x_N - target| <= tol`` is decided as ``target - tol <= x_N <= target + tol``.
    """
    target = target if isinstance(target, QuadraticSurd) else QuadraticSurd(as_rational(target))
    n = r.end_index if n is None else n
    x = r[n]
    tol = None if tol is None else as_rational(tol)
    within = None
    if tol is not None:
        within = (target - tol).compare(x) <= 0 and (target + tol).compare(x) >= 0
    return LimitReport(r.base_name, n, x, target, tol, -target.compare(x), within)


# -- Motzkin asymptotics ---------------------------------------------------------

MAX_PRECISION = 1000


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    ratio: mpmath.mpf
    deviation: mpmath.mpf
    precision: int

    def to_dict(self, digits: int = 15) -> dict:
        return {
            "n": self.n,
            "ratio": mpmath.nstr(self.ratio, digits),
            "deviation": mpmath.nstr(self.deviation, digits),
            "precision_digits": self.precision,
            "note": "floating point, computed in log space",
        }


def asymptotic_check_motzkin(t: SequenceTable, n_check: int, precision: int = 50) -> AsymptoticReport:
    """``M_n / (sqrt(3/(4 pi)) * 3**(n+1) * n**(-3/2))`` at ``n = n_check``.

    This is the one place where floating point is used; the working
    precision is ``precision`` decimal digits.
    """
    if not 1 <= precision <= MAX_PRECISION:
        raise ValueError(f"precision must be between 1 and {MAX_PRECISION} digits")
    if n_check < 1:
        raise ValueError("n_check must be at least 1")
    m = t[n_check]
    with mpmath.workdps(precision):
        n = mpmath.mpf(n_check)
        log_main = (mpmath.log(3 / (4 * mpmath.pi)) / 2 + (n + 1) * mpmath.log(3)
                    - mpmath.mpf(3) / 2 * mpmath.log(n))
        ratio = mpmath.exp(mpmath.log(mpmath.mpf(m)) - log_main)
        deviation = abs(ratio - 1)
    return AsymptoticReport(n_check, ratio, deviation, precision)


# -- generating functions --------------------------------------------------------


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    order: int
    ok: bool
    first_mismatch: Optional[int]


def motzkin_gf(order: int) -> TruncatedPowerSeries:
    """``(1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2)`` to ``order`` coefficients."""
    s = series_sqrt(TruncatedPowerSeries([1, -2, -3], order + 2))
    numerator = TruncatedPowerSeries([1, -1], order + 2) - s
    return numerator.shift_down(2) * Fraction(1, 2)


def delannoy_gf(order: int) -> TruncatedPowerSeries:
    """``1 / sqrt(1 - 6x + x^2)`` to ``order`` coefficients."""
    return series_inv_sqrt(TruncatedPowerSeries([1, -6, 1], order))


def series_identity_check(kind: str, order: int) -> SeriesReport:
    """Expand the closed form and compare it with the recursion, index by index."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if kind == "motzkin_gf":
        series, table = motzkin_gf(order), motzkin_short(order - 1)
    elif kind == "delannoy_gf":
        series, table = delannoy_gf(order), delannoy(order - 1)
    else:
        raise ValueError(f"unknown series identity {kind!r}")
    mismatch = next((i for i in range(order) if series[i] != table[i]), None)
    return SeriesReport(kind, order, mismatch is None, mismatch)
