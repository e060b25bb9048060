"""Exact property checks on finite sequences: log behaviour, unimodality,
normalized log-concavity of coefficient lists, and interlacing of ratios."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Union

from ..exactmath import GOLDEN_RATIO_SQUARED, Polynomial, QuadraticSurd
from ..sequences import RatioSequence, SequenceTable

LOG_CONVEX = "log-convex"
LOG_CONCAVE = "log-concave"
LOG_STRAIGHT = "log-straight"
NEITHER = "neither"


@dataclass(frozen=True)
class ConvexityReport:
    name: str
    property: str
    start_index: int
    end_index: int
    first_violation: Optional[int] = None
    peak: Optional[int] = None
    plateau: bool = False

    @property
    def log_convex(self) -> bool:
        return self.property in (LOG_CONVEX, LOG_STRAIGHT)

    @property
    def log_concave(self) -> bool:
        return self.property in (LOG_CONCAVE, LOG_STRAIGHT)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "property": self.property,
            "range": [self.start_index, self.end_index],
            "violation": self.first_violation,
            "peak": self.peak,
            "plateau": self.plateau,
        }


def _peak(values: Sequence, start: int) -> tuple[int, bool]:
    top = max(values)
    first = values.index(top)
    return start + first, values.count(top) > 1


def check_log_behavior(t: Union[SequenceTable, Sequence], start_index: int = 0,
                       name: str = "sequence") -> ConvexityReport:
    """Classify a positive sequence by the signs of ``a_n**2 - a_{n-1}*a_{n+1}``.

    The comparison is a cross product of the stored values, never a
    quotient.  ``first_violation`` is the first index whose sign contradicts
    the first non-zero sign seen; the sequence is then "neither".
    """
    if isinstance(t, SequenceTable):
        values, start_index, name = list(t.values), t.start_index, t.name
    else:
        values = list(t)
    for i, v in enumerate(values):
        if v <= 0:
            raise ValueError(f"{name}: non-positive value {v} at index {start_index + i}")
    end = start_index + len(values) - 1
    direction = 0
    violation = None
    for i in range(1, len(values) - 1):
        d = values[i] * values[i] - values[i - 1] * values[i + 1]
        s = (d > 0) - (d < 0)
        if s == 0:
            continue
        if direction == 0:
            direction = s
        elif s != direction:
            violation = start_index + i
            break
    if violation is not None:
        prop = NEITHER
    elif direction == 0:
        prop = LOG_STRAIGHT
    else:
        prop = LOG_CONCAVE if direction > 0 else LOG_CONVEX
    peak, plateau = (None, False)
    if prop in (LOG_CONCAVE, LOG_STRAIGHT):
        peak, plateau = _peak(values, start_index)
    return ConvexityReport(name, prop, start_index, end, violation, peak, plateau)


def newton_normalized_logconcavity(p: Union[Polynomial, Sequence]) -> bool:
    """Whether ``a_k / binom(n, k)`` is log-concave, ``n`` the degree."""
    coeffs = list(p.coeffs) if isinstance(p, Polynomial) else [Fraction(c) for c in p]
    if any(c < 0 for c in coeffs):
        raise ValueError("coefficients must be non-negative")
    n = len(coeffs) - 1
    b = [Fraction(c) / comb(n, k) for k, c in enumerate(coeffs)]
    return all(b[k] * b[k] >= b[k - 1] * b[k + 1] for k in range(1, n))


# -- interlacing --------------------------------------------------------------


def _motzkin_bound(n: int) -> Fraction:
    return Fraction(6 * n, 2 * n + 3)


def _rank1_bound(n: int) -> QuadraticSurd:
    return GOLDEN_RATIO_SQUARED * Fraction(2 * n, 2 * n + 3)


INTERLACE_BOUNDS = {
    "motzkin": (_motzkin_bound, 3),
    "rank1": (_rank1_bound, 6),
}


@dataclass(frozen=True)
class InterlaceReport:
    bound: str
    results: tuple[tuple[int, bool], ...]

    @property
    def holds(self) -> bool:
        return all(ok for _, ok in self.results)

    @property
    def first_failure(self) -> Optional[int]:
        return next((n for n, ok in self.results if not ok), None)


def _le(a, b) -> bool:
    if isinstance(a, QuadraticSurd):
        return a.compare(b) <= 0
    if isinstance(b, QuadraticSurd):
        return b.compare(a) >= 0
    return a <= b


def interlace_check(r: RatioSequence, bound: str, n_from: Optional[int] = None,
                    n_to: Optional[int] = None) -> InterlaceReport:
    """Test ``a_n <= x_n <= a_{n+1}`` for each ``n`` in range."""
    if bound not in INTERLACE_BOUNDS:
        raise ValueError(f"unknown interlacing bound {bound!r}")
    a, threshold = INTERLACE_BOUNDS[bound]
    n_from = threshold if n_from is None else n_from
    if n_from < threshold:
        raise ValueError(f"{bound} interlacing starts at n = {threshold}")
    n_to = r.end_index if n_to is None else n_to
    results = []
    for n in range(n_from, n_to + 1):
        x = r[n]
        results.append((n, _le(a(n), x) and _le(x, a(n + 1))))
    return InterlaceReport(bound, tuple(results))
