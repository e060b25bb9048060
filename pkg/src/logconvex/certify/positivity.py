"""Exact positivity of a polynomial on an open interval.

Two methods, tried in order:

shift
    All coefficients of ``p(x + a)`` are non-negative (and not all zero),
    where the expansion point ``a = lo - k`` lies ``k >= 0`` units to the
    left of the interval.  Then ``p > 0`` on ``(a, oo)``, which contains
    ``(lo, hi)``.  Larger ``k`` is a stronger statement.
sturm
    Root counting.  In strict mode ``p`` itself must have no root in the
    interval and be positive at the midpoint; in weak mode the same is
    required of the product of its odd-multiplicity square-free factors
    (times the leading constant), which proves ``p >= 0`` with zeros only
    at isolated points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exactmath import Polynomial, as_rational, sturm_positive_on_interval

DEFAULT_K_MAX = 8


@dataclass(frozen=True)
class PositivityRecord:
    lo: Fraction
    hi: Fraction
    poly: Polynomial
    method: str                 # "shift" or "sturm"
    verdict: bool
    strict: bool
    k: Optional[int] = None     # shift: distance of expansion point left of lo
    witness: Optional[dict] = None

    @property
    def anchor(self) -> Optional[Fraction]:
        return None if self.k is None else self.lo - self.k


def shift_certifies(p: Polynomial, anchor, strict: bool = True) -> bool:
    """All coefficients of ``p(x + anchor)`` are >= 0; strict also needs one > 0."""
    if p.is_zero():
        return not strict
    shifted = p.shift(as_rational(anchor))
    coeffs = shifted.int_coeffs
    return all(c >= 0 for c in coeffs) and any(c > 0 for c in coeffs)


def prove_positive(p: Polynomial, lo, hi, k_max: int = DEFAULT_K_MAX, strict: bool = False,
                   prefer_k: Optional[int] = None) -> PositivityRecord:
    """Prove ``p > 0`` (strict) or ``p >= 0`` (weak) on the open interval ``(lo, hi)``.

    Shifts are tried from ``k_max`` down to 0 so the record carries the
    widest certified half-line; ``prefer_k`` is tried first when given.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if p.is_zero():
        if strict:
            return PositivityRecord(lo, hi, p, "sturm", False, strict,
                                    witness={"reason": "zero polynomial"})
        return PositivityRecord(lo, hi, p, "shift", True, strict, k=0)
    order = list(range(k_max, -1, -1))
    if prefer_k is not None:
        order.remove(prefer_k) if prefer_k in order else None
        order.insert(0, prefer_k)
    for k in order:
        if shift_certifies(p, lo - k):
            return PositivityRecord(lo, hi, p, "shift", True, strict, k=k)
    return _sturm_record(p, lo, hi, strict)


def _sturm_record(p: Polynomial, lo: Fraction, hi: Fraction, strict: bool) -> PositivityRecord:
    if strict:
        target = p
    else:
        c, odd = p.odd_multiplicity_part()
        target = odd * c
    ok = sturm_positive_on_interval(target, lo, hi)
    mid = (lo + hi) / 2
    witness = {
        "mode": "strict" if strict else "weak",
        "tested": target,
        "roots_in_interval": None if target.is_constant() else _open_roots(target, lo, hi),
        "sample": mid,
        "sample_sign": target.sign_at(mid),
    }
    return PositivityRecord(lo, hi, p, "sturm", ok, strict, witness=witness)


def _open_roots(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    n = p.count_roots(lo, hi)
    return n - 1 if p(hi) == 0 else n
