"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rational import RationalLike, as_rational

DEFAULT_ORDER = 64


class TruncatedPowerSeries:
    """Power series known modulo ``x**order``.

    Arithmetic between two series is carried out at the smaller order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[RationalLike], order: int = DEFAULT_ORDER):
        if order < 1:
            raise ValueError("order must be at least 1")
        c = [as_rational(v) for v in coeffs][:order]
        c.extend(Fraction(0) for _ in range(order - len(c)))
        self.coeffs: tuple[Fraction, ...] = tuple(c)
        self.order = order

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[RationalLike], order: int = DEFAULT_ORDER):
        return cls(coeffs, order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order

    def _common(self, other: "TruncatedPowerSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        n = self._common(other)
        return TruncatedPowerSeries((self.coeffs[i] + other.coeffs[i] for i in range(n)), n)

    def __sub__(self, other: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        n = self._common(other)
        return TruncatedPowerSeries((self.coeffs[i] - other.coeffs[i] for i in range(n)), n)

    def __neg__(self) -> "TruncatedPowerSeries":
        return TruncatedPowerSeries((-c for c in self.coeffs), self.order)

    def __mul__(self, other) -> "TruncatedPowerSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedPowerSeries((c * other for c in self.coeffs), self.order)
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n - i):
                out[i + j] += ai * b[j]
        return TruncatedPowerSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"TruncatedPowerSeries([{shown}{more}], order={self.order})"

    def reciprocal(self) -> "TruncatedPowerSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order):
            s = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-s * inv0)
        return TruncatedPowerSeries(out, self.order)

    def shift_down(self, k: int) -> "TruncatedPowerSeries":
        """Divide by ``x**k``; the first ``k`` coefficients must vanish.

        The result is known to order ``order - k``.
        """
        if any(self.coeffs[:k]):
            raise ArithmeticError(f"series is not divisible by x^{k}")
        return TruncatedPowerSeries(self.coeffs[k:], self.order - k)


def _require_unit(s: TruncatedPowerSeries) -> None:
    if s.coeffs[0] != 1:
        raise ValueError("constant term must be 1")


def series_sqrt(s: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """The square root with constant term 1, from ``t*t = s`` coefficientwise."""
    _require_unit(s)
    a = s.coeffs
    t = [Fraction(1)]
    for n in range(1, s.order):
        acc = a[n] - sum((t[i] * t[n - i] for i in range(1, n)), Fraction(0))
        t.append(acc / 2)
    return TruncatedPowerSeries(t, s.order)


def series_inv_sqrt(s: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """``1/sqrt(s)``, i.e. the series ``t`` with ``t*t*s = 1``."""
    return series_sqrt(s).reciprocal()
