"""Real quadratic surds ``a + b*sqrt(d)`` with exact sign decisions."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .rational import RationalLike, as_rational, rational_str, to_decimal_string


def _squarefree_split(d: int) -> tuple[int, int]:
    """Write ``d = s*s * r`` with ``r`` square-free; return ``(s, r)``."""
    if d <= 0:
        raise ValueError("radicand must be a positive integer")
    s, r = 1, d
    p = 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            s *= p
        p += 1
    return s, r


class QuadraticSurd:
    """The real number ``a + b*sqrt(d)``; ``d`` is stored square-free."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike, b: RationalLike = 0, d: int = 1):
        a, b = as_rational(a), as_rational(b)
        s, r = _squarefree_split(d)
        b *= s
        if r == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            r = 1
        self.a, self.b, self.d = a, b, r

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticSurd":
        return cls(0, 1, d)

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # Opposite signs: the larger magnitude wins. Equality would make
        # sqrt(d) rational, impossible for square-free d > 1.
        return sa if a * a > b * b * d else sb

    def _check(self, other: "QuadraticSurd") -> int:
        if self.b and other.b and self.d != other.d:
            raise ValueError("surds with different radicands")
        return self.d if self.b else other.d

    def __add__(self, other) -> "QuadraticSurd":
        other = _coerce(other)
        d = self._check(other)
        return QuadraticSurd(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "QuadraticSurd":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QuadraticSurd":
        return _coerce(other) - self

    def __mul__(self, other) -> "QuadraticSurd":
        other = _coerce(other)
        d = self._check(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return QuadraticSurd(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadraticSurd":
        other = _coerce(other)
        if other.b == 0:
            if other.a == 0:
                raise ZeroDivisionError("division by zero surd")
            return QuadraticSurd(self.a / other.a, self.b / other.a, self.d)
        # multiply by the conjugate
        norm = other.a * other.a - other.b * other.b * other.d
        conj = QuadraticSurd(other.a / norm, -other.b / norm, other.d)
        return self * conj

    def compare(self, other) -> int:
        """-1, 0 or 1 as ``self`` is below, equal to or above ``other``."""
        return (self - _coerce(other)).sign()

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __eq__(self, other) -> bool:
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d if self.b else 1))

    def __float__(self) -> float:
        # Display only; never used for decisions.
        return float(self.a) + float(self.b) * self.d**0.5

    def floor(self) -> int:
        """Exact floor."""
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        # b*sqrt(d) to within 1 from an integer square root, then correct
        # the guess with exact comparisons.
        t = self.b * self.b * self.d
        root = isqrt(t.numerator * t.denominator) // t.denominator
        approx = self.a + (root if self.b > 0 else -root - 1)
        guess = approx.numerator // approx.denominator
        while self.compare(guess + 1) >= 0:
            guess += 1
        while self.compare(guess) < 0:
            guess -= 1
        return guess

    def to_decimal_string(self, digits: int) -> str:
        """Round to ``digits`` places; ties cannot occur for irrational values."""
        if self.b == 0:
            return to_decimal_string(self.a, digits)
        scale = 10**digits
        n = (self * scale + Fraction(1, 2)).floor()
        sign = "-" if n < 0 else ""
        whole, frac = divmod(abs(n), scale)
        return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"

    def __repr__(self) -> str:
        return f"QuadraticSurd({rational_str(self.a)}, {rational_str(self.b)}, {self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            return rational_str(self.a)
        b = "" if self.b == 1 else f"{rational_str(self.b)}*"
        head = f"{rational_str(self.a)} + " if self.a else ""
        return f"{head}{b}sqrt({self.d})"


def _coerce(x) -> QuadraticSurd:
    if isinstance(x, QuadraticSurd):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QuadraticSurd(x)
    raise TypeError(f"cannot compare a surd with {type(x).__name__}")


def surd_compare(q: RationalLike, s: QuadraticSurd) -> int:
    """Exact trichotomy of the rational ``q`` against ``s``: -1, 0 or 1."""
    return -s.compare(as_rational(q))


GOLDEN_RATIO = QuadraticSurd(Fraction(1, 2), Fraction(1, 2), 5)
GOLDEN_RATIO_SQUARED = GOLDEN_RATIO * GOLDEN_RATIO
