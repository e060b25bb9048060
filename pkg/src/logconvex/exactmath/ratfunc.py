"""Rational functions in one variable over Q, kept in canonical form.

Canonical form: numerator and denominator have integer coefficients, the
gcd of all their coefficients taken together is 1, they share no common
polynomial factor, and the denominator has a positive leading coefficient.
Equality is therefore structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import Polynomial, _content, _int_gcd
from .rational import RationalLike, as_rational


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(as_rational(num))
        if den is None:
            den = Polynomial.constant(1)
        elif not isinstance(den, Polynomial):
            den = Polynomial.constant(as_rational(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _trusted(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Polynomial.x())

    @classmethod
    def constant(cls, c: RationalLike) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __call__(self, x: RationalLike) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at x = {x}")
        return self.num(x) / d

    # -- arithmetic ----------------------------------------------------

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._trusted(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RationalFunction(a + c, b)
        g = b.gcd(d)
        if g.degree == 0:
            return RationalFunction(a * d + c * b, b * d)
        bg, dg = b.exact_div(g), d.exact_div(g)
        return RationalFunction(a * dg + c * bg, bg * d)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = a.gcd(d) if not a.is_zero() else Polynomial.constant(1)
        g2 = c.gcd(b) if not c.is_zero() else Polynomial.constant(1)
        if g1.degree > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2.degree > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        return _from_coprime(a * c, b * d)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return _from_coprime(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other) -> "RationalFunction":
        return self.reciprocal() * other

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return self.reciprocal() ** (-e)
        return _from_coprime(self.num**e, self.den**e)

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        if d.is_constant():
            return _from_coprime(n.derivative(), d)
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def shift(self, s: RationalLike) -> "RationalFunction":
        """``x -> self(x + s)``."""
        return _from_coprime(self.num.shift(s), self.den.shift(s))

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction(({self.num}) / ({self.den}))"

    def __str__(self) -> str:
        if self.den == Polynomial.constant(1):
            return f"{self.num}"
        return f"({self.num}) / ({self.den})"


def _coerce(other):
    if isinstance(other, RationalFunction):
        return other
    if isinstance(other, Polynomial):
        return RationalFunction(other)
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        return RationalFunction.constant(other)
    return NotImplemented


def _normalise_scale(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    # Clear denominators, then divide by the joint integer content.
    l = num.denominator * den.denominator // gcd(num.denominator, den.denominator)
    n = [v * (l // num.denominator) for v in num.int_coeffs]
    d = [v * (l // den.denominator) for v in den.int_coeffs]
    g = gcd(_content(n), _content(d))
    if d[-1] < 0:
        g = -g
    return (
        Polynomial.from_int_coeffs([v // g for v in n]),
        Polynomial.from_int_coeffs([v // g for v in d]),
    )


def _from_coprime(num: Polynomial, den: Polynomial) -> RationalFunction:
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return RationalFunction._trusted(num, Polynomial.constant(1))
    return RationalFunction._trusted(*_normalise_scale(num, den))


def _canonical(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if num.is_zero():
        return num, Polynomial.constant(1)
    num, den = _normalise_scale(num, den)
    g = _int_gcd(num.int_coeffs, den.int_coeffs)
    if len(g) > 1:
        gp = Polynomial.from_int_coeffs(g)
        num, den = _normalise_scale(num.exact_div(gp), den.exact_div(gp))
    return num, den


def ratfunc_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Dispatch ``op`` in ``{"add", "sub", "mul", "div"}``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def ratfunc_derivative(a: RationalFunction) -> RationalFunction:
    return a.derivative()


def ratfunc_substitute_shift(a: RationalFunction, s: int) -> RationalFunction:
    return a.shift(s)


__all__ = [
    "RationalFunction",
    "ratfunc_arith",
    "ratfunc_derivative",
    "ratfunc_substitute_shift",
]
