"""Exact rationals.

The standard library's :class:`fractions.Fraction` already keeps the
numerator/denominator pair reduced with a positive denominator, so it is
used directly as the rational type throughout the package.
"""

from __future__ import annotations

import re
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Union

ExactRational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly. Floats and decimals are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rational_str(q: RationalLike) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def to_decimal_string(q: RationalLike, digits: int) -> str:
    """Render ``q`` with ``digits`` places after the point, round-half-even.

    The rounding is done on the exact value; no binary float is involved.
    """
    if digits < 0:
        raise ValueError("digits must be non-negative")
    q = as_rational(q)
    scale = 10**digits
    scaled = q * scale
    floor = scaled.numerator // scaled.denominator
    rem = scaled - floor
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and floor % 2 == 1):
        floor += 1
    with localcontext() as ctx:
        ctx.prec = max(len(str(abs(floor))) + 2, 28)
        value = Decimal(floor).scaleb(-digits)
        return str(value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))
