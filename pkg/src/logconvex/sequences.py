"""Sequence engines: every table is computed exactly from a recursion,
closed form or identity, and tagged with how it was produced."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence, Union

from .exactmath import Polynomial, as_rational

Number = Union[int, Fraction]


class Provenance(str, enum.Enum):
    SHORT_RECURSION = "short-recursion"
    LONG_RECURSION = "long-recursion"
    CLOSED_FORM = "closed-form"
    BINOMIAL_IDENTITY = "binomial-identity"
    ORACLE = "oracle"
    DERIVED_RECURSION = "derived-recursion"


class NonExactDivision(ArithmeticError):
    """A division that the underlying identity guarantees to be exact was not."""


class OracleMismatch(AssertionError):
    """A derived recursion disagreed with brute-force enumeration."""


@dataclass(frozen=True)
class SequenceTable:
    name: str
    values: tuple[Number, ...]
    start_index: int = 0
    provenance: Provenance = Provenance.SHORT_RECURSION

    def __post_init__(self):
        if not self.values:
            raise ValueError("a sequence table needs at least one value")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Number:
        i = n - self.start_index
        if not 0 <= i < len(self.values):
            raise IndexError(f"{self.name}: index {n} outside "
                             f"[{self.start_index}, {self.end_index}]")
        return self.values[i]

    @property
    def end_index(self) -> int:
        return self.start_index + len(self.values) - 1

    @property
    def indices(self) -> range:
        return range(self.start_index, self.end_index + 1)

    def items(self) -> Iterator[tuple[int, Number]]:
        return zip(self.indices, self.values)

    def head(self, n_max: int) -> "SequenceTable":
        """The prefix up to and including index ``n_max``."""
        return SequenceTable(self.name, self.values[: n_max - self.start_index + 1],
                             self.start_index, self.provenance)


@dataclass(frozen=True)
class RatioSequence:
    """``x_n = a_n / a_{n-1}``; ``start_index`` is the index of the first ratio."""

    base_name: str
    values: tuple[Fraction, ...]
    start_index: int

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        i = n - self.start_index
        if not 0 <= i < len(self.values):
            raise IndexError(f"ratio x_{n} of {self.base_name} not available")
        return self.values[i]

    @property
    def end_index(self) -> int:
        return self.start_index + len(self.values) - 1

    @property
    def indices(self) -> range:
        return range(self.start_index, self.end_index + 1)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return zip(self.indices, self.values)


def _exact(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonExactDivision(f"{what}: {num} is not divisible by {den}")
    return q


# -- binomials, Catalan, Narayana ---------------------------------------------


def binomial_row(n: int) -> SequenceTable:
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for k in range(1, n + 1):
        row.append(_exact(row[-1] * (n - k + 1), k, "binomial row"))
    return SequenceTable(f"binomial({n},k)", tuple(row), 0, Provenance.CLOSED_FORM)


def catalan(n_max: int) -> SequenceTable:
    vals = [1]
    for n in range(1, n_max + 1):
        # C_n = C_{n-1} * 2(2n-1)/(n+1)
        vals.append(_exact(vals[-1] * 2 * (2 * n - 1), n + 1, "catalan"))
    return SequenceTable("catalan", tuple(vals), 0, Provenance.CLOSED_FORM)


def narayana(n: int, k: int) -> int:
    """``N(n,k) = binom(n,k) binom(n,k-1) / n`` with ``N(0,0) = 1``.

    Zero outside ``1 <= k <= n``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return _exact(comb(n, k) * comb(n, k - 1), n, f"N({n},{k})")


def narayana_row(n: int) -> SequenceTable:
    if n == 0:
        return SequenceTable("narayana(0,k)", (1,), 0, Provenance.CLOSED_FORM)
    return SequenceTable(f"narayana({n},k)", tuple(narayana(n, k) for k in range(1, n + 1)),
                         1, Provenance.CLOSED_FORM)


# -- Stirling numbers and Bell polynomials -------------------------------------


def stirling1_rows(n_max: int) -> Iterator[list[int]]:
    """Rows ``c(n, 0..n)`` of the unsigned first-kind triangle, n = 0..n_max.

    Uses ``c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)``; only one row is kept.
    """
    row = [1]
    yield row
    for n in range(1, n_max + 1):
        new = [0] * (n + 1)
        for k in range(1, n + 1):
            new[k] = row[k - 1] + (n - 1) * (row[k] if k < n else 0)
        row = new
        yield row


def stirling2_rows(n_max: int) -> Iterator[list[int]]:
    """Rows ``S(n, 0..n)``, via ``S(n,k) = S(n-1,k-1) + k S(n-1,k)``."""
    row = [1]
    yield row
    for n in range(1, n_max + 1):
        new = [0] * (n + 1)
        for k in range(1, n + 1):
            new[k] = row[k - 1] + k * (row[k] if k < n else 0)
        row = new
        yield row


def stirling1(n_max: int) -> list[list[int]]:
    return list(stirling1_rows(n_max))


def stirling2(n_max: int) -> list[list[int]]:
    return list(stirling2_rows(n_max))


def _last(it: Iterator[list[int]]) -> list[int]:
    row: list[int] = []
    for row in it:
        pass
    return row


def stirling1_row(n: int) -> SequenceTable:
    """``c(n,k)`` for ``k = 1..n`` (``k = 0`` for ``n = 0``)."""
    row = _last(stirling1_rows(n))
    start = 0 if n == 0 else 1
    return SequenceTable(f"stirling1({n},k)", tuple(row[start:]), start,
                         Provenance.SHORT_RECURSION)


def stirling2_row(n: int) -> SequenceTable:
    row = _last(stirling2_rows(n))
    start = 0 if n == 0 else 1
    return SequenceTable(f"stirling2({n},k)", tuple(row[start:]), start,
                         Provenance.SHORT_RECURSION)


def bell_poly_coeffs(n: int) -> Polynomial:
    """``P_n(x) = sum_k S(n,k) x^k``."""
    return Polynomial.from_int_coeffs(_last(stirling2_rows(n)))


# -- Motzkin numbers -------------------------------------------------------------


def motzkin_short(n_max: int) -> SequenceTable:
    """``(n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}``, ``M_0 = M_1 = 1``."""
    vals = [1, 1][: n_max + 1]
    for n in range(2, n_max + 1):
        vals.append(_exact((2 * n + 1) * vals[n - 1] + 3 * (n - 1) * vals[n - 2], n + 2,
                           f"Motzkin step n={n}"))
    return SequenceTable("motzkin", tuple(vals), 0, Provenance.SHORT_RECURSION)


def motzkin_long(n_max: int) -> SequenceTable:
    """``M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-k-1}``."""
    vals = [1]
    for n in range(0, n_max):
        vals.append(vals[n] + sum(vals[k] * vals[n - k - 1] for k in range(n)))
    return SequenceTable("motzkin", tuple(vals), 0, Provenance.LONG_RECURSION)


def motzkin_via_catalan(n_max: int) -> SequenceTable:
    """``M_n = sum_k binom(n, 2k) C_k``."""
    c = catalan(n_max // 2).values
    vals = tuple(sum(comb(n, 2 * k) * c[k] for k in range(n // 2 + 1)) for n in range(n_max + 1))
    return SequenceTable("motzkin", vals, 0, Provenance.BINOMIAL_IDENTITY)


def catalan_via_motzkin(n_max: int) -> SequenceTable:
    """``C_{n+1} = sum_k binom(n, k) M_k``, with ``C_0 = 1``."""
    m = motzkin_short(max(n_max - 1, 0)).values
    vals = [1]
    for n in range(0, n_max):
        vals.append(sum(comb(n, k) * m[k] for k in range(n + 1)))
    return SequenceTable("catalan", tuple(vals), 0, Provenance.BINOMIAL_IDENTITY)


# -- secondary structures ----------------------------------------------------------


def sec_struct_rank1(n_max: int) -> SequenceTable:
    """Rank-1 secondary structure numbers from the five-term short recursion."""
    vals = [1, 1, 1, 2][: n_max + 1]
    for n in range(4, n_max + 1):
        rhs = ((2 * n + 1) * vals[n - 1] + (n - 1) * vals[n - 2]
               + (2 * n - 5) * vals[n - 3] - (n - 4) * vals[n - 4])
        vals.append(_exact(rhs, n + 2, f"rank-1 step n={n}"))
    return SequenceTable("secondary(l=1)", tuple(vals), 0, Provenance.SHORT_RECURSION)


def _sec_struct_convolution(l: int, n_max: int) -> list[int]:
    # Last vertex n+1 is unpaired, or paired with j <= n - l; the arc
    # encloses vertices j+1..n and leaves 1..j-1 outside.
    vals = [1]
    for n in range(0, n_max):
        total = vals[n]
        for j in range(1, n - l + 1):
            total += vals[j - 1] * vals[n - j]
        vals.append(total)
    return vals


# Smallest size up to which a derived recursion must agree with enumeration.
SEC_STRUCT_VALIDATION_N = 12


@lru_cache(maxsize=None)
def _validate_sec_struct(l: int, upto: int) -> None:
    from .oracles import enum_secondary

    derived = _sec_struct_convolution(l, upto)
    for n in range(upto + 1):
        expected = enum_secondary(l, n)
        if derived[n] != expected:
            raise OracleMismatch(
                f"secondary structure recursion l={l}: n={n} gives {derived[n]}, "
                f"enumeration gives {expected}")


def sec_struct_general(l: int, n_max: int, validate_upto: int = SEC_STRUCT_VALIDATION_N) -> SequenceTable:
    """Secondary structure numbers of rank ``l >= 0`` by last-vertex decomposition.

    The recursion is checked against exhaustive enumeration for
    ``n <= validate_upto`` before any value is returned.
    """
    if l < 0:
        raise ValueError("the convolution recursion needs l >= 0")
    _validate_sec_struct(l, validate_upto)
    return SequenceTable(f"secondary(l={l})", tuple(_sec_struct_convolution(l, n_max)), 0,
                         Provenance.DERIVED_RECURSION)


# -- Legendre, Delannoy, Schroeder ----------------------------------------------------


def legendre_values(t, n_max: int) -> SequenceTable:
    """``P_n(t)`` from Bonnet's recurrence ``n P_n = (2n-1) t P_{n-1} - (n-1) P_{n-2}``."""
    t = as_rational(t)
    vals: list[Fraction] = [Fraction(1), t][: n_max + 1]
    for n in range(2, n_max + 1):
        vals.append(((2 * n - 1) * t * vals[n - 1] - (n - 1) * vals[n - 2]) / n)
    out: tuple[Number, ...] = tuple(vals)
    if all(v.denominator == 1 for v in vals):
        out = tuple(v.numerator for v in vals)
    return SequenceTable(f"legendre(t={t})", out, 0, Provenance.SHORT_RECURSION)


def delannoy(n_max: int) -> SequenceTable:
    """Central Delannoy numbers as ``P_n(3)``."""
    vals = legendre_values(3, n_max).values
    for n, v in enumerate(vals):
        if Fraction(v).denominator != 1:
            raise NonExactDivision(f"P_{n}(3) = {v} is not an integer")
    return SequenceTable("delannoy", tuple(int(v) for v in vals), 0, Provenance.SHORT_RECURSION)


SCHROEDER_VALIDATION_N = 10


def _schroeder_recursion(n_max: int) -> list[int]:
    # (n+1) r_n = 3(2n-1) r_{n-1} - (n-2) r_{n-2}
    vals = [1, 2][: n_max + 1]
    for n in range(2, n_max + 1):
        vals.append(_exact(3 * (2 * n - 1) * vals[n - 1] - (n - 2) * vals[n - 2], n + 1,
                           f"Schroeder step n={n}"))
    return vals


@lru_cache(maxsize=None)
def _validate_schroeder(upto: int) -> None:
    from .oracles import enum_schroeder

    derived = _schroeder_recursion(upto)
    for n in range(upto + 1):
        expected = enum_schroeder(n)
        if derived[n] != expected:
            raise OracleMismatch(
                f"Schroeder recursion: n={n} gives {derived[n]}, enumeration gives {expected}")


def schroeder(n_max: int, validate_upto: int = SCHROEDER_VALIDATION_N) -> SequenceTable:
    """Big Schroeder numbers from a three-term recursion, gated on enumeration."""
    _validate_schroeder(validate_upto)
    return SequenceTable("schroeder", tuple(_schroeder_recursion(n_max)), 0,
                         Provenance.DERIVED_RECURSION)


# -- ratios ---------------------------------------------------------------------------


def ratio_sequence(t: Union[SequenceTable, Sequence[Number]], start_index: int = 0,
                   name: str = "sequence") -> RatioSequence:
    """``x_n = t[n] / t[n-1]`` for every ``n`` past the first index."""
    if isinstance(t, SequenceTable):
        values, start_index, name = t.values, t.start_index, t.name
    else:
        values = tuple(t)
    for i, v in enumerate(values):
        if v <= 0:
            raise ValueError(f"{name}: non-positive value {v} at index {start_index + i}")
    ratios = tuple(Fraction(values[i]) / values[i - 1] for i in range(1, len(values)))
    return RatioSequence(name, ratios, start_index + 1)


SEQUENCES = {
    "motzkin": motzkin_short,
    "motzkin-long": motzkin_long,
    "motzkin-binomial": motzkin_via_catalan,
    "catalan": catalan,
    "catalan-via-motzkin": catalan_via_motzkin,
    "rank1": sec_struct_rank1,
    "delannoy": delannoy,
    "schroeder": schroeder,
}
