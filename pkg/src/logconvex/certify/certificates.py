"""Monotonicity and bound certificates for patchworks, and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .. import __version__
from ..exactmath import Polynomial, RationalFunction, as_rational, rational_str
from .patchwork import Patchwork
from .positivity import DEFAULT_K_MAX, PositivityRecord, prove_positive

FORMAT = "logconvex-certificate"
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class IntervalRecord:
    n: int
    lo: Fraction
    hi: Fraction
    denominator_sign: int
    denominator_check: PositivityRecord
    checks: tuple[tuple[str, PositivityRecord], ...]
    derivative: Optional[RationalFunction] = None

    @property
    def verdict(self) -> bool:
        return self.denominator_check.verdict and all(r.verdict for _, r in self.checks)

    @property
    def numerator(self) -> Polynomial:
        return self.checks[0][1].poly

    @property
    def method(self) -> str:
        return self.checks[0][1].method

    @property
    def k(self) -> Optional[int]:
        return self.checks[0][1].k


@dataclass(frozen=True)
class JunctionRecord:
    x: Fraction
    left_n: int
    right_n: int
    left: Fraction
    right: Fraction


@dataclass(frozen=True)
class MonotonicityCertificate:
    patchwork: Patchwork
    intervals: tuple[IntervalRecord, ...]
    junctions: tuple[JunctionRecord, ...]
    strict: bool
    k_max: int

    @property
    def verdict(self) -> bool:
        return (all(r.verdict for r in self.intervals)
                and all(j.right >= j.left for j in self.junctions))

    def interval(self, n: int) -> IntervalRecord:
        for r in self.intervals:
            if r.n == n:
                return r
        raise KeyError(n)

    def to_dict(self) -> dict[str, Any]:
        return _document(self, "monotonicity")


@dataclass(frozen=True)
class BoundCertificate:
    patchwork: Patchwork
    lower: Optional[Fraction]
    upper: Optional[Fraction]
    from_x: Fraction
    intervals: tuple[IntervalRecord, ...]
    junctions: tuple[JunctionRecord, ...]
    k_max: int

    strict = False

    @property
    def verdict(self) -> bool:
        ok = all(r.verdict for r in self.intervals)
        for j in self.junctions:
            for v in (j.left, j.right):
                if self.lower is not None and v < self.lower:
                    ok = False
                if self.upper is not None and v > self.upper:
                    ok = False
        return ok

    def to_dict(self) -> dict[str, Any]:
        return _document(self, "bounds")


def _denominator(den: Polynomial, lo: Fraction, hi: Fraction, k_max: int):
    sign = den.sign_at((lo + hi) / 2)
    if sign == 0:
        sign = 1
    return sign, prove_positive(den * sign, lo, hi, k_max, strict=True)


def _ranges(p: Patchwork, from_x, to_n):
    from_x = as_rational(p.start if from_x is None else from_x)
    last = p.end - 1 if to_n is None else to_n
    for n in p.intervals():
        if n > last or n + 1 <= from_x:
            continue
        yield n, max(Fraction(n), from_x), Fraction(n + 1)


def certify_increasing(p: Patchwork, k_max: int = DEFAULT_K_MAX, strict: bool = False,
                       from_n: Optional[int] = None, to_n: Optional[int] = None,
                       prefer_k: Optional[int] = None) -> MonotonicityCertificate:
    """Certify ``f' >= 0`` (``> 0`` when ``strict``) on every open unit interval,
    plus non-negative jumps at the junctions in range."""
    records = []
    for n, lo, hi in _ranges(p, from_n, to_n):
        d = p.piece(n).derivative()
        s, den_rec = _denominator(d.den, lo, hi, k_max)
        num_rec = prove_positive(d.num * s, lo, hi, k_max, strict=strict, prefer_k=prefer_k)
        records.append(IntervalRecord(n, lo, hi, s, den_rec, (("numerator_check", num_rec),), d))
    first = records[0].n if records else p.start
    last = records[-1].n if records else p.start
    junctions = tuple(
        JunctionRecord(Fraction(j.x), j.x - 1, j.x, j.left, j.right)
        for j in p.junctions if first < j.x <= last)
    return MonotonicityCertificate(p, tuple(records), junctions, strict, k_max)


def certify_bounds(p: Patchwork, lo=None, hi=None, from_x=None, to_n: Optional[int] = None,
                   k_max: int = DEFAULT_K_MAX) -> BoundCertificate:
    """Certify ``lo <= f <= hi`` on ``[from_x, end]``; either bound may be ``None``."""
    lower = None if lo is None else as_rational(lo)
    upper = None if hi is None else as_rational(hi)
    records = []
    for n, a, b in _ranges(p, from_x, to_n):
        piece = p.piece(n)
        s, den_rec = _denominator(piece.den, a, b, k_max)
        checks = []
        if lower is not None:
            poly = (piece.num - piece.den * lower) * s
            checks.append(("lower_check", prove_positive(poly, a, b, k_max)))
        if upper is not None:
            poly = (piece.den * upper - piece.num) * s
            checks.append(("upper_check", prove_positive(poly, a, b, k_max)))
        records.append(IntervalRecord(n, a, b, s, den_rec, tuple(checks)))
    junctions = []
    if records:
        first, last = records[0], records[-1]
        junctions.append(_point(p, first.lo, first.n, first.n))
        for r in records[1:]:
            junctions.append(_point(p, r.lo, r.n - 1, r.n))
        junctions.append(_point(p, last.hi, last.n, last.n))
    start = records[0].lo if records else as_rational(from_x or p.start)
    return BoundCertificate(p, lower, upper, start, tuple(records), tuple(junctions), k_max)


def _point(p: Patchwork, x: Fraction, left_n: int, right_n: int) -> JunctionRecord:
    return JunctionRecord(x, left_n, right_n, p.piece(left_n)(x), p.piece(right_n)(x))


# -- serialization ---------------------------------------------------------------


def _ints(p: Polynomial) -> list[str]:
    return [rational_str(c) for c in p.coeffs]


def _rf(r: RationalFunction) -> dict[str, list[str]]:
    return {"num": _ints(r.num), "den": _ints(r.den)}


def _positivity(rec: PositivityRecord) -> dict[str, Any]:
    out: dict[str, Any] = {
        "method": rec.method,
        "strict": rec.strict,
        "poly": _ints(rec.poly),
        "verdict": rec.verdict,
    }
    if rec.method == "shift":
        out["k"] = rec.k
        out["anchor"] = rational_str(rec.anchor)
    else:
        w = rec.witness or {}
        out["witness"] = {
            "mode": w.get("mode"),
            "tested": _ints(w["tested"]) if "tested" in w else [],
            "roots_in_interval": w.get("roots_in_interval"),
            "sample": rational_str(w["sample"]) if "sample" in w else None,
            "sample_sign": w.get("sample_sign"),
        }
    return out


def _document(cert, kind: str) -> dict[str, Any]:
    p = cert.patchwork
    spec = p.spec
    needed = max(r.n for r in cert.intervals) if cert.intervals else p.start
    doc: dict[str, Any] = {
        "format": FORMAT,
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "type": kind,
        "patchwork": {
            "kind": spec.kind,
            "t": None if spec.t is None else rational_str(spec.t),
            "base": [n for n, _ in spec.base],
            "pieces": [dict(n=n, **_rf(p.piece(n))) for n in range(p.start, needed + 1)],
        },
        "range": {
            "from": rational_str(cert.intervals[0].lo) if cert.intervals else None,
            "to": rational_str(cert.intervals[-1].hi) if cert.intervals else None,
        },
        "k_max": cert.k_max,
        "strict": cert.strict,
        "intervals": [],
        "junctions": [
            {"x": rational_str(j.x), "left_n": j.left_n, "right_n": j.right_n,
             "left": rational_str(j.left), "right": rational_str(j.right)}
            for j in cert.junctions
        ],
        "verdict": cert.verdict,
    }
    if kind == "bounds":
        doc["lower"] = None if cert.lower is None else rational_str(cert.lower)
        doc["upper"] = None if cert.upper is None else rational_str(cert.upper)
    for r in cert.intervals:
        item: dict[str, Any] = {
            "n": r.n,
            "interval": [rational_str(r.lo), rational_str(r.hi)],
            "denominator_sign": r.denominator_sign,
            "denominator_check": _positivity(r.denominator_check),
            "verdict": r.verdict,
        }
        if r.derivative is not None:
            item["derivative"] = _rf(r.derivative)
        for key, rec in r.checks:
            item[key] = _positivity(rec)
        doc["intervals"].append(item)
    return doc


def dumps(cert) -> str:
    return json.dumps(cert.to_dict(), sort_keys=True, indent=1)
