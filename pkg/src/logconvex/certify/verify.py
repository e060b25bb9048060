"""Independent re-checking of serialized certificates.

The verifier reads only the JSON document.  It does not use the
:mod:`logconvex.exactmath` polynomial classes or the prover: coefficient
lists are plain lists of ``Fraction``, Taylor shifts are recomputed by
binomial expansion, Sturm chains by a separate long-division routine, and
every stored piece is checked against the step rule by exact evaluation
at rational sample points.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Any, Sequence

from .patchwork import STEP_RULES

Poly = list  # list[Fraction], lowest degree first


class VerificationError(AssertionError):
    pass


def _fail(msg: str):
    raise VerificationError(msg)


def _poly(coeffs: Sequence[str]) -> Poly:
    return list(_parse(tuple(coeffs)))


@lru_cache(maxsize=4096)
def _parse(coeffs: tuple) -> tuple:
    # Integers stay ints (much faster arithmetic); anything else a Fraction.
    out = []
    for c in coeffs:
        q = Fraction(c)
        out.append(q.numerator if q.denominator == 1 else q)
    return tuple(_trim(out))


def _trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _scale(a: Poly, c) -> Poly:
    return _trim([c * v for v in a])


def _deriv(a: Poly) -> Poly:
    return _trim([i * c for i, c in enumerate(a)][1:])


def _binomial_shift(p: Poly, a: Fraction) -> Poly:
    """Coefficients of ``p(x + a)`` times a positive constant.

    With ``a = u/v`` and ``p`` scaled to integers, ``v**deg * p(x + u/v)``
    has integer coefficients, so the sign test runs without fractions.
    """
    a = Fraction(a)
    u, v = a.numerator, a.denominator
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(c * den) for c in p]
    d = len(ints) - 1
    out = [0] * len(ints)
    upow = [u**e for e in range(d + 1)]
    vpow = [v**e for e in range(d + 1)]
    for i, c in enumerate(ints):
        if c:
            for j in range(i + 1):
                out[j] += c * comb(i, j) * upow[i - j] * vpow[d - i + j]
    return out


def _divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while a and len(a) >= len(b):
        c = a[-1] / b[-1]
        s = len(a) - len(b)
        q[s] = c
        for i, bv in enumerate(b):
            a[i + s] -= c * bv
        a = _trim(a[:-1])
    return _trim(q), a


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _deflate(p: Poly, r: Fraction) -> Poly:
    while len(p) > 1 and _eval(p, r) == 0:
        p, rem = _divmod(p, [-r, Fraction(1)])
        assert not rem
    return p


def _roots_in_open_interval(p: Poly, lo: Fraction, hi: Fraction) -> int:
    p = _deflate(_deflate(p, lo), hi)
    if len(p) <= 1:
        return 0
    seq = [p, _deriv(p)]
    while True:
        _, r = _divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_scale(r, -1))

    def variations(x):
        s = [v for v in (_sign(_eval(q, x)) for q in seq) if v]
        return sum(1 for u, v in zip(s, s[1:]) if u != v)

    return variations(lo) - variations(hi)


def _is_positive_square(q: Poly) -> bool:
    """``q = c * h**2`` with a rational constant ``c > 0``."""
    if not q or q[-1] <= 0 or (len(q) - 1) % 2:
        return False
    m = [c / q[-1] for c in q]
    d = (len(m) - 1) // 2
    h = [Fraction(0)] * (d + 1)
    h[d] = Fraction(1)
    # match coefficients from the top down
    for i in range(d - 1, -1, -1):
        acc = m[d + i] - sum(h[j] * h[d + i - j] for j in range(i + 1, d))
        h[i] = acc / 2
    return _mul(h, h) == _trim(m)


def check_positivity(rec: dict, poly: Poly, lo: Fraction, hi: Fraction) -> bool:
    """Confirm one positivity record for ``poly`` on ``(lo, hi)``; return its verdict."""
    if _poly(rec["poly"]) != poly:
        _fail(f"positivity record on ({lo}, {hi}) is about a different polynomial")
    strict = bool(rec["strict"])
    claimed = bool(rec["verdict"])
    if rec["method"] == "shift":
        k = int(rec["k"])
        if k < 0 or Fraction(rec["anchor"]) != lo - k:
            _fail("shift record with an inconsistent expansion point")
        shifted = _binomial_shift(poly, lo - k)
        ok = all(c >= 0 for c in shifted) and (not strict or any(c > 0 for c in shifted))
        if not ok or not claimed:
            _fail(f"shift k={k} does not certify ({lo}, {hi})")
        return True
    if rec["method"] != "sturm":
        _fail(f"unknown method {rec['method']!r}")
    w = rec["witness"]
    tested = _poly(w.get("tested", []))
    if not poly:
        ok = False
    else:
        if strict:
            if tested != poly:
                _fail("strict Sturm witness is not the polynomial itself")
        else:
            quotient, rem = _divmod(poly, tested) if tested else ([], poly)
            if rem or not _is_positive_square(quotient):
                _fail("weak Sturm witness is not an odd-multiplicity part of the polynomial")
        ok = (_roots_in_open_interval(tested, lo, hi) == 0
              and _eval(tested, (lo + hi) / 2) > 0)
    if ok != claimed:
        _fail(f"Sturm verdict {claimed} not reproduced on ({lo}, {hi})")
    return ok


class _Pair:
    """Unreduced quotient ``p/q`` of integers.  Skipping the gcd keeps
    pointwise evaluation of the step rules cheap; equality is by cross
    multiplication."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int = 1):
        if q == 0:
            raise ZeroDivisionError("zero denominator")
        self.p, self.q = p, q

    @staticmethod
    def of(v) -> "_Pair":
        if isinstance(v, _Pair):
            return v
        v = Fraction(v)
        return _Pair(v.numerator, v.denominator)

    def __add__(self, o):
        o = _Pair.of(o)
        return _Pair(self.p * o.q + o.p * self.q, self.q * o.q)

    __radd__ = __add__

    def __sub__(self, o):
        o = _Pair.of(o)
        return _Pair(self.p * o.q - o.p * self.q, self.q * o.q)

    def __rsub__(self, o):
        return _Pair.of(o) - self

    def __mul__(self, o):
        o = _Pair.of(o)
        return _Pair(self.p * o.p, self.q * o.q)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _Pair.of(o)
        return _Pair(self.p * o.q, self.q * o.p)

    def __rtruediv__(self, o):
        return _Pair.of(o) / self

    def __eq__(self, o):
        o = _Pair.of(o)
        return self.p * o.q == o.p * self.q


def _int_eval(p: Poly, x: int) -> _Pair:
    den = 1
    for c in p:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    acc = 0
    for c in reversed(p):
        acc = acc * x + (c * den if type(c) is int else c.numerator * (den // c.denominator))
    return _Pair(acc, den)


def _pair_eval(rf: dict, x: int) -> _Pair:
    return _int_eval(_poly(rf["num"]), x) / _int_eval(_poly(rf["den"]), x)


def _degree(rf: dict) -> int:
    return max(len(_poly(rf["num"])), len(_poly(rf["den"]))) - 1


def _rf_eval(rf: dict, x: Fraction) -> Fraction:
    return _eval(_poly(rf["num"]), x) / _eval(_poly(rf["den"]), x)


def _identity_points(n: int, count: int, pieces: dict, depth: int) -> list[int]:
    """``count`` integers at which the piece on ``[n, n+1]`` and all pieces it
    reads have non-vanishing denominators."""
    pts: list[int] = []
    x = n + 1
    while len(pts) < count:
        x += 1
        if x == 0:
            continue
        dens = [_poly(pieces[n]["den"])] + [_poly(pieces[n - i]["den"]) for i in range(1, depth + 1)]
        shifts = [0] + list(range(1, depth + 1))
        if all(_int_eval(d, x - s).p != 0 for d, s in zip(dens, shifts)):
            pts.append(x)
    return pts


def _check_chain(doc: dict) -> dict[int, dict]:
    from .patchwork import PatchworkSpec

    pw = doc["patchwork"]
    kind = pw["kind"]
    if kind not in STEP_RULES:
        _fail(f"unknown patchwork kind {kind!r}")
    step, depth = STEP_RULES[kind]
    t = Fraction(pw["t"]) if pw.get("t") is not None else None
    pieces = {int(p["n"]): {"num": p["num"], "den": p["den"]} for p in pw["pieces"]}
    spec = PatchworkSpec.by_name(kind, t)
    for n, base in spec.base:
        expected = {"num": [str(c) for c in base.num.coeffs], "den": [str(c) for c in base.den.coeffs]}
        if n in pieces and pieces[n] != expected:
            _fail(f"base piece on [{n}, {n + 1}] altered")
    base_ns = {n for n, _ in spec.base}
    for n in sorted(pieces):
        if not _poly(pieces[n]["den"]):
            _fail(f"zero denominator on [{n}, {n + 1}]")
        if n in base_ns:
            continue
        if not all(n - i in pieces for i in range(1, depth + 1)):
            _fail(f"piece on [{n}, {n + 1}] lacks its predecessors")
        # The rule applied to pieces of degree m_i gives a quotient whose
        # numerator and denominator have degree at most 1 + sum(m_i).  Two
        # such quotients agreeing at more points than the degree of their
        # cross difference are identical.
        bound = 1 + sum(_degree(pieces[n - i]) for i in range(1, depth + 1))
        count = _degree(pieces[n]) + bound + 1
        for x in _identity_points(n, count, pieces, depth):
            prev = [_pair_eval(pieces[n - i], x - i) for i in range(1, depth + 1)]
            if any(v.p == 0 for v in prev) or _pair_eval(pieces[n], x) != step(_Pair(x), prev, t):
                _fail(f"piece on [{n}, {n + 1}] does not satisfy the recursion at x={x}")
    return pieces


def verify_certificate(doc: dict[str, Any]) -> bool:
    """Re-check a serialized certificate; return the overall verdict.

    Raises :class:`VerificationError` when any stored datum fails to
    reproduce, or when the document is malformed.
    """
    try:
        return _verify(doc)
    except VerificationError:
        raise
    except (KeyError, IndexError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise VerificationError(f"malformed certificate: {type(exc).__name__}: {exc}") from None


def _verify(doc: dict[str, Any]) -> bool:
    if doc.get("format") != "logconvex-certificate":
        _fail("not a logconvex certificate")
    pieces = _check_chain(doc)
    kind = doc["type"]
    lower = Fraction(doc["lower"]) if kind == "bounds" and doc.get("lower") is not None else None
    upper = Fraction(doc["upper"]) if kind == "bounds" and doc.get("upper") is not None else None

    overall = True
    for rec in doc["intervals"]:
        n = int(rec["n"])
        lo, hi = Fraction(rec["interval"][0]), Fraction(rec["interval"][1])
        if not (n <= lo < hi <= n + 1):
            _fail(f"interval ({lo}, {hi}) is not inside [{n}, {n + 1}]")
        num, den = _poly(pieces[n]["num"]), _poly(pieces[n]["den"])
        s = int(rec["denominator_sign"])
        if s not in (1, -1):
            _fail("denominator sign must be +1 or -1")
        if kind == "monotonicity":
            dn, dd = _poly(rec["derivative"]["num"]), _poly(rec["derivative"]["den"])
            lhs = _mul(dn, _mul(den, den))
            rhs = _mul(_sub(_mul(_deriv(num), den), _mul(num, _deriv(den))), dd)
            if lhs != rhs or not dd or (not dn and dd != [1]):
                _fail(f"derivative on [{n}, {n + 1}] does not match the piece")
            den_poly = dd
            checks = [("numerator_check", _scale(dn, s))]
        else:
            den_poly = den
            checks = []
            if lower is not None:
                checks.append(("lower_check", _scale(_sub(num, _scale(den, lower)), s)))
            if upper is not None:
                checks.append(("upper_check", _scale(_sub(_scale(den, upper), num), s)))
        verdict = check_positivity(rec["denominator_check"], _scale(den_poly, s), lo, hi)
        if not rec["denominator_check"]["strict"]:
            _fail("denominator positivity must be strict")
        for key, poly in checks:
            verdict = check_positivity(rec[key], poly, lo, hi) and verdict
        if bool(rec["verdict"]) != verdict:
            _fail(f"interval verdict on [{n}, {n + 1}] inconsistent")
        overall = overall and verdict

    for j in doc["junctions"]:
        x = Fraction(j["x"])
        left = _rf_eval(pieces[int(j["left_n"])], x)
        right = _rf_eval(pieces[int(j["right_n"])], x)
        if left != Fraction(j["left"]) or right != Fraction(j["right"]):
            _fail(f"junction values at x={x} not reproduced")
        if kind == "monotonicity":
            overall = overall and right >= left
        else:
            for v in (left, right):
                if lower is not None and v < lower:
                    overall = False
                if upper is not None and v > upper:
                    overall = False

    if bool(doc["verdict"]) != overall:
        _fail("overall verdict not reproduced")
    return overall
