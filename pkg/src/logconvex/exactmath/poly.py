"""Dense univariate polynomials over Q.

A polynomial is stored as a tuple of integer numerators together with one
positive common denominator, reduced so that the content of the numerators
and the denominator are coprime.  The zero polynomial is the empty tuple.
The public view (:attr:`Polynomial.coeffs`) is a tuple of ``Fraction``
objects, lowest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

from .rational import RationalLike, as_rational

# A Mersenne prime, used for the modular coprimality test in ``gcd``.
_PRIME = (1 << 61) - 1


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _content(c: Sequence[int]) -> int:
    g = 0
    for v in c:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _primitive(c: Sequence[int]) -> list[int]:
    """Divide out the content and make the leading coefficient positive."""
    if not c:
        return []
    g = _content(c)
    if c[-1] < 0:
        g = -g
    return [v // g for v in c]


def _int_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _int_add(a: Sequence[int], b: Sequence[int], sa: int = 1, sb: int = 1) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = sa * v
    for i, v in enumerate(b):
        out[i] += sb * v
    return _strip(out)


def _int_prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [v * lb for v in r]
        for i, bv in enumerate(b):
            r[i + shift] -= lr * bv
        r.pop()
        _strip(r)
        e -= 1
    if e > 0 and r:
        f = lb**e
        r = [v * f for v in r]
    return r


def _int_exact_div(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Quotient of integer polynomials known to divide exactly over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c, m = divmod(r[-1], lb)
        if m:
            raise ArithmeticError("polynomial division is not exact over Z")
        q[shift] = c
        for i, bv in enumerate(b):
            r[i + shift] -= c * bv
        r.pop()
        _strip(r)
    if r:
        raise ArithmeticError("polynomial division leaves a remainder")
    return q


def _mod_p_degree_of_gcd(a: Sequence[int], b: Sequence[int], p: int = _PRIME) -> int:
    a = _strip([v % p for v in a])
    b = _strip([v % p for v in b])
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, bv in enumerate(b):
                a[i + shift] = (a[i + shift] - c * bv) % p
            a.pop()
            _strip(a)
        a, b = b, a
    return len(a) - 1


def _int_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd of two integer polynomials, positive leading coefficient."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    a, b = _primitive(a), _primitive(b)
    if len(a) == 1 or len(b) == 1:
        return [1]
    # Reduction mod p cannot lower the degree of the gcd when p divides
    # neither leading coefficient, so degree 0 mod p certifies coprimality.
    if a[-1] % _PRIME and b[-1] % _PRIME and _mod_p_degree_of_gcd(a, b) == 0:
        return [1]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _primitive(r)
    return _primitive(a)


class Polynomial:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        fr = [as_rational(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        self._set([c.numerator * (den // c.denominator) for c in fr], den)

    def _set(self, ints: list[int], den: int) -> None:
        _strip(ints)
        if not ints:
            self._c: tuple[int, ...] = ()
            self._d = 1
        else:
            if den < 0:
                ints = [-v for v in ints]
                den = -den
            g = gcd(_content(ints), den)
            if g != 1:
                ints = [v // g for v in ints]
                den //= g
            self._c = tuple(ints)
            self._d = den
        self._hash = None

    @classmethod
    def _raw(cls, ints: list[int], den: int = 1) -> "Polynomial":
        p = cls.__new__(cls)
        p._set(list(ints), den)
        return p

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._raw([0, 1])

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls([c])

    @classmethod
    def linear(cls, a: RationalLike, b: RationalLike) -> "Polynomial":
        """The polynomial ``a*x + b``."""
        return cls([b, a])

    @classmethod
    def from_int_coeffs(cls, ints: Sequence[int]) -> "Polynomial":
        return cls._raw(list(ints))

    # -- views ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self._d) for v in self._c)

    @property
    def int_coeffs(self) -> tuple[int, ...]:
        """Numerators over the common denominator :attr:`denominator`."""
        return self._c

    @property
    def denominator(self) -> int:
        return self._d

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def is_integral(self) -> bool:
        return self._d == 1

    @property
    def leading(self) -> Fraction:
        if not self._c:
            return Fraction(0)
        return Fraction(self._c[-1], self._d)

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return Fraction(self._c[i], self._d)
        return Fraction(0)

    def primitive(self) -> "Polynomial":
        """Integer primitive part with positive leading coefficient."""
        return Polynomial._raw(_primitive(self._c))

    def monic(self) -> "Polynomial":
        if not self._c:
            return self
        return Polynomial._raw(list(self._c), self._c[-1])

    # -- arithmetic ----------------------------------------------------

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw([-v for v in self._c], self._d)

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._d, other._d
        g = gcd(d1, d2)
        return Polynomial._raw(_int_add(self._c, other._c, d2 // g, d1 // g), d1 // g * d2)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            q = as_rational(other)
            return Polynomial._raw([v * q.numerator for v in self._c], self._d * q.denominator)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial._raw(_int_mul(self._c, other._c), self._d * other._d)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial._raw([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        q = [Fraction(0)] * max(len(r) - db, 0)
        while r and len(r) - 1 >= db:
            c = r[-1] / b[-1]
            shift = len(r) - 1 - db
            q[shift] = c
            for i, bv in enumerate(b):
                r[i + shift] -= c * bv
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return Polynomial(q), Polynomial(r)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient when ``other`` divides ``self``; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        # self = (A/da), other = (B/db): quotient = (A/B) * db/da
        q = _int_exact_div_q(self._c, other._c)
        return Polynomial._raw(q[0], q[1] * self._d) * Fraction(other._d)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Greatest common divisor, normalised to an integer primitive polynomial
        with positive leading coefficient (``0`` only when both are zero)."""
        if self.is_zero() and other.is_zero():
            return self
        return Polynomial._raw(_int_gcd(self._c, other._c))

    def derivative(self) -> "Polynomial":
        return Polynomial._raw([i * v for i, v in enumerate(self._c)][1:], self._d)

    def shift(self, k: RationalLike) -> "Polynomial":
        """Return ``q`` with ``q(x) = self(x + k)`` (iterated synthetic division)."""
        k = as_rational(k)
        if k == 0 or len(self._c) <= 1:
            return self
        n = len(self._c)
        a, b = k.numerator, k.denominator
        # p(x + a/b): scale c_i by b^(n-1-i), shift by a, then unscale.
        c = [v * b ** (n - 1 - i) for i, v in enumerate(self._c)]
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] += a * c[j + 1]
        if b == 1:
            return Polynomial._raw(c, self._d)
        return Polynomial([Fraction(v, self._d * b ** (n - 1 - i)) for i, v in enumerate(c)])

    def scale_var(self, s: RationalLike) -> "Polynomial":
        """Return ``q`` with ``q(x) = self(s*x)``."""
        s = as_rational(s)
        return Polynomial([c * s**i for i, c in enumerate(self.coeffs)])

    def compose(self, other: "Polynomial") -> "Polynomial":
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    # -- evaluation ----------------------------------------------------

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        if not self._c:
            return Fraction(0)
        p, q = x.numerator, x.denominator
        # Horner on the homogenised form keeps everything in integers.
        acc = 0
        qp = 1
        for v in reversed(self._c):
            acc = acc * p + v * qp
            qp *= q
        n = len(self._c) - 1
        return Fraction(acc, q**n * self._d)

    def sign_at(self, x: RationalLike) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, negative: bool = False) -> int:
        if not self._c:
            return 0
        s = 1 if self._c[-1] > 0 else -1
        if negative and self.degree % 2 == 1:
            s = -s
        return s

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._c == other._c and self._d == other._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._c, self._d))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if i == 0:
                body = str(mag)
            else:
                body = "" if mag == 1 else f"{mag}*"
                body += "x" if i == 1 else f"x^{i}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- real-root machinery ---------------------------------------------

    def squarefree_decomposition(self) -> tuple[Fraction, list["Polynomial"]]:
        """Yun's algorithm: ``self = c * prod(f_i ** i)``, ``f_i`` primitive.

        Returns ``(c, [f_1, f_2, ...])``.
        """
        if self.is_zero():
            raise ValueError("zero polynomial has no square-free decomposition")
        if self.degree == 0:
            return self.leading, []
        prim = self.primitive()
        d1 = prim.derivative()
        a0 = prim.gcd(d1)
        b = prim.exact_div(a0)
        cc = d1.exact_div(a0)
        d = cc - b.derivative()
        factors: list[Polynomial] = []
        while not b.is_constant():
            a = b.gcd(d)
            factors.append(a)
            b = b.exact_div(a)
            cc = d.exact_div(a)
            d = cc - b.derivative()
        # Each f_i is primitive with positive leading coefficient.
        factors = [f.primitive() for f in factors]
        prod = Polynomial.constant(1)
        for i, f in enumerate(factors, 1):
            prod = prod * f**i
        c = self.leading / prod.leading
        return c, factors

    def sturm_sequence(self) -> list["Polynomial"]:
        """Signed remainder sequence ``p, p', -rem(p, p'), ...``.

        Each term is rescaled by a positive constant to keep integer
        coefficients small; sign variations are unaffected.
        """
        if self.is_zero():
            return []
        seq = [self.primitive() * (1 if self.leading > 0 else -1)]
        d = self.derivative()
        if d.is_zero():
            return seq
        seq.append(_positive_rescale(d))
        # Pseudo-remainders stay in Z; prem = lc(b)**e * rem, so the sign
        # of lc(b)**e is undone to keep the true Sturm signs.
        while True:
            a, b = seq[-2]._c, seq[-1]._c
            r = _int_prem(a, b)
            if not r:
                break
            e = len(a) - len(b) + 1
            sign = -1 if b[-1] < 0 and e % 2 == 1 else 1
            g = _content(r)
            seq.append(Polynomial._raw([-sign * v // g for v in r]))
        return seq

    def count_roots(self, lo: RationalLike, hi: RationalLike) -> int:
        """Number of distinct real roots in the half-open interval ``(lo, hi]``."""
        lo, hi = as_rational(lo), as_rational(hi)
        if lo >= hi:
            raise ValueError("need lo < hi")
        if self.is_zero():
            raise ValueError("zero polynomial has infinitely many roots")
        sf = self.squarefree_part()
        seq = sf.sturm_sequence()
        extra = 0
        if sf(lo) == 0:
            # Sturm counting needs endpoints that are not roots.
            sf = sf.exact_div(Polynomial.linear(lo.denominator, -lo.numerator))
            seq = sf.sturm_sequence()
        if sf(hi) == 0:
            sf = sf.exact_div(Polynomial.linear(hi.denominator, -hi.numerator))
            seq = sf.sturm_sequence()
            extra = 1
        return _variations(seq, lo) - _variations(seq, hi) + extra

    def squarefree_part(self) -> "Polynomial":
        if self.degree <= 0:
            return self.primitive() if not self.is_zero() else self
        g = self.gcd(self.derivative())
        return self.primitive().exact_div(g).primitive()

    def positive_on_interval(self, lo: RationalLike, hi: RationalLike) -> bool:
        return sturm_positive_on_interval(self, lo, hi)

    def odd_multiplicity_part(self) -> tuple[Fraction, "Polynomial"]:
        """``(c, f)`` where ``f`` is the product of the square-free factors of odd
        multiplicity and ``c`` the constant from the decomposition; ``self`` and
        ``c*f`` have the same sign wherever ``self`` does not vanish."""
        c, factors = self.squarefree_decomposition()
        f = Polynomial.constant(1)
        for i, fac in enumerate(factors, 1):
            if i % 2 == 1:
                f = f * fac
        return c, f


def _int_exact_div_q(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], int]:
    """Divide over Q, returning integer numerators and a denominator."""
    lb = b[-1]
    db = len(b) - 1
    n = len(a) - db
    if n <= 0:
        raise ArithmeticError("polynomial division leaves a remainder")
    # Scale a so the division becomes exact over Z.
    f = abs(lb) ** n
    q = _int_exact_div([v * f for v in a], b)
    return q, f


def _coerce(other) -> "Polynomial":
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        return Polynomial.constant(other)
    return NotImplemented


def _positive_rescale(p: Polynomial) -> Polynomial:
    prim = p.primitive()
    return prim if p.leading > 0 else -prim


def _variations(seq: Sequence[Polynomial], x: Fraction) -> int:
    signs = [s for s in (p.sign_at(x) for p in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_positive_on_interval(p: Polynomial, lo: RationalLike, hi: RationalLike) -> bool:
    """True iff ``p(x) > 0`` for every ``x`` in the open interval ``(lo, hi)``."""
    lo, hi = as_rational(lo), as_rational(hi)
    if lo >= hi:
        raise ValueError("need lo < hi")
    if p.is_zero():
        return False
    if p.degree == 0:
        return p.leading > 0
    roots = p.count_roots(lo, hi)
    if p(hi) == 0:
        roots -= 1
    if roots:
        return False
    return p((lo + hi) / 2) > 0


def binomial_shift_reference(p: Polynomial, k: int) -> Polynomial:
    """``p(x + k)`` by direct binomial expansion; an independent route used in tests."""
    out = [Fraction(0)] * (p.degree + 1)
    for i, c in enumerate(p.coeffs):
        for j in range(i + 1):
            out[j] += c * comb(i, j) * Fraction(k) ** (i - j)
    return Polynomial(out)
