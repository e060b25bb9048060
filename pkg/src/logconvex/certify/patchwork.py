"""Piecewise-rational continuous extensions of ratio recursions.

A patchwork is fixed on a few base unit intervals and then, interval by
interval, defined by substituting the already-built pieces (shifted by
1, 2, ...) into the recursion for the ratios.  The step rules below are
written with ordinary arithmetic operators, so the same code runs on
:class:`RationalFunction` (symbolic construction) and on ``Fraction``
(pointwise re-evaluation by the verifier).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from ..exactmath import Polynomial, RationalFunction, as_rational, rational_str

StepRule = Callable[..., object]


class PatchworkError(ArithmeticError):
    pass


class PoleError(PatchworkError):
    pass


class ContinuityError(PatchworkError):
    pass


def motzkin_step(x, prev: Sequence, t=None):
    f1 = prev[0]
    return (2 * x + 1) / (x + 2) + 3 * (x - 1) / ((x + 2) * f1)


def rank1_step(x, prev: Sequence, t=None):
    f1, f2, f3 = prev[0], prev[1], prev[2]
    return (2 * x + 1 + (x - 1) / f1 + (2 * x - 5) / (f1 * f2)
            - (x - 4) / (f1 * f2 * f3)) / (x + 2)


def legendre_step(x, prev: Sequence, t=None):
    f1 = prev[0]
    return t * (2 * x - 1) / x - (x - 1) / (x * f1)


STEP_RULES: dict[str, tuple[StepRule, int]] = {
    "motzkin": (motzkin_step, 1),
    "rank1": (rank1_step, 3),
    "rank1-literal": (rank1_step, 3),
    "legendre": (legendre_step, 1),
}


@dataclass(frozen=True)
class PatchworkSpec:
    """What to build: base pieces plus the recursion that extends them.

    ``base`` maps the left endpoint ``n`` of each base interval ``[n, n+1]``
    to its piece.  ``allow_jumps`` admits discontinuities at junctions; they
    are recorded instead of raising.
    """

    kind: str
    base: tuple[tuple[int, RationalFunction], ...]
    t: Optional[Fraction] = None
    allow_jumps: bool = False
    note: str = ""

    @property
    def step_rule(self) -> StepRule:
        return STEP_RULES[self.kind][0]

    @property
    def depth(self) -> int:
        return STEP_RULES[self.kind][1]

    @property
    def start(self) -> int:
        return self.base[0][0]

    @property
    def base_interval(self) -> tuple[int, int]:
        return self.base[0][0], self.base[-1][0] + 1

    @property
    def label(self) -> str:
        if self.kind == "legendre":
            return f"legendre(t={rational_str(self.t)})"
        return self.kind

    @classmethod
    def motzkin(cls) -> "PatchworkSpec":
        return cls("motzkin", ((2, RationalFunction.constant(2)),))

    @classmethod
    def rank1(cls) -> "PatchworkSpec":
        """Continuous rank-1 patchwork: ``x - 1`` on [2,3], then 2 on [3,5].

        The linear base piece makes ``f(2) = x_2 = 1``, which is what the
        recursion reads at ``x = 5``; with it every junction is continuous
        and ``f(n) = x_n`` for all integers ``n >= 2``.
        """
        two = RationalFunction.constant(2)
        return cls("rank1", ((2, RationalFunction(Polynomial([-1, 1]))), (3, two), (4, two)))

    @classmethod
    def rank1_literal(cls) -> "PatchworkSpec":
        """Constant 2 on all of [2,5], literally.  The recursion then reads
        ``f(2) = 2`` although ``x_2 = 1``, so pieces jump at every junction;
        the jumps are recorded (and some are negative)."""
        two = RationalFunction.constant(2)
        return cls("rank1-literal", ((2, two), (3, two), (4, two)), allow_jumps=True,
                   note="constant base on [2,5]; discontinuous at every junction from x=5")

    @classmethod
    def legendre(cls, t) -> "PatchworkSpec":
        t = as_rational(t)
        return cls("legendre", ((0, RationalFunction.constant(t)),), t=t)

    @classmethod
    def by_name(cls, name: str, t=None) -> "PatchworkSpec":
        if name == "motzkin":
            return cls.motzkin()
        if name == "rank1":
            return cls.rank1()
        if name == "rank1-literal":
            return cls.rank1_literal()
        if name == "legendre":
            if t is None:
                raise ValueError("legendre patchwork needs t")
            return cls.legendre(t)
        raise ValueError(f"unknown patchwork kind {name!r}")


@dataclass(frozen=True)
class Junction:
    x: int
    left: Fraction   # limit from the left: previous piece at x
    right: Fraction  # next piece at x

    @property
    def jump(self) -> Fraction:
        return self.right - self.left


@dataclass(frozen=True)
class Patchwork:
    spec: PatchworkSpec
    pieces: tuple[RationalFunction, ...]
    junctions: tuple[Junction, ...] = field(default=())

    @property
    def start(self) -> int:
        return self.spec.start

    @property
    def end(self) -> int:
        """Right end of the last interval."""
        return self.start + len(self.pieces)

    def intervals(self) -> range:
        """Left endpoints of the unit intervals covered."""
        return range(self.start, self.end)

    def piece(self, n: int) -> RationalFunction:
        if not self.start <= n < self.end:
            raise IndexError(f"no piece on [{n}, {n + 1}]")
        return self.pieces[n - self.start]

    def is_base(self, n: int) -> bool:
        return n < self.spec.base_interval[1]

    def __call__(self, x) -> Fraction:
        """Evaluate; at an integer junction the piece to its right is used."""
        x = as_rational(x)
        if not self.start <= x <= self.end:
            raise ValueError(f"x = {x} outside [{self.start}, {self.end}]")
        n = min(x.numerator // x.denominator, self.end - 1)
        return self.piece(n)(x)

    def is_continuous(self) -> bool:
        return all(j.jump == 0 for j in self.junctions)


def _check_no_pole(piece: RationalFunction, n: int) -> None:
    den = piece.den
    if den.is_constant():
        return
    # Fast path: one strict sign for every coefficient of den(x + n) rules
    # out roots on [n, oo) without a Sturm chain.
    shifted = den.shift(n).int_coeffs
    if shifted[0] != 0 and (all(c >= 0 for c in shifted) or all(c <= 0 for c in shifted)):
        return
    if den(n) == 0 or den(n + 1) == 0 or den.count_roots(n, n + 1) > 0:
        raise PoleError(f"piece on [{n}, {n + 1}] has a pole: denominator {den}")


def build_patchwork(spec: PatchworkSpec, upto: int) -> Patchwork:
    """Pieces on ``[n, n+1]`` for every ``n`` from the base start to ``upto``."""
    base_end = spec.base_interval[1]
    if upto < base_end - 1:
        raise ValueError(f"upto={upto} ends inside the base interval {spec.base_interval}")
    x = RationalFunction.x()
    pieces = [piece for _, piece in spec.base]
    for n, piece in spec.base:
        _check_no_pole(piece, n)
    junctions: list[Junction] = []
    start = spec.start
    for n in range(start + 1, upto + 1):
        if n >= base_end:
            prev = [pieces[n - i - start].shift(-i) for i in range(1, spec.depth + 1)]
            piece = spec.step_rule(x, prev, spec.t)
            _check_no_pole(piece, n)
            pieces.append(piece)
        j = Junction(n, pieces[n - 1 - start](n), pieces[n - start](n))
        if j.jump != 0 and not spec.allow_jumps:
            raise ContinuityError(
                f"{spec.label}: pieces disagree at x={n}: {j.left} vs {j.right}")
        junctions.append(j)
    return Patchwork(spec, tuple(pieces), tuple(junctions))


def integer_point_mismatches(p: Patchwork, ratios) -> list[tuple[int, str, Fraction, Fraction]]:
    """Where ``piece_n(n) != x_n`` or ``piece_n(n+1) != x_{n+1}``.

    Returns ``(n, side, piece value, ratio)`` tuples; empty means consistent.
    """
    bad = []
    for n in p.intervals():
        piece = p.piece(n)
        for side, point in (("left", n), ("right", n + 1)):
            if point < ratios.start_index or point > ratios.end_index:
                continue
            v = piece(point)
            if v != ratios[point]:
                bad.append((n, side, v, ratios[point]))
    return bad
