"""Acceptance checks, one test per criterion.

Each test prints a single ``PASS`` or ``FAIL`` line with its wall time so the
verdicts are visible in ``pytest -v`` output even when everything passes.
Run ``python3 tests/test_acceptance.py`` for the same lines without pytest.
"""

import json
import time
from contextlib import contextmanager
from fractions import Fraction as F
from math import comb

import pytest

from logconvex.certify import (
    PatchworkSpec,
    VerificationError,
    alpha_root,
    asymptotic_check_motzkin,
    build_patchwork,
    certify_bounds,
    certify_increasing,
    check_log_behavior,
    dumps,
    interlace_check,
    limit_report,
    series_identity_check,
    surd_in_interval,
    verify_certificate,
)
from logconvex.exactmath import QuadraticSurd, RationalFunction
from logconvex.oracles import (
    enum_delannoy,
    enum_dyck,
    enum_motzkin,
    enum_partitions_by_blocks,
    enum_permutations_by_cycles,
    enum_schroeder,
    enum_secondary,
)
from logconvex.sequences import (
    binomial_row,
    catalan,
    delannoy,
    legendre_values,
    motzkin_long,
    motzkin_short,
    motzkin_via_catalan,
    narayana,
    narayana_row,
    ratio_sequence,
    schroeder,
    sec_struct_rank1,
    stirling1_row,
    stirling2_row,
)

X = RationalFunction.x()


@contextmanager
def criterion(capsys, number, title, seconds):
    """Time the block and print one verdict line; exceptions count as FAIL."""
    start = time.perf_counter()
    outcome = "FAIL"
    try:
        yield
        outcome = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        if outcome == "PASS" and elapsed > seconds:
            outcome = "FAIL"
        line = f"criterion {number:2d} {outcome}: {title} ({elapsed:.2f}s, limit {seconds}s)"
        if capsys is None:
            print(line)
        else:
            with capsys.disabled():
                print("\n" + line)
    assert elapsed <= seconds, f"criterion {number} took {elapsed:.1f}s"


def test_criterion_01_motzkin_pieces(capsys):
    with criterion(capsys, 1, "Motzkin patchwork pieces on [3,4] and [4,5]", 1):
        p = build_patchwork(PatchworkSpec.motzkin(), 5)
        assert p.piece(3) == (7 * X - 1) / (2 * (X + 2))
        assert p.piece(4) == (20 * X * X - 9 * X - 14) / (7 * X * X + 6 * X - 16)


def test_criterion_02_rank1_shift_two(capsys):
    with criterion(capsys, 2, "rank-1 patchwork to 60 increasing by shift with k=2", 120):
        p = build_patchwork(PatchworkSpec.rank1(), 60)
        cert = certify_increasing(p, from_n=5, prefer_k=2)
        assert cert.verdict
        assert [r.n for r in cert.intervals] == list(range(5, 61))
        for r in cert.intervals:
            assert r.method == "shift" and r.k == 2, r.n
        assert verify_certificate(json.loads(dumps(cert))) is True


def test_criterion_03_motzkin_pipelines(capsys):
    with criterion(capsys, 3, "four Motzkin pipelines agree to n=300, series to order 50", 30):
        short = motzkin_short(300).values
        assert motzkin_long(300).values == short
        assert motzkin_via_catalan(300).values == short
        rep = series_identity_check("motzkin_gf", 50)
        assert rep.ok and rep.first_mismatch is None


def test_criterion_04_oracles(capsys):
    with criterion(capsys, 4, "enumeration oracles agree with the recursions", 300):
        m = motzkin_short(16).values
        assert [enum_motzkin(n) for n in range(15)] == list(m[:15])
        c = catalan(12).values
        for n in range(13):
            count, hist = enum_dyck(n)
            assert count == c[n]
            assert hist == ({0: 1} if n == 0 else {k: narayana(n, k) for k in range(1, n + 1)})
        assert [enum_secondary(1, n) for n in range(17)] == list(sec_struct_rank1(16).values)
        assert [enum_secondary(0, n) for n in range(17)] == list(m[:17])
        assert [enum_delannoy(n) for n in range(9)] == list(legendre_values(3, 8).values)
        assert [enum_schroeder(n) for n in range(11)] == list(schroeder(10).values)
        for n in range(1, 10):
            assert enum_permutations_by_cycles(n) == list(stirling1_row(n).values)
            assert enum_partitions_by_blocks(n) == list(stirling2_row(n).values)


def test_criterion_05_log_behavior(capsys):
    with criterion(capsys, 5, "log-convex and log-concave verdicts", 60):
        convex = [motzkin_short(1000), sec_struct_rank1(1000), delannoy(1000),
                  legendre_values(2, 1000), legendre_values(F(7, 2), 1000), schroeder(1000)]
        for t in convex:
            assert check_log_behavior(t).log_convex, t.name
        for n in range(1, 61):
            for row in (binomial_row(n), stirling1_row(n), stirling2_row(n), narayana_row(n)):
                assert check_log_behavior(row).log_concave, (row.name, n)


def test_criterion_06_determinant_identity(capsys):
    with criterion(capsys, 6, "binomial determinant equals Narayana, n <= 60", 1):
        for n in range(2, 61):
            for k in range(1, n):
                assert comb(n, k) ** 2 - comb(n, k - 1) * comb(n, k + 1) == narayana(n + 1, k + 1)


def test_criterion_07_bounds(capsys):
    with criterion(capsys, 7, "Motzkin and rank-1 ratio bounds to n=2000", 30):
        m = motzkin_short(2000)
        x = ratio_sequence(m)
        for n in range(2, 2001):
            assert 2 <= x[n] <= F(7, 2), n
        for n in range(1, 2001):
            assert m[n] <= 3 * m[n - 1], n
        r = ratio_sequence(sec_struct_rank1(2000))
        for n in range(3, 2001):
            assert 2 <= r[n] <= 3, n
        for n in range(53, 2001):
            assert F(5, 2) <= r[n] <= F(267, 100), n


def test_criterion_08_limits(capsys):
    with criterion(capsys, 8, "x_2000 within 1/100 of 3 and of 3+2*sqrt(2)", 30):
        tol = F(1, 100)
        assert limit_report(ratio_sequence(motzkin_short(2000)), QuadraticSurd(3), tol).within_tol
        rep = limit_report(ratio_sequence(delannoy(2000)), QuadraticSurd(3, 2, 2), tol)
        assert rep.within_tol and rep.n == 2000


def test_criterion_09_interlacing(capsys):
    with criterion(capsys, 9, "interlacing for Motzkin from 3 and rank-1 from 6, to 1000", 30):
        assert interlace_check(ratio_sequence(motzkin_short(1001)), "motzkin", 3, 1000).holds
        assert interlace_check(ratio_sequence(sec_struct_rank1(1001)), "rank1", 6, 1000).holds


def test_criterion_10_alpha_roots(capsys):
    with criterion(capsys, 10, "alpha enclosures at tol 1e-12", 1):
        tol = F(1, 10**12)
        intervals = [alpha_root(l, tol) for l in range(7)]
        closed = [QuadraticSurd(3), QuadraticSurd(F(3, 2), F(1, 2), 5), QuadraticSurd(1, 1, 2)]
        for s, iv in zip(closed, intervals):
            assert surd_in_interval(s, iv) and iv[1] - iv[0] <= tol
        for (lo1, _), (_, hi2) in zip(intervals, intervals[1:]):
            assert hi2 < lo1


def test_criterion_11_asymptotics(capsys):
    with criterion(capsys, 11, "Motzkin asymptotic within 1% at 2000 and improving", 30):
        m = motzkin_short(2000)
        a1000 = asymptotic_check_motzkin(m, 1000)
        a2000 = asymptotic_check_motzkin(m, 2000)
        assert a2000.deviation <= 0.01
        assert a2000.deviation < a1000.deviation


def _coefficient_paths(doc, path=()):
    if isinstance(doc, dict):
        for k, v in doc.items():
            if k in ("num", "den", "poly", "tested"):
                yield from (path + (k, i) for i in range(len(v)))
            else:
                yield from _coefficient_paths(v, path + (k,))
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            yield from _coefficient_paths(v, path + (i,))


def test_criterion_12_certificate_soundness(capsys):
    with criterion(capsys, 12, "verifier accepts emitted certificates and rejects mutations", 10):
        certs = [
            certify_increasing(build_patchwork(PatchworkSpec.motzkin(), 10)),
            certify_increasing(build_patchwork(PatchworkSpec.rank1(), 10), from_n=5, prefer_k=2),
            certify_bounds(build_patchwork(PatchworkSpec.rank1(), 10), 2, 3, 3),
        ]
        mutations = 0
        for cert in certs:
            doc = json.loads(dumps(cert))
            assert verify_certificate(doc) is True
            for path in _coefficient_paths(doc):
                bad = json.loads(json.dumps(doc))
                node = bad
                for k in path[:-1]:
                    node = node[k]
                node[path[-1]] = str(F(node[path[-1]]) + 1)
                with pytest.raises(VerificationError):
                    verify_certificate(bad)
                mutations += 1
        assert mutations > 100


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(None)
            except Exception:
                failed += 1
    sys.exit(1 if failed else 0)
