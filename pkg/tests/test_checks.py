from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logconvex.certify import (
    alpha_root,
    asymptotic_check_motzkin,
    check_log_behavior,
    interlace_check,
    limit_report,
    newton_normalized_logconcavity,
    series_identity_check,
    surd_in_interval,
)
from logconvex.certify.checks import LOG_CONCAVE, LOG_CONVEX, LOG_STRAIGHT, NEITHER
from logconvex.exactmath import Polynomial, QuadraticSurd
from logconvex.sequences import (
    bell_poly_coeffs,
    binomial_row,
    delannoy,
    motzkin_short,
    ratio_sequence,
    sec_struct_rank1,
)


def test_log_behavior_examples():
    rep = check_log_behavior(binomial_row(10))
    assert rep.property == LOG_CONCAVE and rep.peak == 5 and not rep.plateau
    assert check_log_behavior(motzkin_short(300)).property == LOG_CONVEX
    assert check_log_behavior([1, 2, 4, 8]).property == LOG_STRAIGHT


def test_log_behavior_reports_first_violation():
    rep = check_log_behavior([1, 2, 3, 5, 9], start_index=1)
    # 2^2 > 1*3 (concave), then 3^2 < 2*5 (convex) at index 3
    assert rep.property == NEITHER and rep.first_violation == 3
    assert rep.peak is None


def test_plateau_takes_smallest_index():
    rep = check_log_behavior(binomial_row(7))
    assert rep.peak == 3 and rep.plateau


def test_log_behavior_rejects_non_positive():
    with pytest.raises(ValueError):
        check_log_behavior([1, 0, 1])


def test_log_behavior_is_division_free_on_rationals():
    rep = check_log_behavior([F(1, 3), F(1, 2), F(1)])
    assert rep.property == LOG_CONVEX


@given(st.integers(1, 50), st.integers(1, 9), st.integers(2, 30))
def test_geometric_sequences_are_straight(a, num, n):
    values = [a * F(num, 7) ** k for k in range(n)]
    assert check_log_behavior(values).property == LOG_STRAIGHT


def test_newton_normalized_examples():
    assert newton_normalized_logconcavity(Polynomial([1, 4, 6, 4, 1]))
    assert newton_normalized_logconcavity([0, 6, 11, 6, 1])
    assert newton_normalized_logconcavity(bell_poly_coeffs(5))
    assert not newton_normalized_logconcavity([1, 0, 1])
    with pytest.raises(ValueError):
        newton_normalized_logconcavity([1, -1])


def test_interlacing_examples():
    x = ratio_sequence(motzkin_short(10))
    assert interlace_check(x, "motzkin", 3, 4).holds
    assert F(24, 11) <= x[4] <= F(30, 13)
    r = ratio_sequence(sec_struct_rank1(10))
    assert r[6] == F(17, 8)
    assert interlace_check(r, "rank1", 6, 6).results == ((6, True),)


def test_interlacing_threshold_enforced():
    x = ratio_sequence(motzkin_short(10))
    with pytest.raises(ValueError):
        interlace_check(x, "motzkin", 2)
    with pytest.raises(ValueError):
        interlace_check(x, "nonsense")


def test_interlacing_detects_failure():
    # x_2 = 2 for Motzkin, while a_2 = 12/7 and a_3 = 2 would still hold;
    # a doubled ratio must break the upper side.
    x = ratio_sequence([1, 1, 2, 8, 16], name="fake")
    rep = interlace_check(x, "motzkin", 3)
    assert not rep.holds and rep.first_failure == 3


def test_alpha_root_examples():
    tol = F(1, 10**12)
    assert alpha_root(0, tol) == (3, 3)
    lo, hi = alpha_root(1, tol)
    assert hi - lo <= tol and lo.denominator & (lo.denominator - 1) == 0
    assert surd_in_interval(QuadraticSurd(F(3, 2), F(1, 2), 5), (lo, hi))
    assert surd_in_interval(QuadraticSurd(1, 1, 2), alpha_root(2, tol))
    assert not surd_in_interval(QuadraticSurd(1, 1, 2), alpha_root(3, tol))


def test_alpha_decreases_towards_two():
    tol = F(1, 10**12)
    intervals = [alpha_root(l, tol) for l in range(7)]
    for (lo1, _), (_, hi2) in zip(intervals, intervals[1:]):
        assert hi2 < lo1
    assert intervals[-1][0] > 2


def test_alpha_root_rejects_bad_input():
    with pytest.raises(ValueError):
        alpha_root(1, 0)
    with pytest.raises(ValueError):
        alpha_root(-1, F(1, 10))


def test_limit_report_examples():
    rep = limit_report(ratio_sequence(motzkin_short(2000)), 3, F(1, 100))
    assert rep.within_tol and rep.gap_sign == -1
    rep = limit_report(ratio_sequence(delannoy(2000)), QuadraticSurd(3, 2, 2), F(1, 100))
    assert rep.within_tol
    flat = limit_report(ratio_sequence([7, 7, 7]), 1, F(0))
    assert flat.gap_sign == 0 and flat.within_tol
    far = limit_report(ratio_sequence(motzkin_short(20)), 3, F(1, 100))
    assert not far.within_tol
    assert far.to_dict()["gap"].startswith("-0.")


def test_asymptotic_report():
    m = motzkin_short(2000)
    a100, a200 = asymptotic_check_motzkin(m, 100), asymptotic_check_motzkin(m, 200)
    assert a100.ratio > 0 and a200.ratio > 0
    assert 1.7 < a100.deviation / a200.deviation < 2.3
    with pytest.raises(ValueError):
        asymptotic_check_motzkin(m, 100, precision=5000)


def test_series_identities():
    assert series_identity_check("motzkin_gf", 50).ok
    assert series_identity_check("delannoy_gf", 50).ok
    assert series_identity_check("motzkin_gf", 1).ok
    with pytest.raises(ValueError):
        series_identity_check("nonsense", 5)
