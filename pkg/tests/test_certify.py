import json
from fractions import Fraction as F

import pytest

from logconvex.certify import (
    ContinuityError,
    PatchworkSpec,
    VerificationError,
    build_patchwork,
    certify_bounds,
    certify_increasing,
    dumps,
    integer_point_mismatches,
    prove_positive,
    verify_certificate,
)
from logconvex.certify.patchwork import PoleError, legendre_step, motzkin_step
from logconvex.certify.verify import check_positivity
from logconvex.exactmath import Polynomial, RationalFunction
from logconvex.sequences import legendre_values, motzkin_short, ratio_sequence, sec_struct_rank1

X = RationalFunction.x()


@pytest.fixture(scope="module")
def motzkin_pw():
    return build_patchwork(PatchworkSpec.motzkin(), 30)


@pytest.fixture(scope="module")
def rank1_pw():
    return build_patchwork(PatchworkSpec.rank1(), 30)


# -- patchworks -------------------------------------------------------------------


def test_motzkin_pieces(motzkin_pw):
    assert motzkin_pw.piece(2) == RationalFunction.constant(2)
    assert motzkin_pw.piece(3) == (7 * X - 1) / (2 * (X + 2))
    assert motzkin_pw.piece(4) == (20 * X * X - 9 * X - 14) / (7 * X * X + 6 * X - 16)


def test_legendre_one_is_constant():
    p = build_patchwork(PatchworkSpec.legendre(1), 12)
    assert all(p.piece(n) == RationalFunction.constant(1) for n in p.intervals())


def test_build_rejects_range_inside_base():
    with pytest.raises(ValueError):
        build_patchwork(PatchworkSpec.rank1(), 3)


def test_patchworks_hit_the_ratios(motzkin_pw, rank1_pw):
    assert integer_point_mismatches(motzkin_pw, ratio_sequence(motzkin_short(40))) == []
    assert integer_point_mismatches(rank1_pw, ratio_sequence(sec_struct_rank1(40))) == []
    for t in (2, F(7, 2), 3):
        p = build_patchwork(PatchworkSpec.legendre(t), 20)
        assert integer_point_mismatches(p, ratio_sequence(legendre_values(t, 25))) == []


def test_patchworks_are_continuous(motzkin_pw, rank1_pw):
    assert motzkin_pw.is_continuous() and rank1_pw.is_continuous()
    for j in rank1_pw.junctions:
        assert rank1_pw.piece(j.x - 1)(j.x) == rank1_pw.piece(j.x)(j.x)


def test_literal_rank1_base_jumps():
    p = build_patchwork(PatchworkSpec.rank1_literal(), 12)
    jumps = {j.x: j.jump for j in p.junctions}
    assert all(jumps[x] == 0 for x in (3, 4))
    assert all(jumps[x] != 0 for x in range(5, 13))
    assert min(jumps.values()) < 0
    assert p.piece(5)(5) == F(113, 56)
    with pytest.raises(ContinuityError):
        build_patchwork(PatchworkSpec("rank1-literal", PatchworkSpec.rank1_literal().base), 8)


def test_pole_is_detected():
    # Base value 0 makes the recursion divide by f(x-1) = 0.
    spec = PatchworkSpec("legendre", ((0, X - F(1, 2)),), t=F(1))
    with pytest.raises((PoleError, ZeroDivisionError)):
        build_patchwork(spec, 3)


def test_denominators_positive_on_closed_intervals(rank1_pw):
    for n in rank1_pw.intervals():
        den = rank1_pw.piece(n).den
        assert den.sign_at(n) > 0 and den.sign_at(n + 1) > 0
        assert den.is_constant() or den.count_roots(n, n + 1) == 0


def test_step_rules_run_on_numbers_and_functions():
    assert motzkin_step(F(3), [F(2)]) == motzkin_step(X, [RationalFunction.constant(2)])(3)
    assert legendre_step(F(2), [F(3)], F(3)) == F(3) * 3 / 2 - F(1, 2) / 3


# -- positivity ---------------------------------------------------------------------


def test_shift_prefers_widest_and_honours_preference():
    p = Polynomial([1, 1])  # x + 1 > 0 on (-1, oo)
    rec = prove_positive(p, 0, 1, k_max=5)
    assert rec.method == "shift" and rec.k == 1
    assert prove_positive(p, 0, 1, k_max=5, prefer_k=0).k == 0


def test_sturm_fallback_and_modes():
    # (x - 3/2)^2 >= 0 with a double zero inside (1, 2)
    p = Polynomial([F(9, 4), -3, 1])
    weak = prove_positive(p, 1, 2, k_max=0)
    assert weak.method == "sturm" and weak.verdict
    strict = prove_positive(p, 1, 2, k_max=0, strict=True)
    assert strict.method == "sturm" and not strict.verdict
    assert not prove_positive(Polynomial([-1, 1]), 0, 2, k_max=2).verdict


def test_zero_polynomial_is_weakly_but_not_strictly_positive():
    assert prove_positive(Polynomial(), 0, 1).verdict
    assert not prove_positive(Polynomial(), 0, 1, strict=True).verdict


def _record(rec):
    from logconvex.certify.certificates import _positivity
    return json.loads(json.dumps(_positivity(rec)))


def test_verifier_checks_weak_witness_exactly():
    # (x - 3/2)^2 (x + 5): the odd part is x + 5
    p = Polynomial([F(9, 4), -3, 1]) * Polynomial([5, 1])
    rec = prove_positive(p, 1, 2, k_max=0)
    doc = _record(rec)
    coeffs = [F(c) for c in doc["poly"]]
    assert check_positivity(doc, coeffs, F(1), F(2))
    doc["witness"]["tested"] = ["1"]
    with pytest.raises(VerificationError):
        check_positivity(doc, coeffs, F(1), F(2))


def test_shift_and_sturm_agree(rank1_pw):
    for n in range(5, 20):
        d = rank1_pw.piece(n).derivative()
        s = d.den.sign_at(F(2 * n + 1, 2))
        shift = prove_positive(d.num * s, n, n + 1, k_max=8)
        sturm = prove_positive(d.num * s, n, n + 1, k_max=-1, strict=True)
        assert shift.method == "shift" and sturm.method == "sturm"
        assert shift.verdict == sturm.verdict


# -- certificates ---------------------------------------------------------------------


def test_motzkin_increasing(motzkin_pw):
    cert = certify_increasing(motzkin_pw)
    assert cert.verdict
    r3 = cert.interval(3)
    assert r3.numerator == Polynomial([15]) and r3.method == "shift"
    assert verify_certificate(json.loads(dumps(cert)))


def test_constant_patchwork_is_non_decreasing():
    cert = certify_increasing(build_patchwork(PatchworkSpec.legendre(1), 8))
    assert cert.verdict
    assert all(r.numerator.is_zero() for r in cert.intervals)
    assert not certify_increasing(build_patchwork(PatchworkSpec.legendre(1), 8), strict=True).verdict


def test_monotone_patchwork_gives_log_convex_sequence(rank1_pw):
    from logconvex.certify import check_log_behavior
    cert = certify_increasing(rank1_pw)
    assert cert.verdict
    assert check_log_behavior(sec_struct_rank1(31)).log_convex


def test_bound_certificates(motzkin_pw, rank1_pw):
    assert certify_bounds(motzkin_pw, 2, None, 2).verdict
    assert certify_bounds(rank1_pw, 2, 3, 3).verdict
    # On [2,3] the continuous rank-1 patchwork runs from 1 to 2.
    assert not certify_bounds(rank1_pw, 2, 3, 2).verdict
    late = build_patchwork(PatchworkSpec.rank1(), 56)
    assert certify_bounds(late, F(5, 2), F(267, 100), 53).verdict


def test_bound_failure_is_a_verdict(motzkin_pw):
    cert = certify_bounds(motzkin_pw, 2, F(5, 2), 2)
    assert not cert.verdict
    assert verify_certificate(json.loads(dumps(cert))) is False


def test_literal_rank1_fails_only_at_junctions():
    p = build_patchwork(PatchworkSpec.rank1_literal(), 20)
    cert = certify_increasing(p)
    assert all(r.verdict for r in cert.intervals)
    assert not cert.verdict
    assert verify_certificate(json.loads(dumps(cert))) is False


def test_serialization_is_deterministic(motzkin_pw):
    a = dumps(certify_increasing(motzkin_pw))
    b = dumps(certify_increasing(build_patchwork(PatchworkSpec.motzkin(), 30)))
    assert a == b
    doc = json.loads(a)
    assert doc["format"] == "logconvex-certificate" and doc["schema_version"] == 1
    for rec in doc["intervals"]:
        for c in rec["numerator_check"]["poly"]:
            assert isinstance(c, str) and int(c) == F(c)


def _coefficient_paths(doc, path=()):
    if isinstance(doc, dict):
        for k, v in doc.items():
            if k in ("num", "den", "poly", "tested"):
                for i in range(len(v)):
                    yield path + (k, i)
            else:
                yield from _coefficient_paths(v, path + (k,))
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            yield from _coefficient_paths(v, path + (i,))


def _set(doc, path, value):
    for k in path[:-1]:
        doc = doc[k]
    doc[path[-1]] = value


@pytest.mark.parametrize("make", [
    lambda: certify_increasing(build_patchwork(PatchworkSpec.motzkin(), 8)),
    lambda: certify_increasing(build_patchwork(PatchworkSpec.legendre(F(7, 2)), 6),
                               strict=True, k_max=0),
    lambda: certify_bounds(build_patchwork(PatchworkSpec.rank1(), 9), 2, 3, 3, k_max=1),
])
def test_every_single_coefficient_mutation_is_caught(make):
    doc = json.loads(dumps(make()))
    verify_certificate(doc)
    paths = list(_coefficient_paths(doc))
    assert paths
    for path in paths:
        bad = json.loads(json.dumps(doc))
        node = bad
        for k in path:
            node = node[k]
        _set(bad, path, str(F(node) + 1))
        with pytest.raises(VerificationError):
            verify_certificate(bad)


def test_verifier_rejects_tampered_claims(motzkin_pw):
    doc = json.loads(dumps(certify_increasing(motzkin_pw)))
    for mutate in (
        lambda d: d.__setitem__("verdict", False),
        lambda d: d["intervals"][3].__setitem__("verdict", False),
        lambda d: d["intervals"][3]["numerator_check"].__setitem__("k", 7),
        lambda d: d["junctions"][0].__setitem__("left", "5"),
        lambda d: d["patchwork"].__setitem__("kind", "nonsense"),
        lambda d: d.__setitem__("format", "other"),
        lambda d: d["patchwork"]["pieces"].pop(4),
    ):
        bad = json.loads(json.dumps(doc))
        mutate(bad)
        with pytest.raises(VerificationError):
            verify_certificate(bad)
