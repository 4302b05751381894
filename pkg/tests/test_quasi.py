from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from quasiortho.exactnum import as_fraction
from quasiortho.families import FamilySpec, discrete_moment, monic_poly
from quasiortho.polyalg import RootBox, make_monic
from quasiortho.quasi import (
    ALL_INSIDE,
    CERTIFIED,
    INCONCLUSIVE,
    LEFT_EXIT,
    PARTIAL_INNER,
    REFUTED,
    RIGHT_EXIT,
    SHIFTED_ABOVE,
    SHIFTED_BELOW,
    UNDETERMINED,
    QuasiError,
    certify_interlacing,
    endpoint_classify_order1,
    endpoint_classify_order2,
    f_ratio,
    interlace_check,
    partial_interlace_check,
    quasi_order,
    quasi_order_of_poly,
    suite_exit_status,
    theorem_suite,
)
from quasiortho.recurrences import CATALOG, ShiftSpec, catalog_coeffs
from quasiortho.refcases import EXTRA, REFERENCE


# ---------------------------------------------------------------------------
# quasi_order
# ---------------------------------------------------------------------------


def test_order_matches_shift_count_big_q_jacobi():
    base = REFERENCE["big-q-jacobi"]
    for k in (1, 2, 3):
        verdict = quasi_order(base, ShiftSpec.parse(f"alpha/q^{k}"), 6)
        assert verdict.order == k
        assert verdict.coefficients[0] == 1
        assert verdict.coefficients[k] != 0
        assert verdict.zero_count_in_support >= 6 - k


def test_order_wilson_single_shift():
    verdict = quasi_order(REFERENCE["wilson"], ShiftSpec.parse("a-1"), 5)
    assert verdict.order == 1


def test_order_wilson_mixed_shifts():
    base = REFERENCE["wilson"]
    for k1, k2 in ((1, 0), (1, 1), (2, 1)):
        text = ",".join(
            part
            for part in (f"a-{k1}" if k1 else "", f"b-{k2}" if k2 else "")
            if part
        )
        verdict = quasi_order(base, ShiftSpec.parse(text), 6)
        assert verdict.order == k1 + k2, (k1, k2)


def test_order_requires_orthogonal_base():
    off = FamilySpec("big-q-jacobi", q=F(2, 5), alpha=5, beta=F(1, 2), gamma=-1)
    with pytest.raises(QuasiError):
        quasi_order(off, ShiftSpec.parse("alpha/q"), 4)


def test_base_member_has_order_zero():
    base = REFERENCE["little-q-jacobi"]
    verdict = quasi_order_of_poly(monic_poly(base, 5), base, 5)
    assert verdict.order == 0
    assert verdict.extreme == frozenset({"all-inside"})


def test_scaling_invariance():
    base = REFERENCE["big-q-jacobi"]
    shifted = ShiftSpec.parse("alpha/q").apply(base)
    q_poly = monic_poly(shifted, 5)
    rng = random.Random(11)
    reference = quasi_order_of_poly(q_poly, base, 5)
    for _ in range(3):
        s = F(rng.randint(1, 50), rng.randint(1, 50)) * rng.choice((1, -1))
        scaled = quasi_order_of_poly(make_monic(q_poly.scale(s)), base, 5)
        assert scaled == reference


def test_complex_combination_order():
    base = REFERENCE["continuous-hahn"]
    for k in (1, 2, 3):
        verdict = quasi_order(base, ShiftSpec.parse(f"a-{k}"), 6)
        assert verdict.order == k


# ---------------------------------------------------------------------------
# f_ratio closed forms
# ---------------------------------------------------------------------------


def test_f_ratio_big_q_jacobi_left_endpoint_closed_form():
    spec = FamilySpec("big-q-jacobi", q=F(2, 5), alpha=2, beta=F(1, 2), gamma=-1)
    q, a, b, g = F(2, 5), F(2), F(1, 2), F(-1)
    n = 3
    qn = q**n
    closed = (
        a
        * (a * b * qn - 1)
        * (b * qn - 1)
        * (g * qn - 1)
        * q ** (n + 1)
        / ((a * b * qn * qn - q) * (a * b * qn * qn - 1))
    )
    assert f_ratio(spec, n, g * q) == closed
    assert closed < 0


def test_f_ratio_little_q_jacobi_origin_closed_form():
    spec = REFERENCE["little-q-jacobi"]
    q, a, b = F(1, 2), F(3, 2), F(3, 2)
    for n in (2, 4):
        qn = q**n
        closed = (
            -(a * b * qn - 1)
            * (a * qn - 1)
            * qn
            / ((a * b * qn * qn - 1) * (a * b * qn * qn - q))
        )
        assert f_ratio(spec, n, F(0)) == closed
        assert closed < 0


def test_f_ratio_asc1_at_alpha():
    spec = REFERENCE["al-salam-carlitz-i"]
    for n in (2, 3, 5):
        assert f_ratio(spec, n, spec.param("alpha")) == -spec.q ** (n - 1)


def test_f_ratio_zero_denominator():
    spec = REFERENCE["big-q-jacobi"]
    p1 = monic_poly(spec, 1)
    root = -p1.coeff(0)  # P_1 = x - b_0, so b_0 is its root
    with pytest.raises(QuasiError):
        f_ratio(spec, 2, root)


# ---------------------------------------------------------------------------
# endpoint classification
# ---------------------------------------------------------------------------


def test_big_q_jacobi_beta_shift_exits_left():
    spec = EXTRA["big-q-jacobi-smallalpha"]  # alpha=1/2, beta=2
    report = endpoint_classify_order1(spec, CATALOG["eq3bqj"], 4)
    assert report.verdict == LEFT_EXIT


def test_big_q_jacobi_alpha_shift_right_end_is_undetermined_by_catalog():
    spec = EXTRA["big-q-jacobi-smallbeta"]  # alpha=2 > 1, beta=1/2
    report = endpoint_classify_order1(spec, CATALOG["eq1bqj"], 5)
    assert report.verdict == UNDETERMINED
    assert report.left_fires is False  # leftmost zero stays inside


def test_big_q_laguerre_alpha_shift_exits_right():
    # exact signs and root isolation both put the largest zero above alpha*q
    report = endpoint_classify_order1(
        REFERENCE["big-q-laguerre"], CATALOG["eq1bql"], 5
    )
    assert report.verdict == RIGHT_EXIT
    assert report.left_fires is False and report.right_fires is True


def test_q_hahn_alpha_shift_exits_left():
    report = endpoint_classify_order1(REFERENCE["q-hahn"], CATALOG["eq1qh"], 4)
    assert report.verdict == LEFT_EXIT


def test_q_laguerre_exits_left_with_infinite_right_end():
    report = endpoint_classify_order1(REFERENCE["q-laguerre"], CATALOG["eq1ql"], 5)
    assert report.verdict == LEFT_EXIT
    assert report.right_ratio is None


def test_asc1_conditional_left_exit():
    # alpha = -2 < q^n/(q^n - 1) at n = 4, so the leftmost zero exits
    report = endpoint_classify_order1(
        REFERENCE["al-salam-carlitz-i"], CATALOG["eq1asc1"], 4
    )
    assert report.verdict == LEFT_EXIT


def test_order2_double_exit_q_hahn():
    report = endpoint_classify_order2(REFERENCE["q-hahn"], CATALOG["eq7qh"], 5)
    assert report.b_sign < 0  # all zeros real
    assert report.left_exits and report.right_exits


def test_order2_little_q_jacobi_double_exit():
    report = endpoint_classify_order2(
        REFERENCE["little-q-jacobi"], CATALOG["eq8lqj"], 5
    )
    assert report.b_sign < 0
    assert report.left_exits and report.right_exits


def test_order2_big_q_jacobi_left_exit_right_open():
    report = endpoint_classify_order2(REFERENCE["big-q-jacobi"], CATALOG["eq6bqj"], 5)
    assert report.b_sign < 0
    assert report.left_exits is True


# ---------------------------------------------------------------------------
# interlacing
# ---------------------------------------------------------------------------


def _boxes(*mids, w=F(1, 100)):
    return [RootBox(m - w, m + w, 1, -1) for m in map(F, mids)]


def test_interlace_check_certifies_fabricated_chain():
    x_n = _boxes(0, 2, 4)
    y = _boxes(F(1, 2), F(5, 2), F(9, 2))
    x_n1 = _boxes(1, 3)
    assert interlace_check(y, x_n, x_n1, SHIFTED_ABOVE).status == CERTIFIED
    assert interlace_check(y, x_n, x_n1, SHIFTED_BELOW).status == REFUTED


def test_interlace_check_inconclusive_on_overlap():
    x_n = _boxes(0, 2, 4, w=F(1))
    y = _boxes(F(1, 2), F(5, 2), F(9, 2), w=F(1))
    x_n1 = _boxes(1, 3, w=F(1))
    assert interlace_check(y, x_n, x_n1, SHIFTED_ABOVE).status == INCONCLUSIVE


def test_identical_root_sets_are_refuted():
    x_n = _boxes(0, 2, 4)
    x_n1 = _boxes(1, 3)
    result = interlace_check(x_n, x_n, x_n1, SHIFTED_ABOVE)
    assert result.status == REFUTED


def test_certify_interlacing_refutes_shared_roots():
    base = REFERENCE["big-q-jacobi"]
    result = certify_interlacing(base, monic_poly(base, 5), 5, SHIFTED_ABOVE, F(1, 2**20))
    assert result.status == REFUTED
    assert "shared root" in result.note


def test_chain_certification_matches_sigma_sign_everywhere():
    # Lemma-style consistency: negative sigma_1 certifies the above-chain,
    # positive the below-chain, at every depth-1 entry's reference instance
    cases = {
        "eq1bqj": REFERENCE["big-q-jacobi"],
        "eq3bqj": REFERENCE["big-q-jacobi"],
        "eq1qh": REFERENCE["q-hahn"],
        "eq2qh": REFERENCE["q-hahn"],
        "eq1lqj": REFERENCE["little-q-jacobi"],
        "eq2lqj": REFERENCE["little-q-jacobi"],
        "eq1ql": REFERENCE["q-laguerre"],
        "eq1asc1": REFERENCE["al-salam-carlitz-i"],
        "eqaw1": REFERENCE["askey-wilson"],
        "eqw1": REFERENCE["wilson"],
        "eq1bql": REFERENCE["big-q-laguerre"],
        "eq1qk": REFERENCE["q-krawtchouk"],
    }
    for eid, base in cases.items():
        entry = CATALOG[eid]
        n = 5
        sigma1 = as_fraction(catalog_coeffs(entry, n, base)[1])
        pattern = SHIFTED_ABOVE if sigma1 < 0 else SHIFTED_BELOW
        anti = SHIFTED_BELOW if sigma1 < 0 else SHIFTED_ABOVE
        shifted_poly = monic_poly(entry.shift.apply(base), n)
        assert certify_interlacing(base, shifted_poly, n, pattern, F(1, 2**30)).status == CERTIFIED, eid
        assert certify_interlacing(base, shifted_poly, n, anti, F(1, 2**30)).status == REFUTED, eid


def test_askey_wilson_negative_anchor_flips_chain():
    base = EXTRA["askey-wilson-neg"]
    entry = CATALOG["eqaw1"]
    sigma1 = as_fraction(catalog_coeffs(entry, 5, base)[1])
    assert sigma1 > 0  # a < 0 flips the sign
    shifted_poly = monic_poly(entry.shift.apply(base), 5)
    assert (
        certify_interlacing(base, shifted_poly, 5, SHIFTED_BELOW, F(1, 2**30)).status
        == CERTIFIED
    )


def test_partial_interlace_little_q_jacobi():
    # exact arithmetic gives C_n - b_n < 0 here (the prose reading)
    res = partial_interlace_check(
        REFERENCE["little-q-jacobi"], CATALOG["eq9lqj"], 5, F(1, 2**40)
    )
    assert res.criterion_sign < 0
    assert res.pattern.status == CERTIFIED


def test_partial_interlace_asc1():
    res = partial_interlace_check(
        REFERENCE["al-salam-carlitz-i"], CATALOG["eq1asc2"], 4, F(1, 2**40)
    )
    assert res.criterion_sign < 0  # b_n - C_n > 0 at alpha = -2 < q^5/(q^4-1)
    assert res.pattern.status == CERTIFIED


def test_partial_interlace_continuous_hahn():
    base = REFERENCE["continuous-hahn"]
    for eid in ("eqch5", "eqch6"):
        res = partial_interlace_check(base, CATALOG[eid], 5, F(1, 2**40))
        assert res.criterion_sign < 0, eid
        assert res.pattern.status == CERTIFIED, eid


# ---------------------------------------------------------------------------
# moment <-> order equivalence on finite lattices
# ---------------------------------------------------------------------------


def test_order_k_iff_moment_vanishing():
    for fam in ("q-hahn", "q-racah", "racah", "q-krawtchouk"):
        base = REFERENCE[fam]
        entry = {
            "q-hahn": "eq1qh",
            "q-racah": "eqqR1",
            "racah": "eqr1",
            "q-krawtchouk": "eq1qk",
        }[fam]
        shift = CATALOG[entry].shift
        for n in (4, 6):
            for k in (1, 2):
                shift_k = ShiftSpec(
                    [(name, kind, step * k) for name, kind, step in shift.actions]
                )
                verdict = quasi_order(base, shift_k, n)
                assert verdict.order == k, (fam, n, k)
                q_poly = monic_poly(shift_k.apply(base), n)
                for m in range(n - k):
                    assert discrete_moment(base, q_poly, m) == 0, (fam, n, k, m)
                assert discrete_moment(base, q_poly, n - k) != 0, (fam, n, k)


def test_zero_count_lower_bound_lemma():
    samples = [
        ("big-q-jacobi", "alpha/q^2"),
        ("q-hahn", "beta/q^2"),
        ("little-q-jacobi", "alpha/q,beta/q"),
        ("q-laguerre", "t/q^3"),
        ("al-salam-carlitz-i", "alpha/q^2"),
        ("wilson", "a-2,b-1"),
    ]
    for fam, text in samples:
        base = REFERENCE[fam]
        shift = ShiftSpec.parse(text)
        for n in (5, 8):
            verdict = quasi_order(base, shift, n)
            assert verdict.zero_count_in_support >= n - verdict.order, (fam, n)


# ---------------------------------------------------------------------------
# suite plumbing
# ---------------------------------------------------------------------------


def test_suite_exit_codes():
    report = theorem_suite(REFERENCE["little-q-laguerre"], 4)
    assert suite_exit_status(report) == 0
    report["claims"].append(
        {"id": "zz", "tag": "x", "verdict": "inconclusive", "witness": {}}
    )
    assert suite_exit_status(report) == 2
    report["claims"].append({"id": "zz2", "tag": "x", "verdict": "fail", "witness": {}})
    assert suite_exit_status(report) == 1


def test_suite_requires_orthogonal_base():
    with pytest.raises(QuasiError):
        theorem_suite(REFERENCE["bessel"], 4)


def test_suite_contains_undetermined_catalogued_cases():
    report = theorem_suite(REFERENCE["big-q-jacobi"], 5)
    by_id = {c["id"]: c for c in report["claims"]}
    # the alpha-shift right end is catalogued as sign-varying
    assert by_id["endpoints/eq1bqj/n=5"]["witness"]["verdict"] == UNDETERMINED
    assert by_id["endpoints/eq1bqj/n=5"]["verdict"] == "pass"


def test_suite_green_on_every_orthogonal_reference_instance():
    cases = [(spec, 4 if fam == "al-salam-carlitz-i" else 5)
             for fam, spec in REFERENCE.items()
             if fam not in ("q-meixner", "al-salam-carlitz-ii", "bessel")]
    cases += [
        (EXTRA["askey-wilson-neg"], 5),
        (EXTRA["q-racah-beta"], 5),
        (EXTRA["racah-beta"], 5),
        (EXTRA["big-q-jacobi-smallbeta"], 5),
        (EXTRA["big-q-jacobi-smallalpha"], 5),
    ]
    for spec, n in cases:
        report = theorem_suite(spec, n)
        bad = [
            c
            for c in report["claims"]
            if c["verdict"] not in ("pass", "undetermined", "skipped")
        ]
        assert not bad, (spec.family, bad)
