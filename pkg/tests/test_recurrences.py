from __future__ import annotations

from fractions import Fraction as F

import pytest

from quasiortho.exactnum import GaussianRational
from quasiortho.families import DegenerateParameterError, FamilySpec, monic_poly
from quasiortho.recurrences import (
    CATALOG,
    DiscoveryResult,
    RecurrenceError,
    ShiftSpec,
    catalog_coeffs,
    catalog_manifest,
    compose_entries,
    compose_sequence,
    discover_coeffs,
    entries_for,
    verify_entry,
)
from quasiortho.refcases import REFERENCE, catalog_instance


# ---------------------------------------------------------------------------
# shift descriptors
# ---------------------------------------------------------------------------


def test_shiftspec_parse_roundtrip():
    for text in ("alpha/q", "alpha/q^2", "a-1", "alpha+1", "alpha/q,beta/q", "a-1,c-1"):
        assert ShiftSpec.parse(text).describe() == text


def test_shiftspec_rejects_identity_and_bad_steps():
    with pytest.raises(RecurrenceError):
        ShiftSpec([])
    with pytest.raises(RecurrenceError):
        ShiftSpec([("alpha", "divq", 0)])
    with pytest.raises(RecurrenceError):
        ShiftSpec([("alpha", "rotate", 1)])


def test_shift_apply():
    spec = REFERENCE["big-q-jacobi"]
    shifted = ShiftSpec.parse("alpha/q^2").apply(spec)
    assert shifted.param("alpha") == spec.param("alpha") / spec.q**2
    wilson = REFERENCE["wilson"]
    assert ShiftSpec.parse("a-1").apply(wilson).param("a") == F(-1, 2)


# ---------------------------------------------------------------------------
# closed-form coefficient spot values
# ---------------------------------------------------------------------------


def test_eq1ql_sigma_value():
    spec = FamilySpec("q-laguerre", q=F(1, 2), t=F(1, 2))
    assert catalog_coeffs(CATALOG["eq1ql"], 1, spec) == (1, F(2))


def test_eq1asc1_sigma_value():
    spec = REFERENCE["al-salam-carlitz-i"]  # alpha=-2, q=1/2
    assert catalog_coeffs(CATALOG["eq1asc1"], 1, spec) == (1, F(2))


def test_eqw1_sigma_value():
    spec = REFERENCE["wilson"]  # a,b,c,d = 1/2, 3/4, 5/4, 7/4
    assert catalog_coeffs(CATALOG["eqw1"], 1, spec) == (1, F(240, 221))


def test_complex_sigma_for_single_parameter_hahn_shift():
    spec = REFERENCE["continuous-hahn"]
    sigma = catalog_coeffs(CATALOG["eqch1"], 3, spec)[1]
    assert isinstance(sigma, GaussianRational) and sigma.im != 0


def test_degenerate_denominator_raises():
    spec = FamilySpec("big-q-jacobi", q=F(1, 2), alpha=16, beta=1, gamma=-1)
    with pytest.raises(DegenerateParameterError):
        catalog_coeffs(CATALOG["eq1bqj"], 2, spec)  # alpha*beta*q^{2n} = 1


# ---------------------------------------------------------------------------
# identity verification
# ---------------------------------------------------------------------------


def test_every_entry_holds_on_a_spot_degree():
    for entry in CATALOG.values():
        spec = catalog_instance(entry.family)
        assert verify_entry(entry, entry.depth + 2, spec).holds, entry.id


def test_eq6bqj_at_spec_example_instance():
    spec = FamilySpec("big-q-jacobi", q=F(2, 5), alpha=2, beta=2, gamma=-1)
    assert verify_entry(CATALOG["eq6bqj"], 4, spec).holds


def test_perturbed_sigma_fails():
    entry = CATALOG["eq1bqj"]
    spec = catalog_instance("big-q-jacobi")
    sigmas = list(catalog_coeffs(entry, 5, spec))
    sigmas[1] = sigmas[1] + 1
    res = verify_entry(entry, 5, spec, sigma_override=sigmas)
    assert not res.holds
    assert not res.residual.is_zero()


# ---------------------------------------------------------------------------
# discovery
# ---------------------------------------------------------------------------


def _brute_force_expand(target, basis):
    """Independent oracle: dense Gaussian elimination on the linear system
    sum_j c_j basis[j] = target (unknowns c_j, equations per degree)."""
    n = len(basis) - 1
    rows = []
    for d in range(n + 1):
        rows.append([basis[j].coeff(d) for j in range(n + 1)] + [target.coeff(d)])
    # forward elimination with exact pivoting
    for col in range(n + 1):
        piv = next(r for r in range(col, n + 1) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [v / pv for v in rows[col]]
        for r in range(n + 1):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[j][-1] for j in range(n + 1)]


def test_expansion_matches_brute_force_solve():
    # spec example: big q-Jacobi alpha-shift at n=3 has exactly two nonzero
    # trailing coefficients, equal to the eq1bqj closed form
    from quasiortho.polyalg import expand_in_basis

    base = FamilySpec("big-q-jacobi", q=F(2, 5), alpha=2, beta=F(1, 2), gamma=-1)
    n = 3
    target = monic_poly(ShiftSpec.parse("alpha/q").apply(base), n)
    basis = [monic_poly(base, d) for d in range(n + 1)]
    brute = _brute_force_expand(target, basis)
    assert expand_in_basis(target, basis) == brute
    assert brute[0] == 0 and brute[1] == 0
    sigma = catalog_coeffs(CATALOG["eq1bqj"], n, base)
    assert brute[n] == 1 and brute[n - 1] == sigma[1]


def test_discovery_matches_catalog_everywhere():
    for entry in CATALOG.values():
        spec = catalog_instance(entry.family)
        for n in (entry.depth + 1, entry.depth + 3):
            got = discover_coeffs(spec, entry.shift, n, entry.depth)
            assert got.found, (entry.id, n)
            assert tuple(got.coefficients) == tuple(
                catalog_coeffs(entry, n, spec)
            ), (entry.id, n)


def test_full_depth_expansion_always_exists():
    spec = REFERENCE["big-q-jacobi"]
    result = discover_coeffs(spec, ShiftSpec.parse("alpha/q"), 5, 4)
    assert result.found and result.coefficients[0] == 1


def test_negative_controls():
    cases = [
        ("q-meixner", "beta/q"),
        ("al-salam-carlitz-ii", "alpha/q"),
        ("bessel", "alpha+1"),
    ]
    for fam, shift_text in cases:
        spec = REFERENCE[fam]
        shift = ShiftSpec.parse(shift_text)
        for depth in (1, 2, 3):
            result = discover_coeffs(spec, shift, 5, depth)
            assert not result.found, (fam, depth)
            assert result.first_offending == 5 - depth - 1


def test_bessel_downward_shift_is_a_constant_combination():
    # the x-dependent display is the upward direction; downward is two-term
    result = discover_coeffs(REFERENCE["bessel"], ShiftSpec.parse("alpha-1"), 5, 1)
    assert result.found and len(result.coefficients) == 2


def test_discover_depth_bounds():
    spec = REFERENCE["big-q-jacobi"]
    with pytest.raises(RecurrenceError):
        discover_coeffs(spec, ShiftSpec.parse("alpha/q"), 5, 5)


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------


def test_compose_k1_equals_catalog():
    entry = CATALOG["eq1lqj"]
    spec = REFERENCE["little-q-jacobi"]
    assert compose_entries(entry, 1, 5, spec) == catalog_coeffs(entry, 5, spec)


def test_compose_matches_discovery():
    entry = CATALOG["eq1bqj"]
    spec = REFERENCE["big-q-jacobi"]
    for k in (2, 3):
        comp = compose_entries(entry, k, 5, spec)
        disc = discover_coeffs(spec, ShiftSpec.parse(f"alpha/q^{k}"), 5, k)
        assert tuple(comp) == tuple(disc.coefficients), k


def test_compose_beta_then_alpha_reproduces_joint_relation():
    spec = REFERENCE["big-q-jacobi"]
    for n in (3, 5, 8):
        comp = compose_sequence([CATALOG["eq3bqj"], CATALOG["eq1bqj"]], n, spec)
        want = catalog_coeffs(CATALOG["eq6bqj"], n, spec)
        assert tuple(comp) == tuple(want), n


def test_compose_names_degenerate_stage():
    # iterating the alpha shift walks alpha into alpha*beta*q^{2m} = q
    spec = FamilySpec("big-q-jacobi", q=F(1, 2), alpha=32, beta=1, gamma=-1)
    with pytest.raises(DegenerateParameterError, match="stage"):
        compose_entries(CATALOG["eq1bqj"], 3, 4, spec)


def test_manifest_is_complete_and_sorted():
    manifest = catalog_manifest()
    assert len(manifest) == len(CATALOG)
    ids = [e["id"] for e in manifest]
    assert ids == sorted(ids)
    from quasiortho.families import FAMILY_IDS

    assert {e["family"] for e in manifest} <= set(FAMILY_IDS)
    for item in manifest:
        assert set(item) == {"id", "family", "shift", "depth", "tag"}


def test_entries_for_families_with_relations():
    assert {e.id for e in entries_for("big-q-jacobi")} == {
        "eq1bqj", "eq3bqj", "eq5bqj", "eq6bqj",
    }
    assert entries_for("q-meixner") == []
