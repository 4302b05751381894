"""Backend ergonomics: the compiled kernels must agree with the pure ones."""

from __future__ import annotations

import random

import pytest

from quasiortho import _kernels, _kernels_py

try:
    from quasiortho import _kernels_c
except ImportError:
    _kernels_c = None

BACKENDS = [_kernels_py] + ([_kernels_c] if _kernels_c else [])


def test_selected_backend_is_exported():
    assert _kernels.BACKEND in ("python", "c")


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")
def test_backends_agree_on_random_inputs():
    rng = random.Random(99)
    for _ in range(300):
        deg = rng.randint(0, 9)
        coeffs = [rng.randint(-10**6, 10**6) for _ in range(deg + 1)]
        if coeffs and coeffs[-1] == 0:
            coeffs[-1] = 1
        num = rng.randint(-10**6, 10**6)
        den = rng.randint(1, 10**6)
        assert _kernels_py.sign_at(coeffs, num, den) == _kernels_c.sign_at(
            coeffs, num, den
        )
        for positive in (True, False):
            assert _kernels_py.sign_at_inf(coeffs, positive) == _kernels_c.sign_at_inf(
                coeffs, positive
            )
    signs = [rng.choice((-1, 0, 1)) for _ in range(40)]
    assert _kernels_py.variations(signs) == _kernels_c.variations(signs)


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")
def test_backends_agree_on_refinement():
    # x^2 - 2 bracketed in (1, 2): p(1) = -1 < 0
    coeffs = [-2, 0, 1]
    args = (coeffs, 1, 1, 2, 1, -1, 50)
    assert _kernels_py.refine_bisect(*args) == _kernels_c.refine_bisect(*args)


def test_variations_skips_zeros():
    assert _kernels_py.variations([1, 0, 0, -1, 0, 1]) == 2
    assert _kernels_py.variations([0, 0]) == 0
    assert _kernels_py.variations([]) == 0


def test_sign_at_exact_zero():
    # p = (2x - 1)(x + 3) evaluated at 1/2
    assert _kernels_py.sign_at([-3, 5, 2], 1, 2) == 0


def test_sign_at_inf():
    coeffs = [0, 0, 0, -4]  # -4x^3
    assert _kernels_py.sign_at_inf(coeffs, True) == -1
    assert _kernels_py.sign_at_inf(coeffs, False) == 1
