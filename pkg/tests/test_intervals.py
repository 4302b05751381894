from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiortho.intervals import RatInterval, eval_poly

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=25)


def _interval(center, radius):
    return RatInterval(center - radius, center + radius)


@settings(max_examples=60)
@given(rationals, rationals, rationals, rationals)
def test_operations_enclose_point_results(a, b, ra, rb):
    ra, rb = abs(ra) / 7, abs(rb) / 7
    x = _interval(a, ra)
    y = _interval(b, rb)
    for op in (lambda u, v: u + v, lambda u, v: u - v, lambda u, v: u * v):
        enclosed = op(x, y)
        truth = op(a, b)
        assert enclosed.lo <= truth <= enclosed.hi


@settings(max_examples=40)
@given(rationals, st.integers(min_value=0, max_value=6))
def test_power_encloses(a, n):
    x = _interval(a, F(1, 13))
    enclosed = x**n
    assert enclosed.lo <= a**n <= enclosed.hi


def test_inverse_requires_nonzero_interval():
    with pytest.raises(ZeroDivisionError):
        RatInterval(F(-1), F(1)).inverse()
    inv = RatInterval(F(1, 2), F(2)).inverse()
    assert inv.lo == F(1, 2) and inv.hi == F(2)


def test_division_and_properties():
    x = RatInterval(F(1), F(2))
    y = RatInterval(F(4), F(5))
    z = x / y
    assert z.lo <= F(3, 2) / F(9, 2) <= z.hi
    assert x.width == 1 and x.mid == F(3, 2)
    assert y.definitely_positive()
    assert RatInterval(F(-3), F(-1)).abs_hi() == 3


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        RatInterval(F(1), F(0))


def test_eval_poly_encloses_exact_value():
    rng = random.Random(13)
    for _ in range(20):
        coeffs = [F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(6)]
        point = F(rng.randint(-20, 20), rng.randint(1, 9))
        width = F(1, 10**9)
        x = RatInterval(point - width, point + width)
        enclosed = eval_poly(coeffs, x)
        truth = sum(c * point**i for i, c in enumerate(coeffs))
        assert enclosed.lo <= truth <= enclosed.hi
        # width scales like |p'| * input width; generous cap
        assert enclosed.width < F(1, 10**2)
