"""Pure-Python hot kernels for Sturm evaluation and bisection refinement.

All functions work on *integerized* polynomials: coefficient lists of Python
ints, constant term first.  A rational point is passed as (num, den) with
den > 0.  Scaling a polynomial by a positive constant never changes signs, so
callers clear denominators once and the inner loops below stay in integer
arithmetic.

`quasiortho._kernels_c` is a compiled twin of this module; `_kernels` picks
one at import time.
"""

from __future__ import annotations

from math import gcd


def sign_at(coeffs: list, num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0: evaluates sum c_i num^i den^(d-i)."""
    if not coeffs:
        return 0
    acc = coeffs[-1]
    dpow = 1
    for i in range(len(coeffs) - 2, -1, -1):
        dpow *= den
        acc = acc * num + coeffs[i] * dpow
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


def sign_at_inf(coeffs: list, positive: bool) -> int:
    """Sign of p at +inf (positive=True) or -inf."""
    if not coeffs:
        return 0
    lc = coeffs[-1]
    s = 1 if lc > 0 else -1
    if not positive and (len(coeffs) - 1) % 2 == 1:
        s = -s
    return s


def variations(signs: list) -> int:
    """Number of sign changes in a sequence, zeros ignored."""
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def chain_variations_at(chain: list, num: int, den: int) -> int:
    return variations([sign_at(f, num, den) for f in chain])


def chain_variations_at_inf(chain: list, positive: bool) -> int:
    return variations([sign_at_inf(f, positive) for f in chain])


def refine_bisect(
    coeffs: list,
    lo_num: int,
    lo_den: int,
    hi_num: int,
    hi_den: int,
    sign_lo: int,
    steps: int,
):
    """Halve a sign-change bracket `steps` times.

    Requires sign(p(lo)) == sign_lo != 0 and sign(p(hi)) == -sign_lo.
    Returns (lo_num, lo_den, hi_num, hi_den, hit_num, hit_den) where hit is a
    midpoint that evaluated to exactly zero (an exact rational root), or
    (0, 0) if no exact hit occurred.
    """
    for _ in range(steps):
        mn = lo_num * hi_den + hi_num * lo_den
        md = 2 * lo_den * hi_den
        g = gcd(mn, md)
        if g > 1:
            mn //= g
            md //= g
        s = sign_at(coeffs, mn, md)
        if s == 0:
            return lo_num, lo_den, hi_num, hi_den, mn, md
        if s == sign_lo:
            lo_num, lo_den = mn, md
        else:
            hi_num, hi_den = mn, md
    return lo_num, lo_den, hi_num, hi_den, 0, 0
