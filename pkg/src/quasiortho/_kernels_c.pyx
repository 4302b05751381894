# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of `quasiortho._kernels_py`.

Same integerized contract: coefficient lists of Python ints (arbitrary
precision), rational points as (num, den) with den > 0.  Cython removes the
interpreter loop overhead; the big-int arithmetic itself is CPython's.
"""

from math import gcd


def sign_at(list coeffs, num, den):
    """Sign of p(num/den) for den > 0."""
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t i
    if n == 0:
        return 0
    acc = coeffs[n - 1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow = dpow * den
        acc = acc * num + coeffs[i] * dpow
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


def sign_at_inf(list coeffs, bint positive):
    """Sign of p at +inf (positive=True) or -inf."""
    cdef Py_ssize_t n = len(coeffs)
    cdef int s
    if n == 0:
        return 0
    lc = coeffs[n - 1]
    s = 1 if lc > 0 else -1
    if not positive and (n - 1) % 2 == 1:
        s = -s
    return s


def variations(list signs):
    """Number of sign changes, zeros ignored."""
    cdef int count = 0
    cdef int prev = 0
    cdef int s
    for value in signs:
        s = value
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def chain_variations_at(list chain, num, den):
    cdef list signs = [sign_at(f, num, den) for f in chain]
    return variations(signs)


def chain_variations_at_inf(list chain, bint positive):
    cdef list signs = [sign_at_inf(f, positive) for f in chain]
    return variations(signs)


def refine_bisect(list coeffs, lo_num, lo_den, hi_num, hi_den, int sign_lo,
                  Py_ssize_t steps):
    """Halve a sign-change bracket `steps` times (see pure twin for contract)."""
    cdef Py_ssize_t k
    cdef int s
    for k in range(steps):
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
