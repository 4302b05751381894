#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the pure-Python twins.

The hot loops are integerized Sturm-chain sign evaluation and bisection
refinement; this script times both backends on realistic inputs (the Sturm
chain of a degree-16 Wilson polynomial, whose remainder coefficients run to
hundreds of digits) and on a synthetic high-degree random polynomial.

Usage: python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time
from fractions import Fraction as F

from quasiortho import _kernels_py
from quasiortho.families import FamilySpec, monic_poly
from quasiortho.polyalg import Poly, sturm_chain, sturm_isolate

try:
    from quasiortho import _kernels_c
except ImportError:
    _kernels_c = None


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_chain_variations(chain, points, backend, rounds=40):
    def run():
        for _ in range(rounds):
            for num, den in points:
                backend.chain_variations_at(chain, num, den)

    return _time(run)


def bench_refine(coeffs, backend, steps=4000):
    def run():
        backend.refine_bisect(coeffs, 1, 1, 2, 1, -1, steps)

    return _time(run)


def main():
    wilson = FamilySpec("wilson", a=F(1, 2), b=F(3, 4), c=F(5, 4), d=F(7, 4))
    p16 = monic_poly(wilson, 16)
    chain = sturm_chain(p16)
    rng = random.Random(3)
    points = [
        (rng.randint(-10**6, 10**6), rng.randint(1, 10**6)) for _ in range(25)
    ]

    rng2 = random.Random(7)
    dense = Poly([F(rng2.randint(-10**8, 10**8)) for _ in range(24)] + [F(1)])
    dense_ints = [int(c) for c in dense.coeffs]
    # make sure a sign change brackets a root of x^2 - 2 style problem
    sqrt_target = [-2, 0, 1]

    rows = []
    backends = [("python", _kernels_py)] + (
        [("c", _kernels_c)] if _kernels_c else []
    )
    for name, backend in backends:
        rows.append(
            (
                name,
                bench_chain_variations(chain, points, backend),
                bench_refine(sqrt_target, backend),
                _time(lambda: [backend.sign_at(dense_ints, n, d) for n, d in points * 40]),
            )
        )

    print(f"{'backend':8s} {'sturm-chain':>12s} {'refine-4000':>12s} {'sign-eval':>12s}")
    for name, t1, t2, t3 in rows:
        print(f"{name:8s} {t1 * 1e3:10.1f}ms {t2 * 1e3:10.1f}ms {t3 * 1e3:10.1f}ms")
    if len(rows) == 2:
        speedups = [rows[0][i] / rows[1][i] for i in (1, 2, 3)]
        print(
            "speedup (python/c): "
            + "  ".join(f"{s:.2f}x" for s in speedups)
        )

    # end-to-end sanity: isolation through the selected backend
    t0 = time.perf_counter()
    boxes = sturm_isolate(p16)
    print(
        f"isolate degree-16 Wilson member: {len(boxes)} real roots in "
        f"{(time.perf_counter() - t0) * 1e3:.1f}ms"
    )


if __name__ == "__main__":
    main()
