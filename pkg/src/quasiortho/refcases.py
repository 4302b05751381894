"""Reference parameter instances for every family.

These are the instances the verification suites and the CLI default to: each
base family is inside its orthogonality region (checked exactly by tests) and
the shifted parameter leaves it, which is what makes the shifted sequences
quasi-orthogonal rather than orthogonal.  Finite-discrete instances were
chosen so every weight is exactly positive.

REFERENCE maps family id -> FamilySpec.  A few suites need secondary
instances (e.g. the beta-truncated q-Racah case); those live in EXTRA.
"""

from __future__ import annotations

from fractions import Fraction as F

from .exactnum import GaussianRational
from .families import FamilySpec


def _gr(re, im):
    return GaussianRational(F(re), F(im))


REFERENCE = {
    # alpha > 1 and beta > 1 so that both q-shifts leave the region.
    "big-q-jacobi": FamilySpec(
        "big-q-jacobi", q=F(2, 5), alpha=2, beta=2, gamma=-1
    ),
    "big-q-laguerre": FamilySpec("big-q-laguerre", q=F(2, 5), alpha=2, gamma=-1),
    "q-hahn": FamilySpec("q-hahn", q=F(1, 2), alpha=F(3, 2), beta=F(3, 2), N=8),
    "affine-q-krawtchouk": FamilySpec(
        "affine-q-krawtchouk", q=F(1, 2), alpha=F(3, 2), N=8
    ),
    # window q^-N < p < q^-(N+1)
    "quantum-q-krawtchouk": FamilySpec(
        "quantum-q-krawtchouk", q=F(1, 2), p=384, N=8
    ),
    "little-q-jacobi": FamilySpec(
        "little-q-jacobi", q=F(1, 2), alpha=F(3, 2), beta=F(3, 2)
    ),
    "little-q-laguerre": FamilySpec("little-q-laguerre", q=F(1, 2), alpha=F(3, 2)),
    # t = q^alpha with -1 < alpha < 0  <=>  1 < t < 1/q
    "q-laguerre": FamilySpec("q-laguerre", q=F(1, 2), t=F(3, 2)),
    "al-salam-carlitz-i": FamilySpec("al-salam-carlitz-i", q=F(1, 2), alpha=-2),
    # q < a < 1, |a| maximal among the four parameters
    "askey-wilson": FamilySpec(
        "askey-wilson", q=F(1, 3), a=F(1, 2), b=F(1, 4), c=F(1, 5), d=F(1, 6)
    ),
    # alpha*q = q^-N truncation; beta < gamma*q^N keeps every weight positive
    "q-racah": FamilySpec(
        "q-racah",
        q=F(1, 2),
        alpha=128,
        beta=F(1, 512),
        gamma=F(1, 4),
        delta=F(1, 3),
        N=6,
    ),
    "wilson": FamilySpec("wilson", a=F(1, 2), b=F(3, 4), c=F(5, 4), d=F(7, 4)),
    # alpha+1 = -N truncation; beta > gamma+N keeps every weight positive
    "racah": FamilySpec(
        "racah", alpha=-7, beta=7, gamma=F(1, 4), delta=F(1, 2), N=6
    ),
    "continuous-hahn": FamilySpec(
        "continuous-hahn",
        a=_gr(F(1, 2), 1),
        b=_gr(F(3, 4), F(1, 2)),
        c=_gr(F(1, 2), -1),
        d=_gr(F(3, 4), F(-1, 2)),
    ),
    "q-krawtchouk": FamilySpec("q-krawtchouk", q=F(1, 2), p=2, N=8),
    "q-meixner": FamilySpec("q-meixner", q=F(1, 2), beta=F(1, 2), gamma=1),
    "al-salam-carlitz-ii": FamilySpec("al-salam-carlitz-ii", q=F(1, 2), alpha=F(1, 2)),
    "bessel": FamilySpec("bessel", alpha=2),
}

EXTRA = {
    # Catalog identities are checked up to n = 8, so the q-Racah / Racah
    # instances there need N >= 8.
    "q-racah-n8": FamilySpec(
        "q-racah",
        q=F(1, 2),
        alpha=512,
        beta=F(1, 2048),
        gamma=F(1, 4),
        delta=F(1, 3),
        N=8,
    ),
    "racah-n8": FamilySpec(
        "racah", alpha=-9, beta=9, gamma=F(1, 4), delta=F(1, 2), N=8
    ),
    # beta*delta*q = q^-N truncation; alpha < gamma*delta*q^N for positivity
    "q-racah-beta": FamilySpec(
        "q-racah",
        q=F(1, 2),
        alpha=F(1, 1024),
        beta=384,
        gamma=F(1, 4),
        delta=F(1, 3),
        N=6,
    ),
    # beta+delta+1 = -N truncation; alpha >= gamma+delta+N+1 for positivity
    "racah-beta": FamilySpec(
        "racah", alpha=F(35, 4), beta=F(-15, 2), gamma=F(1, 4), delta=F(1, 2), N=6
    ),
    # negative Askey-Wilson anchor: -1 < a < -q
    "askey-wilson-neg": FamilySpec(
        "askey-wilson", q=F(1, 3), a=F(-1, 2), b=F(1, 4), c=F(1, 5), d=F(1, 6)
    ),
    # big q-Jacobi with beta in region (beta*q < 1, beta < 1): used where only
    # the alpha shift should leave the region
    "big-q-jacobi-smallbeta": FamilySpec(
        "big-q-jacobi", q=F(2, 5), alpha=2, beta=F(1, 2), gamma=-1
    ),
    # beta shift instance with alpha safely in region and not > 1
    "big-q-jacobi-smallalpha": FamilySpec(
        "big-q-jacobi", q=F(2, 5), alpha=F(1, 2), beta=2, gamma=-1
    ),
    # conjugate-pair Wilson instance for cancellation checks
    "wilson-conjugate": FamilySpec(
        "wilson", a=F(1, 2), b=F(3, 2), c=_gr(1, 1), d=_gr(1, -1)
    ),
}


def catalog_instance(family: str) -> FamilySpec:
    """Instance used for catalog identity checks at n up to 8."""
    if family == "q-racah":
        return EXTRA["q-racah-n8"]
    if family == "racah":
        return EXTRA["racah-n8"]
    return REFERENCE[family]
