"""Monic polynomial families, orthogonality regions, supports and moments.

Each family is constructed exactly from its terminating series definition,
expanding the variable-bearing Pochhammer products into dense polynomials on
the family's lattice, then normalizing to monic form.  Complex-parameter
constructions run over Gaussian rationals and are certified exactly real when
the parameters pair into conjugates.

Finite-support families additionally expose their discrete weights (via the
weight-ratio recurrence) and exact moment sums; orthogonal families expose a
rigorous Gauss-quadrature moment estimate with certified error enclosure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .exactnum import (
    GaussianRational,
    Scalar,
    as_fraction,
    as_scalar,
    conj,
    format_scalar,
    is_real,
    scalar_re,
)
from .intervals import RatInterval, eval_poly
from .polyalg import Poly, make_monic, refine_root, sturm_isolate, ttrr_extract


class FamilyError(ValueError):
    pass


class DegenerateParameterError(FamilyError):
    """A construction or coefficient denominator vanished exactly."""


class WeightUndefinedError(FamilyError):
    """Discrete weight hit a zero denominator at a named support point."""


# family id -> (ordered param names, lattice tag, has q, finite support)
FAMILY_INFO = {
    "big-q-jacobi": (("alpha", "beta", "gamma"), "plain-x", True, False),
    "big-q-laguerre": (("alpha", "gamma"), "plain-x", True, False),
    "q-hahn": (("alpha", "beta", "N"), "qminusx", True, True),
    "affine-q-krawtchouk": (("alpha", "N"), "qminusx", True, True),
    "quantum-q-krawtchouk": (("p", "N"), "qminusx", True, True),
    "little-q-jacobi": (("alpha", "beta"), "plain-x", True, False),
    "little-q-laguerre": (("alpha",), "plain-x", True, False),
    "q-laguerre": (("t",), "plain-x", True, False),
    "al-salam-carlitz-i": (("alpha",), "plain-x", True, False),
    "askey-wilson": (("a", "b", "c", "d"), "cos-theta", True, False),
    "q-racah": (("alpha", "beta", "gamma", "delta", "N"), "mu-lattice", True, True),
    "wilson": (("a", "b", "c", "d"), "x-squared", False, False),
    "racah": (("alpha", "beta", "gamma", "delta", "N"), "lambda-lattice", False, True),
    "continuous-hahn": (("a", "b", "c", "d"), "plain-x", False, False),
    "q-krawtchouk": (("p", "N"), "qminusx", True, True),
    "q-meixner": (("beta", "gamma"), "qminusx", True, False),
    "al-salam-carlitz-ii": (("alpha",), "plain-x", True, False),
    "bessel": (("alpha",), "plain-x", False, False),
}

FAMILY_IDS = tuple(FAMILY_INFO)

#: families with finite discrete support 0..N (exact moment oracle enabled)
FINITE_DISCRETE = tuple(f for f, info in FAMILY_INFO.items() if info[3])


def canonical_family(name: str) -> str:
    key = name.strip().lower().replace("_", "-").replace(" ", "-")
    compact = {f.replace("-", ""): f for f in FAMILY_INFO}
    if key in FAMILY_INFO:
        return key
    if key.replace("-", "") in compact:
        return compact[key.replace("-", "")]
    raise FamilyError(f"unknown family {name!r}")


@dataclass(frozen=True)
class FamilySpec:
    """A family id plus its exact parameter record."""

    family: str
    params: tuple

    def __init__(self, family: str, params=None, **kw):
        fam = canonical_family(family)
        names, _, has_q, finite = FAMILY_INFO[fam]
        given = dict(params or {})
        given.update(kw)
        want = (("q",) if has_q else ()) + names
        missing = [k for k in want if k not in given]
        extra = [k for k in given if k not in want]
        if missing or extra:
            raise FamilyError(
                f"{fam} takes parameters {want}; missing={missing} extra={extra}"
            )
        items = []
        for k in want:
            v = as_scalar(given[k])
            if k == "q":
                qv = as_fraction(v)
                if not (0 < qv < 1):
                    raise FamilyError(f"q must satisfy 0 < q < 1, got {qv}")
                v = qv
            if k == "N":
                nv = as_fraction(v)
                if nv.denominator != 1 or nv < 0:
                    raise FamilyError(f"N must be a nonnegative integer, got {nv}")
                v = nv
            items.append((k, v))
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "params", tuple(items))

    def param(self, name: str) -> Scalar:
        for k, v in self.params:
            if k == name:
                return v
        raise FamilyError(f"{self.family} has no parameter {name!r}")

    @property
    def q(self) -> Fraction:
        return self.param("q")

    @property
    def N(self) -> int:
        return int(as_fraction(self.param("N")))

    @property
    def lattice(self) -> str:
        return FAMILY_INFO[self.family][1]

    def is_finite(self) -> bool:
        return FAMILY_INFO[self.family][3]

    def replace(self, **updates) -> "FamilySpec":
        d = dict(self.params)
        d.update(updates)
        return FamilySpec(self.family, d)

    def as_dict(self) -> dict:
        return {k: format_scalar(as_scalar(v)) for k, v in self.params}

    def __str__(self):
        ps = ", ".join(f"{k}={format_scalar(as_scalar(v))}" for k, v in self.params)
        return f"{self.family}({ps})"


# ---------------------------------------------------------------------------
# Series constructions
# ---------------------------------------------------------------------------


def _qpow(q: Fraction, e: int) -> Fraction:
    return q**e if e >= 0 else Fraction(1) / q ** (-e)


class _SeriesSum:
    """Accumulates sum_m scalar_m * VP_m where VP is an incremental
    variable-bearing product of polynomial factors."""

    def __init__(self, lattice: str):
        self.total = Poly.zero(lattice)
        self.vp = Poly.one(lattice)
        self.lattice = lattice

    def add_term(self, scalar: Scalar):
        if scalar:
            self.total = self.total + self.vp.scale(scalar)

    def push_factor(self, factor: Poly):
        self.vp = self.vp * factor


def _safe_div(num: Scalar, den: Scalar, what: str) -> Scalar:
    if not den:
        raise DegenerateParameterError(f"vanishing factor in {what}")
    return num / den


def _build_q_series(
    n: int,
    q: Fraction,
    lattice: str,
    num_consts: Sequence[Scalar],
    den_consts: Sequence[Scalar],
    z: Scalar,
    var_factor,
    sign_power: int = 0,
):
    """Terminating series sum_{m=0}^{n} of a basic hypergeometric term.

    num_consts / den_consts are the constant numerator/denominator Pochhammer
    arguments beside q^-n (numerator) and (q;q)_m (denominator); var_factor(j)
    is the degree-raising polynomial factor appended at step j; z is the
    argument; sign_power is the exponent on ((-1)^m q^binom(m,2)).
    """
    s = _SeriesSum(lattice)
    term: Scalar = Fraction(1)
    s.add_term(term)
    qm = Fraction(1)  # q^m
    zpow: Scalar = Fraction(1)
    qminus_n = _qpow(q, -n)
    for m in range(1, n + 1):
        j = m - 1
        qj = q**j
        term = term * (1 - qminus_n * qj)  # (q^-n; q)_m update
        for a in num_consts:
            term = term * (1 - a * qj)
        for a in den_consts:
            term = _safe_div(term, 1 - a * qj, f"denominator Pochhammer at m={m}")
        term = _safe_div(term, 1 - q**m, "q-factorial")
        if sign_power:
            term = term * ((-1) * q**j) ** sign_power  # appends (-1) q^j per step
        s.push_factor(var_factor(j))
        zpow = zpow * z
        qm = qm * q
        s.add_term(term * zpow)
    return s.total


def _build_big_q_jacobi(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    alpha = spec.param("alpha")
    beta = spec.param("beta")
    gamma = spec.param("gamma")
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[alpha * beta * _qpow(q, n + 1)],
        den_consts=[alpha * q, gamma * q],
        z=q,
        var_factor=lambda j: one - x.scale(q**j),
    )


def _build_q_hahn(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    alpha = spec.param("alpha")
    beta = spec.param("beta")
    N = spec.N
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[alpha * beta * _qpow(q, n + 1)],
        den_consts=[alpha * q, _qpow(q, -N)],
        z=q,
        var_factor=lambda j: one - x.scale(q**j),
    )


def _build_quantum_qk(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    p = spec.param("p")
    N = spec.N
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[],
        den_consts=[_qpow(q, -N)],
        z=p * _qpow(q, n + 1),
        var_factor=lambda j: one - x.scale(q**j),
    )


def _build_little_q_jacobi(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    alpha = spec.param("alpha")
    beta = spec.param("beta")
    lat = spec.lattice
    x = Poly.x(lat)
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[alpha * beta * _qpow(q, n + 1)],
        den_consts=[alpha * q],
        z=Fraction(1),
        var_factor=lambda j: x.scale(q),  # argument qx enters as a power
    )


def _build_q_laguerre(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    t = spec.param("t")  # t = q^alpha, exact
    lat = spec.lattice
    x = Poly.x(lat)
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[],
        den_consts=[q * t],
        z=Fraction(1),
        var_factor=lambda j: x.scale(-_qpow(q, n + 1) * t),
        sign_power=1,
    )


def _build_asc1(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    alpha = spec.param("alpha")
    if not alpha:
        raise DegenerateParameterError("al-salam-carlitz-i needs alpha != 0")
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    # x^m (x^-1; q)_m = prod_{j<m} (x - q^j)  with argument (q/alpha)^m
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[],
        den_consts=[],
        z=q / alpha,
        var_factor=lambda j: x - one.scale(q**j),
    )


def _build_asc2(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    alpha = spec.param("alpha")
    if not alpha:
        raise DegenerateParameterError("al-salam-carlitz-ii needs alpha != 0")
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[],
        den_consts=[],
        z=_qpow(q, n) / alpha,
        var_factor=lambda j: one - x.scale(q**j),
        sign_power=-1,
    )


def _build_q_meixner(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    beta = spec.param("beta")
    gamma = spec.param("gamma")
    if not gamma:
        raise DegenerateParameterError("q-meixner needs gamma != 0")
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[],
        den_consts=[beta * q],
        z=-_qpow(q, n + 1) / gamma,
        var_factor=lambda j: one - x.scale(q**j),
    )


def _build_q_krawtchouk(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    p = spec.param("p")
    N = spec.N
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[-p * _qpow(q, n)],
        den_consts=[_qpow(q, -N)],
        z=q,
        var_factor=lambda j: one - x.scale(q**j),
    )


def _anchored(params, build_with_anchor):
    """Try each parameter as the series anchor; the polynomial is symmetric
    in the four parameters, so any anchor with nonvanishing denominator
    Pochhammers yields the same monic result."""
    last = None
    for i in range(len(params)):
        anchor = params[i]
        rest = params[:i] + params[i + 1 :]
        try:
            return build_with_anchor(anchor, rest)
        except DegenerateParameterError as exc:
            last = exc
    raise last


def _build_askey_wilson(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    params = [spec.param(k) for k in "abcd"]
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    prod4 = params[0] * params[1] * params[2] * params[3]

    def build(a, rest):
        def factor(j):
            # (a e^{i th}; q)(a e^{-i th}; q) step: 1 - 2 a x q^j + a^2 q^{2j}
            qj = q**j
            return one.scale(1 + a * a * qj * qj) - x.scale(2 * a * qj)

        return _build_q_series(
            n,
            q,
            lat,
            num_consts=[prod4 * _qpow(q, n - 1)],
            den_consts=[a * r for r in rest],
            z=q,
            var_factor=factor,
        )

    return _anchored(params, build)


def _build_q_racah(spec: FamilySpec, n: int) -> Poly:
    q = spec.q
    alpha = spec.param("alpha")
    beta = spec.param("beta")
    gamma = spec.param("gamma")
    delta = spec.param("delta")
    lat = spec.lattice
    mu = Poly.x(lat)
    one = Poly.one(lat)
    gd = gamma * delta

    def factor(j):
        # (q^-x; q)(gd q^{x+1}; q) step: 1 - mu q^j + gd q^{2j+1}
        qj = q**j
        return one.scale(1 + gd * qj * qj * q) - mu.scale(qj)

    return _build_q_series(
        n,
        q,
        lat,
        num_consts=[alpha * beta * _qpow(q, n + 1)],
        den_consts=[alpha * q, beta * delta * q, gamma * q],
        z=q,
        var_factor=factor,
    )


def _build_classical_series(
    n: int,
    lattice: str,
    extra_num: Sequence[Scalar],
    den_consts: Sequence[Scalar],
    z: Scalar,
    var_factor,
):
    """Terminating sum_m (-n)_m (extra)_m ... / ((den)_m m!) z^m VP_m."""
    s = _SeriesSum(lattice)
    term: Scalar = Fraction(1)
    s.add_term(term)
    zpow: Scalar = Fraction(1)
    for m in range(1, n + 1):
        j = m - 1
        term = term * (-n + j)
        for a in extra_num:
            term = term * (a + j)
        for a in den_consts:
            term = _safe_div(term, a + j, f"denominator Pochhammer at m={m}")
        term = term / m
        s.push_factor(var_factor(j))
        zpow = zpow * z
        s.add_term(term * zpow)
    return s.total


def _build_wilson(spec: FamilySpec, n: int) -> Poly:
    params = [spec.param(k) for k in "abcd"]
    lat = spec.lattice
    y = Poly.x(lat)  # y = x^2
    one = Poly.one(lat)
    s_total = sum(params[1:], params[0])

    def build(a, rest):
        def factor(j):
            # (a+ix)_m (a-ix)_m step: (a+j)^2 + y
            return one.scale((a + j) * (a + j)) + y

        return _build_classical_series(
            n,
            lat,
            extra_num=[n + s_total - 1],
            den_consts=[a + r for r in rest],
            z=Fraction(1),
            var_factor=factor,
        )

    return _anchored(params, build)


def _build_racah(spec: FamilySpec, n: int) -> Poly:
    alpha = spec.param("alpha")
    beta = spec.param("beta")
    gamma = spec.param("gamma")
    delta = spec.param("delta")
    lat = spec.lattice
    lam = Poly.x(lat)
    one = Poly.one(lat)
    gd1 = gamma + delta + 1

    def factor(j):
        # (-x)_m (x+gamma+delta+1)_m step: j (gd1 + j) - lambda
        return one.scale(j * (gd1 + j)) - lam

    return _build_classical_series(
        n,
        lat,
        extra_num=[n + alpha + beta + 1],
        den_consts=[alpha + 1, beta + delta + 1, gamma + 1],
        z=Fraction(1),
        var_factor=factor,
    )


def _build_continuous_hahn(spec: FamilySpec, n: int) -> Poly:
    a = spec.param("a")
    b = spec.param("b")
    c = spec.param("c")
    d = spec.param("d")
    lat = spec.lattice
    x = Poly.x(lat)
    one = Poly.one(lat)
    i_unit = GaussianRational(0, 1)
    s_total = a + b + c + d

    # symmetric in {a, b} and in {c, d}: fall back to the b anchor when the
    # a-anchored denominator Pochhammers vanish
    def build(anchor, others):
        def factor(j):
            # (anchor + ix)_m step: (anchor + j) + i x
            return one.scale(anchor + j) + x.scale(i_unit)

        return _build_classical_series(
            n,
            lat,
            extra_num=[n + s_total - 1],
            den_consts=[anchor + r for r in others],
            z=Fraction(1),
            var_factor=factor,
        )

    last = None
    for anchor, others in ((a, (c, d)), (b, (c, d))):
        try:
            return build(anchor, others)
        except DegenerateParameterError as exc:
            last = exc
    raise last


def _build_bessel(spec: FamilySpec, n: int) -> Poly:
    alpha = spec.param("alpha")
    lat = spec.lattice
    x = Poly.x(lat)
    return _build_classical_series(
        n,
        lat,
        extra_num=[n + alpha - 1],
        den_consts=[],
        z=Fraction(-1, 2),
        var_factor=lambda j: x,
    )


_BUILDERS = {
    "big-q-jacobi": _build_big_q_jacobi,
    "big-q-laguerre": lambda spec, n: _build_big_q_jacobi(
        FamilySpec(
            "big-q-jacobi",
            q=spec.q,
            alpha=spec.param("alpha"),
            beta=0,
            gamma=spec.param("gamma"),
        ),
        n,
    ),
    "q-hahn": _build_q_hahn,
    "affine-q-krawtchouk": lambda spec, n: _build_q_hahn(
        FamilySpec(
            "q-hahn", q=spec.q, alpha=spec.param("alpha"), beta=0, N=spec.N
        ),
        n,
    ),
    "quantum-q-krawtchouk": _build_quantum_qk,
    "little-q-jacobi": _build_little_q_jacobi,
    "little-q-laguerre": lambda spec, n: _build_little_q_jacobi(
        FamilySpec("little-q-jacobi", q=spec.q, alpha=spec.param("alpha"), beta=0),
        n,
    ),
    "q-laguerre": _build_q_laguerre,
    "al-salam-carlitz-i": _build_asc1,
    "askey-wilson": _build_askey_wilson,
    "q-racah": _build_q_racah,
    "wilson": _build_wilson,
    "racah": _build_racah,
    "continuous-hahn": _build_continuous_hahn,
    "q-krawtchouk": _build_q_krawtchouk,
    "q-meixner": _build_q_meixner,
    "al-salam-carlitz-ii": _build_asc2,
    "bessel": _build_bessel,
}


@lru_cache(maxsize=4096)
def monic_poly(spec: FamilySpec, n: int) -> Poly:
    """Exact monic degree-n member of the family on its lattice.

    Raises DegenerateParameterError when the series normalization vanishes,
    FamilyError for n outside a finite family's range.  Complex-parameter
    results are certified real (exact cancellation) whenever possible.
    """
    if n < 0:
        raise FamilyError("degree must be nonnegative")
    if spec.is_finite() and n > spec.N:
        raise FamilyError(f"{spec.family} is defined for n <= N = {spec.N}")
    raw = _BUILDERS[spec.family](spec, n)
    if raw.degree != n:
        raise DegenerateParameterError(
            f"leading coefficient vanished for {spec} at n={n}"
        )
    poly = make_monic(raw)
    if poly.is_real():
        poly = poly.certify_real()
    return poly


# ---------------------------------------------------------------------------
# Orthogonality regions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegionVerdict:
    status: str  # "Orthogonal" | "QuasiCandidate" | "Invalid"
    notes: tuple

    def is_orthogonal(self) -> bool:
        return self.status == "Orthogonal"


def _note(ok: bool, text: str) -> str:
    return ("satisfied: " if ok else "violated: ") + text


def _real_params_or_invalid(spec, names):
    vals = {}
    for name in names:
        v = spec.param(name)
        if not is_real(v):
            return None
        vals[name] = as_fraction(v)
    return vals


def _conjugate_paired(values) -> bool:
    """Non-real entries must pair into conjugates (multiset check)."""
    pending = []
    for v in values:
        if is_real(v):
            continue
        cv = conj(v)
        if cv in pending:
            pending.remove(cv)
        else:
            pending.append(v)
    return not pending


def region_check(spec: FamilySpec) -> RegionVerdict:
    """Exact evaluation of the family's orthogonality constraints."""
    fam = spec.family
    notes = []

    def verdict():
        ok = all(s.startswith("satisfied") for s in notes)
        return RegionVerdict("Orthogonal" if ok else "QuasiCandidate", tuple(notes))

    if fam in ("big-q-jacobi", "big-q-laguerre"):
        q = spec.q
        alpha = as_fraction(spec.param("alpha"))
        gamma = as_fraction(spec.param("gamma"))
        notes.append(_note(0 < alpha * q < 1, "0 < alpha*q < 1"))
        if fam == "big-q-jacobi":
            beta = as_fraction(spec.param("beta"))
            notes.append(_note(0 <= beta * q < 1, "0 <= beta*q < 1"))
        notes.append(_note(gamma < 0, "gamma < 0"))
        return verdict()

    if fam == "q-hahn":
        q = spec.q
        alpha = as_fraction(spec.param("alpha"))
        beta = as_fraction(spec.param("beta"))
        qN = _qpow(q, -spec.N)
        branch1 = 0 < alpha * q < 1 and 0 < beta * q < 1
        branch2 = alpha > qN and beta > qN
        notes.append(
            _note(branch1 or branch2, "0 < alpha*q, beta*q < 1  or  alpha, beta > q^-N")
        )
        if branch1 or branch2:
            notes.append(_weight_positivity_note(spec))
        return verdict()

    if fam == "affine-q-krawtchouk":
        q = spec.q
        alpha = as_fraction(spec.param("alpha"))
        notes.append(_note(0 < alpha * q < 1, "0 < alpha*q < 1"))
        if notes[-1].startswith("satisfied"):
            notes.append(_weight_positivity_note(spec))
        return verdict()

    if fam == "quantum-q-krawtchouk":
        q = spec.q
        p = as_fraction(spec.param("p"))
        lo, hi = _qpow(q, -spec.N), _qpow(q, -spec.N - 1)
        notes.append(_note(lo < p < hi, "q^-N < p < q^-(N+1)"))
        if notes[-1].startswith("satisfied"):
            notes.append(_weight_positivity_note(spec))
        return verdict()

    if fam in ("little-q-jacobi", "little-q-laguerre"):
        q = spec.q
        alpha = as_fraction(spec.param("alpha"))
        notes.append(_note(0 < alpha * q < 1, "0 < alpha*q < 1"))
        if fam == "little-q-jacobi":
            beta = as_fraction(spec.param("beta"))
            notes.append(_note(beta * q < 1, "beta*q < 1"))
        return verdict()

    if fam == "q-laguerre":
        q = spec.q
        t = as_fraction(spec.param("t"))
        ok = 0 < t < 1 / q
        notes.append(_note(ok, "0 < t < 1/q  (i.e. alpha > -1 with t = q^alpha)"))
        if ok:
            notes.append(
                "satisfied: "
                + ("t <= 1 subrange (alpha >= 0)" if t <= 1 else "1 < t < 1/q subrange (-1 < alpha < 0)")
            )
        return verdict()

    if fam == "al-salam-carlitz-i":
        alpha = as_fraction(spec.param("alpha"))
        notes.append(_note(alpha < 0, "alpha < 0"))
        return verdict()

    if fam == "al-salam-carlitz-ii":
        alpha = as_fraction(spec.param("alpha"))
        q = spec.q
        notes.append(_note(0 < alpha * q < 1, "0 < alpha*q < 1"))
        return verdict()

    if fam == "askey-wilson":
        q = spec.q
        vals = [spec.param(k) for k in "abcd"]
        paired = _conjugate_paired(vals)
        if not paired:
            return RegionVerdict(
                "Invalid", ("violated: non-real parameters must pair into conjugates",)
            )
        in_disk = all(
            (v.norm2() if isinstance(v, GaussianRational) else v * v) < 1 for v in vals
        )
        notes.append(_note(in_disk, "max(|a|,|b|,|c|,|d|) < 1"))
        return verdict()

    if fam == "q-racah":
        q = spec.q
        vals = _real_params_or_invalid(spec, ("alpha", "beta", "gamma", "delta"))
        if vals is None:
            return RegionVerdict("Invalid", ("violated: parameters must be real",))
        qN = _qpow(q, -spec.N)
        trunc = (
            vals["alpha"] * q == qN
            or vals["beta"] * vals["delta"] * q == qN
            or vals["gamma"] * q == qN
        )
        notes.append(
            _note(trunc, "alpha*q = q^-N or beta*delta*q = q^-N or gamma*q = q^-N")
        )
        if trunc:
            notes.append(_weight_positivity_note(spec))
        return verdict()

    if fam == "racah":
        vals = _real_params_or_invalid(spec, ("alpha", "beta", "gamma", "delta"))
        if vals is None:
            return RegionVerdict("Invalid", ("violated: parameters must be real",))
        N = Fraction(spec.N)
        trunc = (
            vals["alpha"] + 1 == -N
            or vals["beta"] + vals["delta"] + 1 == -N
            or vals["gamma"] + 1 == -N
        )
        notes.append(
            _note(trunc, "alpha+1 = -N or beta+delta+1 = -N or gamma+1 = -N")
        )
        if trunc:
            notes.append(_weight_positivity_note(spec))
        return verdict()

    if fam == "wilson":
        vals = [spec.param(k) for k in "abcd"]
        if not _conjugate_paired(vals):
            return RegionVerdict(
                "Invalid", ("violated: non-real parameters must pair into conjugates",)
            )
        ok = all(scalar_re(v) > 0 for v in vals)
        notes.append(_note(ok, "Re(a), Re(b), Re(c), Re(d) > 0"))
        return verdict()

    if fam == "continuous-hahn":
        a, b, c, d = (spec.param(k) for k in "abcd")
        paired = conj(a) == c and conj(b) == d
        if not paired:
            return RegionVerdict(
                "Invalid", ("violated: need c = conj(a) and d = conj(b)",)
            )
        ok = all(scalar_re(v) > 0 for v in (a, b, c, d))
        notes.append(_note(ok, "Re(a), Re(b), Re(c), Re(d) > 0"))
        return verdict()

    if fam == "q-krawtchouk":
        p = as_fraction(spec.param("p"))
        notes.append(_note(p > 0, "p > 0"))
        if p > 0:
            notes.append(_weight_positivity_note(spec))
        return verdict()

    if fam == "q-meixner":
        q = spec.q
        beta = as_fraction(spec.param("beta"))
        gamma = as_fraction(spec.param("gamma"))
        notes.append(_note(0 <= beta * q < 1, "0 <= beta*q < 1"))
        notes.append(_note(gamma > 0, "gamma > 0"))
        return verdict()

    if fam == "bessel":
        return RegionVerdict(
            "QuasiCandidate",
            ("violated: no positive-definite orthogonality region exists",),
        )

    raise FamilyError(f"no region rules for {fam}")


def _weight_positivity_note(spec: FamilySpec) -> str:
    try:
        ws = discrete_weights(spec)
    except WeightUndefinedError as exc:
        return f"violated: weight positivity ({exc})"
    ok = all(w > 0 for w in ws)
    return _note(ok, "w(x) > 0 for all x = 0..N")


# ---------------------------------------------------------------------------
# Supports
# ---------------------------------------------------------------------------


def support_interval(spec: FamilySpec):
    """Exact orthogonality support (lo, hi); None encodes an infinite end."""
    fam = spec.family
    if fam in ("big-q-jacobi", "big-q-laguerre"):
        q = spec.q
        return (as_fraction(spec.param("gamma")) * q, as_fraction(spec.param("alpha")) * q)
    if fam in ("q-hahn", "affine-q-krawtchouk", "quantum-q-krawtchouk", "q-krawtchouk"):
        return (Fraction(1), _qpow(spec.q, -spec.N))
    if fam in ("little-q-jacobi", "little-q-laguerre"):
        return (Fraction(0), Fraction(1))
    if fam == "q-laguerre":
        return (Fraction(0), None)
    if fam == "al-salam-carlitz-i":
        return (as_fraction(spec.param("alpha")), Fraction(1))
    if fam == "askey-wilson":
        return (Fraction(-1), Fraction(1))
    if fam == "q-racah":
        return (_mu_of(spec, 0), _mu_of(spec, spec.N))
    if fam == "wilson":
        return (Fraction(0), None)
    if fam == "racah":
        return (Fraction(0), _lambda_of(spec, spec.N))
    if fam == "continuous-hahn":
        return (None, None)
    if fam == "q-meixner":
        return (Fraction(1), None)
    raise FamilyError(f"no catalogued support interval for {fam}")


def _mu_of(spec: FamilySpec, x: int) -> Fraction:
    q = spec.q
    gd = as_fraction(spec.param("gamma")) * as_fraction(spec.param("delta"))
    return _qpow(q, -x) + gd * _qpow(q, x + 1)


def _lambda_of(spec: FamilySpec, x: int) -> Fraction:
    gd1 = as_fraction(spec.param("gamma")) + as_fraction(spec.param("delta")) + 1
    return x * (x + gd1)


def lattice_point(spec: FamilySpec, x: int) -> Fraction:
    """Value of the lattice variable at the integer support point x."""
    lat = spec.lattice
    if lat == "qminusx":
        return _qpow(spec.q, -x)
    if lat == "mu-lattice":
        return _mu_of(spec, x)
    if lat == "lambda-lattice":
        return _lambda_of(spec, x)
    raise FamilyError(f"{spec.family} has no integer lattice")


# ---------------------------------------------------------------------------
# Discrete weights and exact moments
# ---------------------------------------------------------------------------


def _weight_ratio(spec: FamilySpec, x: int) -> Fraction:
    """w(x+1)/w(x), exact; raises WeightUndefinedError on a zero denominator."""
    fam = spec.family
    q = spec.q if FAMILY_INFO[fam][2] else None

    def div(num: Fraction, den: Fraction) -> Fraction:
        if den == 0:
            raise WeightUndefinedError(
                f"{fam} weight ratio denominator vanished at x={x + 1}"
            )
        return num / den

    if fam == "q-hahn":
        alpha = as_fraction(spec.param("alpha"))
        beta = as_fraction(spec.param("beta"))
        if beta == 0:
            raise WeightUndefinedError("q-hahn weight needs beta != 0")
        N = spec.N
        num = (1 - alpha * q ** (x + 1)) * (1 - _qpow(q, x - N))
        den = (1 - q ** (x + 1)) * (1 - _qpow(q, x - N) / beta) * (alpha * beta * q)
        return div(num, den)
    if fam == "affine-q-krawtchouk":
        alpha = as_fraction(spec.param("alpha"))
        N = spec.N
        num = -(1 - alpha * q ** (x + 1)) * (1 - _qpow(q, x - N)) * _qpow(q, N - 1 - x)
        den = alpha * (1 - q ** (x + 1))
        return div(num, den)
    if fam == "quantum-q-krawtchouk":
        p = as_fraction(spec.param("p"))
        N = spec.N
        num = -(q**x) * (1 - _qpow(q, x - N))
        den = (1 - q ** (x + 1)) * (1 - _qpow(q, x - N) / p) * p
        return div(num, den)
    if fam == "q-krawtchouk":
        # (-p) enters with exponent -x: the +x variant breaks orthogonality
        # (checked exactly), the -x variant satisfies it.
        p = as_fraction(spec.param("p"))
        N = spec.N
        num = 1 - _qpow(q, x - N)
        den = (1 - q ** (x + 1)) * (-p)
        return div(num, den)
    if fam == "q-racah":
        alpha = as_fraction(spec.param("alpha"))
        beta = as_fraction(spec.param("beta"))
        gamma = as_fraction(spec.param("gamma"))
        delta = as_fraction(spec.param("delta"))
        if alpha == 0 or beta == 0:
            raise WeightUndefinedError("q-racah weight needs alpha, beta != 0")
        gd = gamma * delta
        q1 = q ** (x + 1)
        num = (
            (1 - alpha * q1)
            * (1 - beta * delta * q1)
            * (1 - gamma * q1)
            * (1 - gd * q1)
            * (1 - gd * q ** (2 * x + 3))
        )
        den = (
            (1 - q1)
            * (1 - gd * q1 / alpha)
            * (1 - gamma * q1 / beta)
            * (1 - delta * q1)
            * (alpha * beta * q)
            * (1 - gd * q ** (2 * x + 1))
        )
        return div(num, den)
    if fam == "racah":
        alpha = as_fraction(spec.param("alpha"))
        beta = as_fraction(spec.param("beta"))
        gamma = as_fraction(spec.param("gamma"))
        delta = as_fraction(spec.param("delta"))
        gd = gamma + delta
        num = (
            (alpha + 1 + x)
            * (beta + delta + 1 + x)
            * (gamma + 1 + x)
            * (gd + 1 + x)
            * (Fraction(gd + 3, 2) + x)
        )
        den = (
            (gd - alpha + 1 + x)
            * (gamma - beta + 1 + x)
            * (delta + 1 + x)
            * (Fraction(gd + 1, 2) + x)
            * (x + 1)
        )
        return div(num, den)
    raise FamilyError(f"{fam} has no discrete weight recurrence")


def discrete_weights(spec: FamilySpec) -> list:
    """Unnormalized exact weights w(0..N), with w(0) = 1."""
    if not spec.is_finite():
        raise FamilyError(f"{spec.family} has no finite discrete support")
    ws = [Fraction(1)]
    for x in range(spec.N):
        ws.append(ws[-1] * _weight_ratio(spec, x))
    return ws


def discrete_moment(spec: FamilySpec, p: Poly, m: int) -> Fraction:
    """Exact sum over x = 0..N of lattice(x)^m * p(lattice(x)) * w(x)."""
    if m < 0:
        raise FamilyError("moment order must be nonnegative")
    if p.lattice != spec.lattice:
        raise FamilyError(
            f"polynomial lattice {p.lattice} does not match {spec.family}"
        )
    ws = discrete_weights(spec)
    total = Fraction(0)
    for x, w in enumerate(ws):
        point = lattice_point(spec, x)
        total += point**m * as_fraction(p.evaluate(point)) * w
    return total


# ---------------------------------------------------------------------------
# Gauss-quadrature moments with certified enclosure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussEstimate:
    """Enclosure midpoint and half-width: true moment lies in value +- bound."""

    value: Fraction
    bound: Fraction
    nodes: int


def gauss_moment(
    spec: FamilySpec,
    p: Poly,
    m: int,
    precision_width: Fraction,
    nodes: Optional[int] = None,
) -> GaussEstimate:
    """Gauss moment of x^m p(x) against the family's normalized measure.

    Nodes are the refined zeros of the family's degree-`nodes` member;
    Christoffel weights come from the extracted three-term recurrence.  The
    whole sum is evaluated in rational interval arithmetic, so the returned
    bound is rigorous.  The rule is exact for m + deg(p) <= 2*nodes - 1, so
    for polynomial inputs the only error is the node enclosure width.
    """
    verdict = region_check(spec)
    if not verdict.is_orthogonal():
        raise FamilyError(f"gauss_moment needs an orthogonal base: {verdict.notes}")
    if p.lattice != spec.lattice:
        raise FamilyError("polynomial lattice does not match the family")
    degree_needed = m + max(p.degree, 0)
    min_nodes = (degree_needed + 2) // 2
    n_nodes = nodes if nodes is not None else max(min_nodes, 1)
    if degree_needed > 2 * n_nodes - 1:
        raise FamilyError(
            f"{n_nodes} nodes integrate degree <= {2 * n_nodes - 1} < {degree_needed}"
        )
    basis = [monic_poly(spec, j) for j in range(n_nodes + 1)]
    _, cs = ttrr_extract(basis)
    h = [Fraction(1)]
    for j in range(1, n_nodes):
        cj = as_fraction(cs[j])
        if cj <= 0:
            raise FamilyError(
                f"non-positive recurrence coefficient c_{j} = {cj}: "
                "measure is not positive definite"
            )
        h.append(h[-1] * cj)
    width = Fraction(precision_width)
    pn = basis[n_nodes]
    boxes = [refine_root(pn, box, width) for box in sturm_isolate(pn)]
    if len(boxes) != n_nodes:
        raise FamilyError(
            f"expected {n_nodes} real nodes, isolated {len(boxes)}"
        )
    total = RatInterval.point(0)
    for box in boxes:
        xi = RatInterval(box.lo, box.hi)
        inv_lambda = RatInterval.point(0)
        for j in range(n_nodes):
            pj = eval_poly([as_fraction(c) for c in basis[j].coeffs], xi)
            inv_lambda = inv_lambda + pj * pj * RatInterval.point(1 / h[j])
        lam = inv_lambda.inverse()
        if not lam.definitely_positive():
            raise FamilyError("Christoffel weight enclosure is not positive")
        fx = eval_poly([as_fraction(c) for c in p.coeffs], xi) * xi**m
        total = total + lam * fx
    mid = total.mid
    return GaussEstimate(value=mid, bound=total.hi - mid, nodes=n_nodes)


# ---------------------------------------------------------------------------
# Plain-text spec files ("key=value" per line)
# ---------------------------------------------------------------------------


def parse_family_config(text: str) -> FamilySpec:
    family = None
    params = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FamilyError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "family":
            family = value
        else:
            params[key] = as_scalar(value)
    if family is None:
        raise FamilyError("config is missing the family=<id> line")
    return FamilySpec(family, params)


def load_family_config(path) -> FamilySpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family_config(fh.read())
