"""Parameter-shift relation catalog: verification, discovery, composition.

Each CatalogEntry encodes one closed-form relation

    shifted_family(n) = sigma_0 base(n) + sigma_1 base(n-1) + ... + sigma_J base(n-J)

with sigma_0 = 1 (everything is monic).  `verify_entry` checks the identity
as an exact polynomial equation; `discover_coeffs` re-derives the sigma_j
independently by expanding the shifted polynomial in the base family's
monic basis and demanding that every coefficient below degree n-J vanish,
including the certified *failure* of that demand for the families whose
shift relations carry variable-dependent multipliers (q-Meixner,
Al-Salam-Carlitz II, Bessel); `compose_entries` iterates a relation to
higher shift order, re-evaluating coefficients at every intermediate
parameter stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .exactnum import GaussianRational, Scalar, as_fraction, as_scalar, scalar_re
from .families import (
    DegenerateParameterError,
    FamilySpec,
    monic_poly,
)
from .polyalg import Poly, expand_in_basis


class RecurrenceError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Shift descriptors
# ---------------------------------------------------------------------------

DIVQ = "divq"  # parameter -> parameter / q^k
SUB = "sub"  # parameter -> parameter - k
ADD = "add"  # parameter -> parameter + k (only the Bessel control uses this)


@dataclass(frozen=True)
class ShiftSpec:
    """Per-parameter shift actions; at least one non-identity action."""

    actions: tuple  # of (param_name, kind, k)

    def __init__(self, actions):
        acts = []
        for name, kind, k in actions:
            if kind not in (DIVQ, SUB, ADD):
                raise RecurrenceError(f"unknown shift kind {kind!r}")
            if not isinstance(k, int) or k < 1:
                raise RecurrenceError("shift step k must be an integer >= 1")
            acts.append((name, kind, k))
        if not acts:
            raise RecurrenceError("a shift must move at least one parameter")
        object.__setattr__(self, "actions", tuple(acts))

    def apply(self, spec: FamilySpec) -> FamilySpec:
        updates = {}
        for name, kind, k in self.actions:
            value = spec.param(name)
            if kind == DIVQ:
                updates[name] = value / spec.q**k
            elif kind == SUB:
                updates[name] = value - k
            else:
                updates[name] = value + k
        return spec.replace(**updates)

    def total(self) -> int:
        return sum(k for _, _, k in self.actions)

    def describe(self) -> str:
        parts = []
        for name, kind, k in self.actions:
            if kind == DIVQ:
                parts.append(f"{name}/q" + (f"^{k}" if k > 1 else ""))
            elif kind == SUB:
                parts.append(f"{name}-{k}")
            else:
                parts.append(f"{name}+{k}")
        return ",".join(parts)

    @classmethod
    def parse(cls, text: str) -> "ShiftSpec":
        """Parse "alpha/q^2", "a-1", "alpha+1", "alpha/q,beta/q" etc."""
        actions = []
        for part in text.split(","):
            part = part.strip()
            if "/q" in part:
                name, _, rest = part.partition("/q")
                k = int(rest[1:]) if rest.startswith("^") else 1
                actions.append((name.strip(), DIVQ, k))
            elif "+" in part[1:]:
                idx = part.rindex("+")
                actions.append((part[:idx].strip(), ADD, int(part[idx + 1 :])))
            elif "-" in part[1:]:
                idx = part.rindex("-")
                actions.append((part[:idx].strip(), SUB, int(part[idx + 1 :])))
            else:
                raise RecurrenceError(f"cannot parse shift component {part!r}")
        return cls(actions)


def _shift(*actions) -> ShiftSpec:
    return ShiftSpec(actions)


# ---------------------------------------------------------------------------
# Catalog entries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """One closed-form shift relation.

    coeff_fn(n, params) returns (sigma_0, ..., sigma_J); params is the base
    family's parameter dict.  Denominator factors are checked exactly and a
    vanishing one raises DegenerateParameterError.  The metadata fields drive
    the theorem suite: expected sign of sigma_1 at the reference instance,
    catalogued extreme-zero claims ("exit", "inside", "varies", None) and,
    for depth-2 entries, whether the partial-interlacing criterion applies.
    """

    id: str
    family: str
    shift: ShiftSpec
    depth: int
    coeff_fn: Callable
    sigma1_sign: Optional[int] = None
    left_claim: Optional[str] = None
    right_claim: Optional[str] = None
    b_sign: Optional[int] = None
    partial_interlace: bool = False
    premise: Optional[Callable] = None  # instance predicate for location claims

    def premise_holds(self, spec: FamilySpec) -> bool:
        """True when the instance satisfies the catalogued location-claim
        premise (e.g. the shifted parameter actually leaves the region)."""
        return self.premise is None or bool(self.premise(spec))

    def coeffs(self, n: int, spec: FamilySpec) -> tuple:
        # the identity itself already makes sense at n = J (down to degree 0)
        if n < max(self.depth, 1):
            raise RecurrenceError(f"{self.id} needs n >= {max(self.depth, 1)}")
        if spec.family != self.family:
            raise RecurrenceError(f"{self.id} applies to {self.family}, not {spec.family}")
        params = dict(spec.params)
        out = self.coeff_fn(n, params)
        assert out[0] == 1, "catalog relations are monic-normalized"
        return tuple(as_scalar(c) for c in out)


def _nz(value: Scalar, what: str) -> Scalar:
    if not value:
        raise DegenerateParameterError(f"vanishing denominator factor: {what}")
    return value


def catalog_coeffs(entry: CatalogEntry, n: int, spec: FamilySpec) -> tuple:
    """sigma_0..sigma_J of `entry` at (n, params), exactly."""
    return entry.coeffs(n, spec)


# -- coefficient closed forms (one small function per relation) --------------


def _c_eq1bqj(n, p):
    q, a, b, g = p["q"], p["alpha"], p["beta"], p["gamma"]
    qn = q**n
    den = _nz(a * b * qn * qn - 1, "alpha*beta*q^2n - 1") * _nz(
        a * b * qn * qn - q, "alpha*beta*q^2n - q"
    )
    return (1, a * q * (qn - 1) * (b * qn - 1) * (g * qn - 1) / den)


def _c_eq3bqj(n, p):
    q, a, b, g = p["q"], p["alpha"], p["beta"], p["gamma"]
    qn = q**n
    den = _nz(a * b * qn * qn - 1, "alpha*beta*q^2n - 1") * _nz(
        a * b * qn * qn - q, "alpha*beta*q^2n - q"
    )
    return (1, -a * b * q ** (n + 1) * (qn - 1) * (a * qn - 1) * (g * qn - 1) / den)


def _c_eq5bqj(n, p):
    q, a, b, g = p["q"], p["alpha"], p["beta"], p["gamma"]
    qn = q**n
    den = _nz(a * b * qn * qn - 1, "alpha*beta*q^2n - 1") * _nz(
        a * b * qn * qn / q - 1, "alpha*beta*q^(2n-1) - 1"
    )
    return (1, -(qn - 1) * (a * qn - 1) * (g - a * b * qn) / den)


def _c_eq6bqj(n, p):
    q, a, b, g = p["q"], p["alpha"], p["beta"], p["gamma"]
    qn = q**n
    ab2n = a * b * qn * qn
    s1 = (
        -a
        * q
        * (ab2n - b * q ** (n + 1) - b * qn + q)
        * (qn - 1)
        * (g * qn - 1)
        / (_nz(ab2n - 1, "ab q^2n - 1") * _nz(ab2n - q * q, "ab q^2n - q^2"))
    )
    s2 = (
        -(a * a)
        * b
        * (qn - 1)
        * (b * qn - q)
        * (a * qn - q)
        * (g * qn - 1)
        * (g * qn - q)
        * (qn - q)
        * q ** (n + 3)
        / (
            _nz(ab2n - q * q, "ab q^2n - q^2") ** 2
            * _nz(ab2n - q**3, "ab q^2n - q^3")
            * _nz(ab2n - q, "ab q^2n - q")
        )
    )
    return (1, s1, s2)


def _c_eq1qh(n, p):
    q, a, b, N = p["q"], p["alpha"], p["beta"], int(p["N"])
    qn = q**n
    den = (
        q**N
        * _nz(a * b * qn * qn - 1, "ab q^2n - 1")
        * _nz(a * b * qn * qn - q, "ab q^2n - q")
    )
    return (1, a * (qn - 1) * (b * qn - 1) * (qn - q ** (N + 1)) / den)


def _c_eq2qh(n, p):
    q, a, b, N = p["q"], p["alpha"], p["beta"], int(p["N"])
    qn = q**n
    den = (
        _nz(a * b * qn * qn - 1, "ab q^2n - 1")
        * _nz(a * b * qn * qn - q, "ab q^2n - q")
        * q ** (N - n)
    )
    return (1, -a * b * (qn - q ** (N + 1)) * (a * qn - 1) * (qn - 1) / den)


def _c_eq7qh(n, p):
    q, a, b, N = p["q"], p["alpha"], p["beta"], int(p["N"])
    qn = q**n
    ab2n = a * b * qn * qn
    s1 = (
        -a
        * (ab2n - b * q ** (n + 1) - b * qn + q)
        * (qn - 1)
        * (qn - q ** (N + 1))
        / (_nz(ab2n - q * q, "ab q^2n - q^2") * _nz(ab2n - 1, "ab q^2n - 1") * q**N)
    )
    s2 = (
        -(a * a)
        * b
        * q ** (n + 1)
        * (qn - 1)
        * (b * qn - q)
        * (qn - q ** (N + 1))
        * (a * qn - q)
        * (qn - q)
        * (qn - q ** (N + 2))
        / (
            _nz(ab2n - q * q, "ab q^2n - q^2") ** 2
            * _nz(ab2n - q, "ab q^2n - q")
            * _nz(ab2n - q**3, "ab q^2n - q^3")
            * q ** (2 * N)
        )
    )
    return (1, s1, s2)


def _c_qh_alpha2(n, p):
    q, a, b, N = p["q"], p["alpha"], p["beta"], int(p["N"])
    qn = q**n
    ab2n = a * b * qn * qn
    s1 = (
        a
        * (q + 1)
        * (qn - 1)
        * (b * qn - 1)
        * (qn - q ** (N + 1))
        / (_nz(ab2n - q * q, "ab q^2n - q^2") * _nz(ab2n - 1, "ab q^2n - 1") * q**N)
    )
    s2 = (
        (a * q) ** 2
        * (qn - 1)
        * (b * qn - q)
        * (qn - q ** (N + 1))
        * (qn - q)
        * (b * qn - 1)
        * (qn - q ** (N + 2))
        / (
            _nz(ab2n - q * q, "ab q^2n - q^2") ** 2
            * _nz(ab2n - q, "ab q^2n - q")
            * _nz(ab2n - q**3, "ab q^2n - q^3")
            * q ** (2 * N)
        )
    )
    return (1, s1, s2)


def _c_qqk(n, p):
    q, pp, N = p["q"], p["p"], int(p["N"])
    qn = q**n
    return (1, (q ** (N + 1) - qn) * (qn - 1) / _nz(pp * q ** (2 * n + N), "p q^(2n+N)"))


def _c_eq1lqj(n, p):
    q, a, b = p["q"], p["alpha"], p["beta"]
    qn = q**n
    den = _nz(a * b * qn * qn - 1, "ab q^2n - 1") * _nz(a * b * qn * qn - q, "ab q^2n - q")
    return (1, a * qn * (qn - 1) * (b * qn - 1) / den)


def _c_eq2lqj(n, p):
    q, a, b = p["q"], p["alpha"], p["beta"]
    qn = q**n
    den = _nz(a * b * qn * qn - 1, "ab q^2n - 1") * _nz(a * b * qn * qn - q, "ab q^2n - q")
    return (1, -a * b * qn * qn * (qn - 1) * (a * qn - 1) / den)


def _c_eq8lqj(n, p):
    q, a, b = p["q"], p["alpha"], p["beta"]
    qn = q**n
    ab2n = a * b * qn * qn
    s1 = (
        -a
        * qn
        * (ab2n - q ** (n + 1) * b - b * qn + q)
        * (qn - 1)
        / (_nz(ab2n - q * q, "ab q^2n - q^2") * _nz(ab2n - 1, "ab q^2n - 1"))
    )
    s2 = (
        -(a * a)
        * b
        * q ** (3 * n + 1)
        * (qn - 1)
        * (b * qn - q)
        * (a * qn - q)
        * (qn - q)
        / (
            _nz(ab2n - q * q, "ab q^2n - q^2") ** 2
            * _nz(ab2n - q, "ab q^2n - q")
            * _nz(ab2n - q**3, "ab q^2n - q^3")
        )
    )
    return (1, s1, s2)


def _c_lqj_alpha2(n, p):
    q, a, b = p["q"], p["alpha"], p["beta"]
    qn = q**n
    ab2n = a * b * qn * qn
    s1 = (
        a
        * qn
        * (q + 1)
        * (qn - 1)
        * (b * qn - 1)
        / (_nz(ab2n - q * q, "ab q^2n - q^2") * _nz(ab2n - 1, "ab q^2n - 1"))
    )
    s2 = (
        a
        * a
        * q ** (2 * n + 2)
        * (qn - 1)
        * (b * qn - q)
        * (qn - q)
        * (b * qn - 1)
        / (
            _nz(ab2n - q * q, "ab q^2n - q^2") ** 2
            * _nz(ab2n - q, "ab q^2n - q")
            * _nz(ab2n - q**3, "ab q^2n - q^3")
        )
    )
    return (1, s1, s2)


def _c_eq1ql(n, p):
    q, t = p["q"], p["t"]
    qn = q**n
    return (1, -(qn - 1) * q / _nz(qn * qn * t, "q^2n t"))


def _c_eq1asc1(n, p):
    q, a = p["q"], p["alpha"]
    return (1, a / q * (q**n - 1))


def _c_eq1asc2(n, p):
    q, a = p["q"], p["alpha"]
    qn = q**n
    return (
        1,
        a * (qn - 1) * (q + 1) / (q * q),
        a * a * (qn - 1) * (qn - q) / (q**4),
    )


def _c_eqaw1(n, p):
    q, a, b, c, d = p["q"], p["a"], p["b"], p["c"], p["d"]
    qn = q**n
    abcd2n = a * b * c * d * qn * qn
    den = 2 * _nz(abcd2n - q**3, "abcd q^2n - q^3") * _nz(abcd2n - q * q, "abcd q^2n - q^2")
    return (
        1,
        -a * q * (qn - 1) * (c * d * qn - q) * (b * d * qn - q) * (b * c * qn - q) / den,
    )


def _c_eqqr1(n, p):
    q, a, b, g, d = p["q"], p["alpha"], p["beta"], p["gamma"], p["delta"]
    qn = q**n
    den = _nz(1 - a * b * qn * qn, "1 - ab q^2n") * _nz(q - a * b * qn * qn, "q - ab q^2n")
    return (
        1,
        -a * q * (1 - qn) * (1 - b * qn) * (1 - g * qn) * (1 - b * d * qn) / den,
    )


def _c_eqqr2(n, p):
    q, a, b, g, d = p["q"], p["alpha"], p["beta"], p["gamma"], p["delta"]
    qn = q**n
    den = _nz(1 - a * b * qn * qn, "1 - ab q^2n") * _nz(q - a * b * qn * qn, "q - ab q^2n")
    return (
        1,
        b * q * (1 - qn) * (1 - a * qn) * (1 - g * qn) * (a * qn - d) / den,
    )


def _wilson_sigma(n, p, triple):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = a + b + c + d
    den = _nz(2 * n + s - 2, "2n+a+b+c+d-2") * _nz(2 * n + s - 3, "2n+a+b+c+d-3")
    u, v, w = triple
    return n * (u + n - 1) * (v + n - 1) * (w + n - 1) / den


def _c_eqw1(n, p):
    return (1, _wilson_sigma(n, p, (p["c"] + p["d"], p["b"] + p["d"], p["b"] + p["c"])))


def _c_eqw2(n, p):
    return (1, _wilson_sigma(n, p, (p["c"] + p["d"], p["a"] + p["d"], p["a"] + p["c"])))


def _c_eqw3(n, p):
    return (1, _wilson_sigma(n, p, (p["a"] + p["d"], p["b"] + p["d"], p["a"] + p["b"])))


def _c_eqw4(n, p):
    return (1, _wilson_sigma(n, p, (p["a"] + p["c"], p["b"] + p["c"], p["a"] + p["b"])))


def _c_eqr1(n, p):
    a, b, g, d = p["alpha"], p["beta"], p["gamma"], p["delta"]
    den = _nz(2 * n + a + b, "2n+alpha+beta") * _nz(2 * n + a + b - 1, "2n+alpha+beta-1")
    return (1, -(b + n) * (b + d + n) * (g + n) * n / den)


def _c_eqr2(n, p):
    a, b, g, d = p["alpha"], p["beta"], p["gamma"], p["delta"]
    den = _nz(2 * n + a + b, "2n+alpha+beta") * _nz(2 * n + a + b - 1, "2n+alpha+beta-1")
    return (1, -(a + n) * (a - d + n) * (g + n) * n / den)


_I = GaussianRational(0, 1)


def _ch_den(n, p):
    s = p["a"] + p["b"] + p["c"] + p["d"]
    return _nz(2 * n + s - 3, "2n+a+b+c+d-3") * _nz(2 * n + s - 2, "2n+a+b+c+d-2")


def _c_eqch1(n, p):
    b, c, d = p["b"], p["c"], p["d"]
    return (1, _I * (b + c + n - 1) * (b + d + n - 1) * n / _ch_den(n, p))


def _c_eqch2(n, p):
    a, c, d = p["a"], p["c"], p["d"]
    return (1, _I * (a - 1 + d + n) * (a - 1 + c + n) * n / _ch_den(n, p))


def _c_eqch3(n, p):
    a, b, d = p["a"], p["b"], p["d"]
    return (1, -_I * (b + d + n - 1) * (a - 1 + d + n) * n / _ch_den(n, p))


def _c_eqch4(n, p):
    a, b, c = p["a"], p["b"], p["c"]
    return (1, -_I * (b + c + n - 1) * (a - 1 + c + n) * n / _ch_den(n, p))


def _c_eqch5(n, p):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = a + b + c + d
    s1 = (
        -_I
        * (a + d - b - c)
        * (b + d + n - 1)
        * n
        / (_nz(2 * n + s - 4, "2n+s-4") * _nz(2 * n + s - 2, "2n+s-2"))
    )
    s2 = (
        (b + d + n - 2)
        * (a - 2 + d + n)
        * (n - 1)
        * (b + c - 2 + n)
        * (b + d + n - 1)
        * n
        / (
            _nz(2 * n + s - 5, "2n+s-5")
            * _nz(2 * n + s - 4, "2n+s-4") ** 2
            * _nz(2 * n + s - 3, "2n+s-3")
        )
    )
    return (1, s1, s2)


def _c_eqch6(n, p):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = a + b + c + d
    s1 = (
        _I
        * (a + d - b - c)
        * (a - 1 + c + n)
        * n
        / (_nz(2 * n + s - 4, "2n+s-4") * _nz(2 * n + s - 2, "2n+s-2"))
    )
    s2 = (
        n
        * (a + d + n - 2)
        * (a - 1 + c + n)
        * (b + c + n - 2)
        * (a + c + n - 2)
        * (n - 1)
        / (
            _nz(2 * n + s - 5, "2n+s-5")
            * _nz(2 * n + s - 4, "2n+s-4") ** 2
            * _nz(2 * n + s - 3, "2n+s-3")
        )
    )
    return (1, s1, s2)


def _c_eq1qk(n, p):
    q, pp, N = p["q"], p["p"], int(p["N"])
    qn = q**n
    den = (
        _nz(qn * qn * pp + q, "p q^2n + q")
        * _nz(qn * qn * pp + q * q, "p q^2n + q^2")
        * q**N
    )
    return (1, -pp * (qn - 1) * (qn - q ** (N + 1)) * q ** (n + 1) / den)


def _c_bql_alpha(n, p):
    q, a, g = p["q"], p["alpha"], p["gamma"]
    qn = q**n
    return (1, -a * (qn - 1) * (g * qn - 1))


def _c_aqk_alpha(n, p):
    q, a, N = p["q"], p["alpha"], int(p["N"])
    qn = q**n
    return (1, -a * (qn - 1) * (qn - q ** (N + 1)) / q ** (N + 1))


def _c_lql_alpha(n, p):
    q, a = p["q"], p["alpha"]
    qn = q**n
    return (1, -a * q ** (n - 1) * (qn - 1))


# -- location-claim premises --------------------------------------------------
#
# The extreme-zero claims hold under the theorems' instance conditions
# (typically: the shifted parameter actually leaves the orthogonality
# region).  The suite skips location claims when a premise fails; identity,
# discovery and order checks are parameter-generic and stay on.


def _gt1(*names):
    def check(spec):
        return all(as_fraction(spec.param(n)) > 1 for n in names)

    return check


def _ql_negative_alpha_range(spec):
    t = as_fraction(spec.param("t"))
    return 1 < t < 1 / spec.q


def _aw_anchor_exits(spec):
    a = spec.param("a")
    mag2 = a.norm2() if isinstance(a, GaussianRational) else a * a
    return mag2 > spec.q * spec.q


def _qr_alpha_truncated(spec):
    q = spec.q
    ok = as_fraction(spec.param("alpha")) * q == q ** (-spec.N)
    for name in ("beta", "gamma"):
        ok = ok and as_fraction(spec.param(name)) * q < 1
    return ok and as_fraction(spec.param("beta")) * as_fraction(
        spec.param("delta")
    ) * q < 1


def _qr_beta_truncated(spec):
    q = spec.q
    alpha = as_fraction(spec.param("alpha"))
    delta = as_fraction(spec.param("delta"))
    ok = as_fraction(spec.param("beta")) * delta * q == q ** (-spec.N)
    return (
        ok
        and alpha * q < 1
        and as_fraction(spec.param("gamma")) * q < 1
        and alpha / delta * q < 1
    )


def _racah_alpha_truncated(spec):
    ok = as_fraction(spec.param("alpha")) + 1 == -spec.N
    return ok and all(
        as_fraction(spec.param(n)) > 0 for n in ("beta", "gamma", "delta")
    )


def _racah_beta_truncated(spec):
    alpha = as_fraction(spec.param("alpha"))
    delta = as_fraction(spec.param("delta"))
    ok = as_fraction(spec.param("beta")) + delta + 1 == -spec.N
    return ok and alpha > 0 and as_fraction(spec.param("gamma")) > 0 and alpha > delta


def _re_in_unit(name):
    def check(spec):
        return 0 < scalar_re(spec.param(name)) < 1

    return check


CATALOG = {
    e.id: e
    for e in [
        CatalogEntry(
            "eq1bqj", "big-q-jacobi", _shift(("alpha", DIVQ, 1)), 1, _c_eq1bqj,
            sigma1_sign=-1, left_claim="inside", right_claim="varies",
            premise=_gt1("alpha"),
        ),
        CatalogEntry(
            "eq3bqj", "big-q-jacobi", _shift(("beta", DIVQ, 1)), 1, _c_eq3bqj,
            sigma1_sign=+1, left_claim="exit", right_claim="inside",
            premise=_gt1("beta"),
        ),
        CatalogEntry(
            "eq5bqj", "big-q-jacobi",
            _shift(("beta", DIVQ, 1), ("gamma", DIVQ, 1)), 1, _c_eq5bqj,
            sigma1_sign=+1, right_claim="inside", premise=_gt1("beta"),
        ),
        CatalogEntry(
            "eq6bqj", "big-q-jacobi",
            _shift(("alpha", DIVQ, 1), ("beta", DIVQ, 1)), 2, _c_eq6bqj,
            b_sign=-1, left_claim="exit", right_claim="varies",
            premise=_gt1("alpha", "beta"),
        ),
        CatalogEntry(
            "eq1qh", "q-hahn", _shift(("alpha", DIVQ, 1)), 1, _c_eq1qh,
            sigma1_sign=+1, left_claim="exit", right_claim="inside",
            premise=_gt1("alpha"),
        ),
        CatalogEntry(
            "eq2qh", "q-hahn", _shift(("beta", DIVQ, 1)), 1, _c_eq2qh,
            sigma1_sign=-1, left_claim="inside", right_claim="exit",
            premise=_gt1("beta"),
        ),
        CatalogEntry(
            "eq7qh", "q-hahn", _shift(("alpha", DIVQ, 1), ("beta", DIVQ, 1)),
            2, _c_eq7qh, b_sign=-1, left_claim="exit", right_claim="exit",
            premise=_gt1("alpha", "beta"),
        ),
        CatalogEntry(
            "eq9qh", "q-hahn", _shift(("alpha", DIVQ, 2)), 2, _c_qh_alpha2,
            b_sign=+1, premise=_gt1("alpha"),
        ),
        CatalogEntry(
            "eq1qqk", "quantum-q-krawtchouk", _shift(("p", DIVQ, 1)), 1, _c_qqk,
            sigma1_sign=+1,
        ),
        CatalogEntry(
            "eq1lqj", "little-q-jacobi", _shift(("alpha", DIVQ, 1)), 1, _c_eq1lqj,
            sigma1_sign=+1, left_claim="exit", right_claim="inside",
            premise=_gt1("alpha"),
        ),
        CatalogEntry(
            "eq2lqj", "little-q-jacobi", _shift(("beta", DIVQ, 1)), 1, _c_eq2lqj,
            sigma1_sign=-1, left_claim="inside", right_claim="exit",
            premise=_gt1("beta"),
        ),
        CatalogEntry(
            "eq8lqj", "little-q-jacobi",
            _shift(("alpha", DIVQ, 1), ("beta", DIVQ, 1)), 2, _c_eq8lqj,
            b_sign=-1, left_claim="exit", right_claim="exit",
            premise=_gt1("alpha", "beta"),
        ),
        CatalogEntry(
            "eq9lqj", "little-q-jacobi", _shift(("alpha", DIVQ, 2)), 2,
            _c_lqj_alpha2, b_sign=+1, partial_interlace=True,
            premise=_gt1("alpha"),
        ),
        CatalogEntry(
            "eq1ql", "q-laguerre", _shift(("t", DIVQ, 1)), 1, _c_eq1ql,
            sigma1_sign=+1, left_claim="exit",
            premise=_ql_negative_alpha_range,
        ),
        CatalogEntry(
            "eq1asc1", "al-salam-carlitz-i", _shift(("alpha", DIVQ, 1)), 1,
            _c_eq1asc1, sigma1_sign=+1, left_claim="exit",
        ),
        CatalogEntry(
            "eq1asc2", "al-salam-carlitz-i", _shift(("alpha", DIVQ, 2)), 2,
            _c_eq1asc2, b_sign=+1, partial_interlace=True,
        ),
        CatalogEntry(
            "eqaw1", "askey-wilson", _shift(("a", DIVQ, 1)), 1, _c_eqaw1,
            premise=_aw_anchor_exits,
        ),
        CatalogEntry(
            "eqqR1", "q-racah", _shift(("alpha", DIVQ, 1)), 1, _c_eqqr1,
            sigma1_sign=-1, premise=_qr_alpha_truncated,
        ),
        CatalogEntry(
            "eqqR2", "q-racah", _shift(("beta", DIVQ, 1)), 1, _c_eqqr2,
            sigma1_sign=-1, premise=_qr_beta_truncated,
        ),
        CatalogEntry("eqw1", "wilson", _shift(("a", SUB, 1)), 1, _c_eqw1,
                     sigma1_sign=+1, premise=_re_in_unit("a")),
        CatalogEntry("eqw2", "wilson", _shift(("b", SUB, 1)), 1, _c_eqw2,
                     sigma1_sign=+1, premise=_re_in_unit("b")),
        CatalogEntry("eqw3", "wilson", _shift(("c", SUB, 1)), 1, _c_eqw3,
                     sigma1_sign=+1, premise=_re_in_unit("c")),
        CatalogEntry("eqw4", "wilson", _shift(("d", SUB, 1)), 1, _c_eqw4,
                     sigma1_sign=+1, premise=_re_in_unit("d")),
        CatalogEntry(
            "eqr1", "racah", _shift(("alpha", SUB, 1)), 1, _c_eqr1, sigma1_sign=-1,
            premise=_racah_alpha_truncated,
        ),
        CatalogEntry(
            "eqr2", "racah", _shift(("beta", SUB, 1)), 1, _c_eqr2,
            sigma1_sign=-1, premise=_racah_beta_truncated,
        ),
        CatalogEntry("eqch1", "continuous-hahn", _shift(("a", SUB, 1)), 1, _c_eqch1),
        CatalogEntry("eqch2", "continuous-hahn", _shift(("b", SUB, 1)), 1, _c_eqch2),
        CatalogEntry("eqch3", "continuous-hahn", _shift(("c", SUB, 1)), 1, _c_eqch3),
        CatalogEntry("eqch4", "continuous-hahn", _shift(("d", SUB, 1)), 1, _c_eqch4),
        CatalogEntry(
            "eqch5", "continuous-hahn", _shift(("a", SUB, 1), ("c", SUB, 1)), 2,
            _c_eqch5, partial_interlace=True, premise=_re_in_unit("a"),
        ),
        CatalogEntry(
            "eqch6", "continuous-hahn", _shift(("b", SUB, 1), ("d", SUB, 1)), 2,
            _c_eqch6, partial_interlace=True, premise=_re_in_unit("b"),
        ),
        CatalogEntry(
            "eq1qk", "q-krawtchouk", _shift(("p", DIVQ, 1)), 1, _c_eq1qk,
            sigma1_sign=+1,
        ),
        # left end stays inside; the rightmost zero certifiably exits above
        # alpha*q (exact ratio test and root isolation agree; the remark
        # claiming all-inside mislabels a_n + f_n as -a_n - f_n)
        CatalogEntry(
            "eq1bql", "big-q-laguerre", _shift(("alpha", DIVQ, 1)), 1, _c_bql_alpha,
            sigma1_sign=-1, left_claim="inside", right_claim="exit",
            premise=_gt1("alpha"),
        ),
        CatalogEntry(
            "eq1aqk", "affine-q-krawtchouk", _shift(("alpha", DIVQ, 1)), 1,
            _c_aqk_alpha, sigma1_sign=+1, left_claim="exit", right_claim="inside",
            premise=_gt1("alpha"),
        ),
        CatalogEntry(
            "eq1lql", "little-q-laguerre", _shift(("alpha", DIVQ, 1)), 1,
            _c_lql_alpha, sigma1_sign=+1, left_claim="exit", right_claim="inside",
            premise=_gt1("alpha"),
        ),
    ]
}


def entries_for(family: str):
    return [e for e in CATALOG.values() if e.family == family]


def catalog_manifest() -> list:
    """Audit index of the catalog (formulas stay in code, keyed by id)."""
    return [
        {
            "id": e.id,
            "family": e.family,
            "shift": e.shift.describe(),
            "depth": e.depth,
            "tag": e.id,
        }
        for e in sorted(CATALOG.values(), key=lambda e: e.id)
    ]


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerifyResult:
    holds: bool
    residual: Poly

    def __bool__(self):
        return self.holds


def verify_entry(
    entry: CatalogEntry,
    n: int,
    spec: FamilySpec,
    sigma_override: Optional[Sequence[Scalar]] = None,
) -> VerifyResult:
    """Exact polynomial identity check of one catalog relation.

    sigma_override substitutes the coefficient tuple (falsifiability
    controls perturb sigma_1 and must make the check fail).
    """
    sigmas = (
        tuple(as_scalar(s) for s in sigma_override)
        if sigma_override is not None
        else catalog_coeffs(entry, n, spec)
    )
    shifted = entry.shift.apply(spec)
    lhs = monic_poly(shifted, n)
    rhs = Poly.zero(lhs.lattice)
    for j, sigma in enumerate(sigmas):
        rhs = rhs + monic_poly(spec, n - j).scale(sigma)
    residual = lhs - rhs
    return VerifyResult(residual.is_zero(), residual)


# ---------------------------------------------------------------------------
# Independent discovery by exact linear solve
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiscoveryResult:
    """Coefficients(sigma_0..J) or the certified absence of a constant-
    coefficient combination at depth J (first_offending = largest basis index
    below n-J carrying a nonzero coefficient)."""

    coefficients: Optional[tuple]
    first_offending: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.coefficients is not None


def discover_coeffs(
    base: FamilySpec, shift: ShiftSpec, n: int, depth: int
) -> DiscoveryResult:
    """Re-derive sigma_0..sigma_J by expanding shifted(n) in the base basis."""
    if depth < 0 or depth >= n:
        raise RecurrenceError("need 0 <= J < n")
    shifted_spec = shift.apply(base)
    target = monic_poly(shifted_spec, n)
    basis = [monic_poly(base, d) for d in range(n + 1)]
    coeffs = expand_in_basis(target, basis)
    for i in range(n - depth - 1, -1, -1):
        if coeffs[i]:
            return DiscoveryResult(None, first_offending=i)
    sigmas = tuple(coeffs[n - j] for j in range(depth + 1))
    assert sigmas[0] == 1
    return DiscoveryResult(sigmas)


# ---------------------------------------------------------------------------
# Composition (iterating relations to higher order)
# ---------------------------------------------------------------------------


def compose_sequence(
    entries: Sequence[CatalogEntry], n: int, spec: FamilySpec
) -> tuple:
    """Coefficients of the combination obtained by chaining shift relations.

    entries[0] is applied to the base parameters first.  Coefficients are
    re-evaluated at each intermediate parameter stage, and a degeneracy at
    stage s raises with the stage named.
    """
    if not entries:
        raise RecurrenceError("empty composition")
    stages = [spec]
    for e in entries:
        if e.family != spec.family:
            raise RecurrenceError("composition entries must share the family")
        stages.append(e.shift.apply(stages[-1]))
    # coeffs[i] multiplies stage-s polynomial of degree n - i
    coeffs = {0: as_scalar(1)}
    for s in range(len(entries), 0, -1):
        entry = entries[s - 1]
        base_spec = stages[s - 1]
        new: dict = {}
        for i, c in coeffs.items():
            try:
                sigmas = catalog_coeffs(entry, n - i, base_spec)
            except DegenerateParameterError as exc:
                raise DegenerateParameterError(
                    f"stage {s} ({entry.id}): {exc}"
                ) from None
            for j, sigma in enumerate(sigmas):
                key = i + j
                new[key] = new.get(key, as_scalar(0)) + c * sigma
        coeffs = new
    top = max(coeffs)
    return tuple(coeffs.get(i, as_scalar(0)) for i in range(top + 1))


def compose_entries(entry: CatalogEntry, k: int, n: int, spec: FamilySpec) -> tuple:
    """Coefficients of the order-k*J combination from iterating one entry."""
    if k < 1:
        raise RecurrenceError("k must be >= 1")
    return compose_sequence([entry] * k, n, spec)
