"""Dense exact polynomials over the rational / Gaussian-rational scalars.

Ring operations, monic normalization, basis expansion (the engine behind the
order-k characterization), three-term-recurrence extraction, and certified
real-root machinery: Sturm-sequence counting, isolation into disjoint
rational intervals, and sign-preserving bisection refinement.

A Poly carries a lattice tag recording what the variable denotes (plain x,
q^-x, the mu or lambda lattice, x^2, cos theta); ring operations refuse to
mix tags.  Coefficients are stored constant-term first, index = degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from . import _kernels as K
from .exactnum import (
    NotRealError,
    Scalar,
    as_fraction,
    as_scalar,
    format_scalar,
    is_real,
)

LATTICES = (
    "plain-x",
    "qminusx",
    "mu-lattice",
    "lambda-lattice",
    "x-squared",
    "cos-theta",
)


class PolyError(ValueError):
    pass


class LatticeMismatchError(PolyError):
    """Ring operation attempted between polynomials on different lattices."""


class TTRRError(PolyError):
    """Input basis does not satisfy a three-term recurrence exactly."""


class Poly:
    """Immutable dense polynomial; coeffs[i] is the coefficient of x^i."""

    __slots__ = ("coeffs", "lattice")

    def __init__(self, coeffs: Sequence[Scalar], lattice: str = "plain-x"):
        if lattice not in LATTICES:
            raise PolyError(f"unknown lattice tag {lattice!r}")
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "lattice", lattice)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, lattice: str = "plain-x") -> "Poly":
        return cls((), lattice)

    @classmethod
    def one(cls, lattice: str = "plain-x") -> "Poly":
        return cls((Fraction(1),), lattice)

    @classmethod
    def const(cls, value, lattice: str = "plain-x") -> "Poly":
        return cls((as_scalar(value),), lattice)

    @classmethod
    def x(cls, lattice: str = "plain-x") -> "Poly":
        return cls((Fraction(0), Fraction(1)), lattice)

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise PolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _check_lattice(self, other: "Poly") -> None:
        if self.lattice != other.lattice:
            raise LatticeMismatchError(
                f"lattice mismatch: {self.lattice} vs {other.lattice}"
            )

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.lattice == other.lattice and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.lattice))

    def __reduce__(self):
        return (Poly, (self.coeffs, self.lattice))

    def __repr__(self):
        return f"Poly([{', '.join(format_scalar(c) for c in self.coeffs)}], {self.lattice!r})"

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check_lattice(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self.coeff(i) + other.coeff(i) for i in range(n)], self.lattice
        )

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_lattice(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self.coeff(i) - other.coeff(i) for i in range(n)], self.lattice
        )

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.lattice)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_lattice(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.lattice)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.lattice)

    def scale(self, s) -> "Poly":
        s = as_scalar(s)
        return Poly([c * s for c in self.coeffs], self.lattice)

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs, self.lattice)

    def evaluate(self, point) -> Scalar:
        point = as_scalar(point)
        acc: Scalar = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.lattice
        )

    # -- realness -------------------------------------------------------------

    def is_real(self) -> bool:
        return all(is_real(c) for c in self.coeffs)

    def certify_real(self) -> "Poly":
        """Exact imaginary-cancellation check; returns a Fraction-coefficient poly."""
        try:
            return Poly([as_fraction(c) for c in self.coeffs], self.lattice)
        except NotRealError as exc:
            raise NotRealError(f"polynomial is not real: {exc}") from None

    # -- text form --------------------------------------------------------
    # Comma-separated coefficients, constant term first.

    def to_text(self) -> str:
        return ",".join(format_scalar(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, text: str, lattice: str = "plain-x") -> "Poly":
        text = text.strip()
        if not text:
            return cls.zero(lattice)
        return cls([as_scalar(t) for t in text.split(",")], lattice)


def make_monic(p: Poly) -> Poly:
    """Divide by the leading coefficient; error on the zero polynomial."""
    if p.is_zero():
        raise PolyError("cannot normalize the zero polynomial")
    lead = p.leading()
    if lead == 1:
        return p
    return Poly([c / lead for c in p.coeffs], p.lattice)


# ---------------------------------------------------------------------------
# Basis expansion and three-term recurrence extraction
# ---------------------------------------------------------------------------


def expand_in_basis(p: Poly, basis: Sequence[Poly]) -> list:
    """Exact coefficients c_j with p = sum c_j basis[j].

    basis[j] must be monic of degree j for j = 0..n and deg(p) <= n; solved
    by back-substitution from the top degree (the system is triangular).
    """
    for j, b in enumerate(basis):
        if b.degree != j:
            raise PolyError(f"basis degree gap: entry {j} has degree {b.degree}")
        if b.leading() != 1:
            raise PolyError(f"basis entry {j} is not monic")
        if b.lattice != p.lattice:
            raise LatticeMismatchError("basis lattice differs from target")
    n = len(basis) - 1
    if p.degree > n:
        raise PolyError(f"degree {p.degree} exceeds basis top degree {n}")
    coeffs = [as_scalar(0)] * (n + 1)
    rem = p
    for d in range(n, -1, -1):
        c = rem.coeff(d)
        coeffs[d] = c
        if c:
            rem = rem - basis[d].scale(c)
    if not rem.is_zero():
        raise PolyError("triangular expansion left a nonzero residual")
    return coeffs


def ttrr_extract(basis: Sequence[Poly]):
    """Extract (b_j, c_j) with basis[j+1] = (x - b_j) basis[j] - c_j basis[j-1].

    The basis must be monic of consecutive degrees 0..m.  c_0 is unused and
    returned as None.  Raises TTRRError when the degree-(j+1) member is not
    exactly a three-term combination (non-OPS input).
    """
    if len(basis) < 2:
        raise PolyError("need at least degrees 0 and 1")
    bs: list = []
    cs: list = [None]
    for j in range(len(basis) - 1):
        rem = basis[j + 1] - basis[j].shift_up()
        # rem must equal -b_j basis[j] - c_j basis[j-1]
        e = expand_in_basis(rem, basis[: j + 1]) if rem.degree >= 0 else [
            Fraction(0)
        ] * (j + 1)
        for i, coeff in enumerate(e[: max(0, j - 1)]):
            if coeff:
                raise TTRRError(
                    f"three-term identity fails at degree {j + 1}: "
                    f"residual component on basis[{i}]"
                )
        b_j = -e[j] if len(e) > j else Fraction(0)
        bs.append(b_j)
        if j >= 1:
            cs.append(-e[j - 1])
    return bs, cs


# ---------------------------------------------------------------------------
# Integerization (shared by the Sturm machinery and the kernels)
# ---------------------------------------------------------------------------


def _int_coeffs(p: Poly) -> list:
    """Scale by a positive rational so coefficients are coprime ints."""
    fracs = [as_fraction(c) for c in p.coeffs]
    if not fracs:
        return []
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _divmod_frac(a: list, b: list):
    """divmod for Fraction coefficient lists (constant first), b nonzero."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(0, len(a) - db)
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        k = len(a) - 1 - db
        f = a[-1] / lb
        q[k] = f
        for i in range(db + 1):
            a[i + k] -= f * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def poly_gcd(p: Poly, r: Poly) -> Poly:
    """Monic gcd over the rationals (Euclid with monic remainders)."""
    a = [as_fraction(c) for c in p.coeffs]
    b = [as_fraction(c) for c in r.coeffs]
    while b:
        _, rem = _divmod_frac(a, b)
        a, b = b, rem
        if b:
            lb = b[-1]
            b = [c / lb for c in b]
    if not a:
        return Poly.zero(p.lattice)
    la = a[-1]
    return Poly([c / la for c in a], p.lattice)


def squarefree_decomposition(p: Poly):
    """Yun's algorithm: returns [(factor_i, multiplicity_i)] with p ~ prod f_i^i."""
    p = p.certify_real()
    if p.degree < 1:
        return []
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(make_monic(p), 1)]
    out = []
    w, _ = _divmod_frac([as_fraction(c) for c in p.coeffs], list(g.coeffs))
    y, _ = _divmod_frac(
        [as_fraction(c) for c in p.derivative().coeffs], list(g.coeffs)
    )
    w_p = Poly(w, p.lattice)
    y_p = Poly(y, p.lattice)
    i = 1
    while w_p.degree > 0:
        z = y_p - w_p.derivative()
        f = poly_gcd(w_p, z) if not z.is_zero() else make_monic(w_p)
        if f.degree > 0:
            out.append((f, i))
        w_next, _ = _divmod_frac(
            [as_fraction(c) for c in w_p.coeffs], list(f.coeffs)
        )
        y_next, _ = _divmod_frac([as_fraction(c) for c in z.coeffs], list(f.coeffs))
        w_p = Poly(w_next, p.lattice)
        y_p = Poly(y_next, p.lattice)
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    p = p.certify_real()
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return make_monic(p)
    q, _ = _divmod_frac([as_fraction(c) for c in p.coeffs], list(g.coeffs))
    return make_monic(Poly(q, p.lattice))


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def sturm_chain(p: Poly) -> list:
    """Signed remainder chain of a squarefree real poly, as integer rows.

    Each row is scaled by a positive rational (sign-preserving), so kernel
    evaluations stay in integer arithmetic.
    """
    f0 = [as_fraction(c) for c in p.coeffs]
    f1 = [as_fraction(c) for c in p.derivative().coeffs]
    chain_frac = [f0, f1]
    while chain_frac[-1]:
        _, rem = _divmod_frac(chain_frac[-2], chain_frac[-1])
        if not rem:
            break
        chain_frac.append([-c for c in rem])
    return [_int_coeffs(Poly(f, p.lattice)) for f in chain_frac if f]


def _variations_at(chain, point: Optional[Fraction], positive_inf: bool) -> int:
    if point is None:
        return K.chain_variations_at_inf(chain, positive_inf)
    return K.chain_variations_at(chain, point.numerator, point.denominator)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every real root r satisfies |r| < bound."""
    cs = [as_fraction(c) for c in p.coeffs]
    lead = cs[-1]
    m = max((abs(c / lead) for c in cs[:-1]), default=Fraction(0))
    return 1 + m


@dataclass(frozen=True)
class RootBox:
    """Open rational interval (lo, hi) isolating exactly one real root.

    The contained polynomial changes sign across the box: sign_lo at lo,
    sign_hi = -sign_lo at hi.  multiplicity is the root's multiplicity in
    the polynomial handed to sturm_isolate (1 for squarefree input).
    """

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int
    multiplicity: int = 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def as_dict(self) -> dict:
        return {
            "lo": format_scalar(self.lo),
            "hi": format_scalar(self.hi),
            "width": format_scalar(self.width),
        }


def _isolate_squarefree(p: Poly) -> list:
    """RootBoxes for a squarefree real poly, sorted, pairwise disjoint."""
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    ints = chain[0]
    bound = root_bound(p)
    boxes: list = []

    def count_open(a: Fraction, b: Fraction) -> int:
        # roots in (a, b]; endpoints are never roots along this recursion
        return _variations_at(chain, a, False) - _variations_at(chain, b, False)

    def recurse(a: Fraction, b: Fraction, n_roots: int, sa: int, sb: int):
        if n_roots == 0:
            return
        if n_roots == 1 and sa != 0 and sb != 0 and sa != sb:
            boxes.append(RootBox(a, b, sa, sb))
            return
        mid = (a + b) / 2
        sm = K.sign_at(ints, mid.numerator, mid.denominator)
        if sm == 0:
            # exact rational root at mid; shrink a private bracket around it
            delta = (b - a) / 4
            while True:
                s_lo = K.sign_at(
                    ints, (mid - delta).numerator, (mid - delta).denominator
                )
                s_hi = K.sign_at(
                    ints, (mid + delta).numerator, (mid + delta).denominator
                )
                if (
                    s_lo != 0
                    and s_hi != 0
                    and count_open(mid - delta, mid + delta) == 1
                ):
                    boxes.append(RootBox(mid - delta, mid + delta, s_lo, s_hi))
                    break
                delta /= 2
            left = count_open(a, mid - delta)
            right = count_open(mid + delta, b)
            recurse(a, mid - delta, left, sa, s_lo)
            recurse(mid + delta, b, right, s_hi, sb)
            return
        left = count_open(a, mid)
        recurse(a, mid, left, sa, sm)
        recurse(mid, b, n_roots - left, sm, sb)

    a, b = -bound, bound
    sa = K.sign_at(ints, a.numerator, a.denominator)
    sb = K.sign_at(ints, b.numerator, b.denominator)
    total = count_open(a, b)
    recurse(a, b, total, sa, sb)
    boxes.sort(key=lambda box: (box.lo, box.hi))
    return boxes


def sturm_isolate(p: Poly) -> list:
    """Isolating boxes for all distinct real roots of p, sorted and disjoint.

    Non-squarefree input is decomposed first (Yun); each box carries the
    multiplicity of its root in p.
    """
    p = p.certify_real()
    if p.degree < 1:
        return []
    factors = squarefree_decomposition(p)
    if len(factors) == 1 and factors[0][1] == 1:
        return _isolate_squarefree(factors[0][0])
    tagged = []
    for f, mult in factors:
        for box in _isolate_squarefree(f):
            tagged.append((f, RootBox(box.lo, box.hi, box.sign_lo, box.sign_hi, mult)))
    # roots of distinct Yun factors are distinct; refine until boxes disjoint
    changed = True
    while changed:
        changed = False
        tagged.sort(key=lambda t: (t[1].lo, t[1].hi))
        for i1, i2 in itertools.combinations(range(len(tagged)), 2):
            f1, b1 = tagged[i1]
            f2, b2 = tagged[i2]
            if b1.hi > b2.lo and b2.hi > b1.lo:  # overlap
                tagged[i1] = (f1, refine_root(f1, b1, b1.width / 4))
                tagged[i2] = (f2, refine_root(f2, b2, b2.width / 4))
                changed = True
                break
    tagged.sort(key=lambda t: (t[1].lo, t[1].hi))
    return [b for _, b in tagged]


def refine_root(p: Poly, box: RootBox, target_width: Fraction) -> RootBox:
    """Shrink a box below target_width by sign-preserving bisection."""
    target_width = Fraction(target_width)
    if target_width <= 0:
        raise PolyError("target width must be positive")
    if box.width <= target_width:
        return box
    ints = _int_coeffs(p.certify_real())
    lo, hi = box.lo, box.hi
    steps = 0
    width = box.width
    while width > target_width:
        width /= 2
        steps += 1
    ln, ld, hn, hd, zn, zd = K.refine_bisect(
        ints,
        lo.numerator,
        lo.denominator,
        hi.numerator,
        hi.denominator,
        box.sign_lo,
        steps,
    )
    if zd:  # exact rational root hit at zn/zd
        mid = Fraction(zn, zd)
        delta = target_width / 2
        return RootBox(
            mid - delta, mid + delta, box.sign_lo, box.sign_hi, box.multiplicity
        )
    new = RootBox(
        Fraction(ln, ld), Fraction(hn, hd), box.sign_lo, box.sign_hi, box.multiplicity
    )
    if new.width > target_width:  # exact-hit path above always satisfies this
        return refine_root(p, new, target_width)
    return new


def count_roots_in(
    p: Poly,
    lo: Optional[Fraction],
    hi: Optional[Fraction],
    *,
    with_flags: bool = False,
):
    """Exact number of distinct real roots in the open interval (lo, hi).

    lo=None means -inf, hi=None means +inf.  If an endpoint happens to be a
    root it is nudged inward by an exact epsilon = width/2^32 (or
    |endpoint|/2^32 on half-infinite intervals); the returned flags name any
    endpoint that was perturbed.
    """
    s = squarefree_part(p.certify_real())
    if s.degree < 1:
        return (0, ()) if with_flags else 0
    if lo is not None and hi is not None and not lo < hi:
        raise PolyError("need lo < hi")
    chain = sturm_chain(s)
    ints = chain[0]
    flags = []

    def nudge(point: Fraction, inward: int, other: Optional[Fraction]) -> Fraction:
        if other is not None:
            eps = abs(other - point) / 2**32
        else:
            eps = (abs(point) or Fraction(1)) / 2**32
        moved = point
        while K.sign_at(ints, moved.numerator, moved.denominator) == 0:
            moved = moved + inward * eps
            eps /= 2
        return moved

    lo_eff, hi_eff = lo, hi
    if lo is not None and K.sign_at(ints, lo.numerator, lo.denominator) == 0:
        lo_eff = nudge(lo, +1, hi)
        flags.append("lo-perturbed")
    if hi is not None and K.sign_at(ints, hi.numerator, hi.denominator) == 0:
        hi_eff = nudge(hi, -1, lo)
        flags.append("hi-perturbed")
    count = _variations_at(chain, lo_eff, False) - _variations_at(chain, hi_eff, True)
    # V(a) - V(b) counts roots in (a, b]; b is not a root here, so this is
    # exactly the open-interval count.
    if with_flags:
        return count, tuple(flags)
    return count


def count_real_roots(p: Poly) -> int:
    return count_roots_in(p, None, None)
