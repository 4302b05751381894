"""Exact scalars: arbitrary-precision rationals and Gaussian rationals.

Every coefficient in this package is either a `fractions.Fraction` (already
canonical: positive denominator, coprime with the numerator) or a
`GaussianRational` re + im*i with Fraction parts.  A Gaussian value with zero
imaginary part compares equal to (and hashes like) the plain rational.

Also provides the (q-)Pochhammer primitives every series construction is
built from, and the text grammar "p/q" / "re+im*i" used by config files and
reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union


class ExactnumError(ValueError):
    """Bad scalar input (parse failure, non-integer where one is required)."""


class NotRealError(ExactnumError):
    """A value expected to be real carries a nonzero imaginary part."""


class GaussianRational:
    """a + b*i with exact rational a, b.

    Immutable.  Arithmetic mixes freely with Fraction/int; division uses the
    conjugate.  A value with im == 0 is still a GaussianRational (callers
    certify realness explicitly via :func:`as_fraction`).
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n2 = o.re * o.re + o.im * o.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n2,
            (self.im * o.re - self.re * o.im) / n2,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ExactnumError("Gaussian powers take nonnegative int exponents")
        result = GaussianRational(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|z|^2, exact."""
        return self.re * self.re + self.im * self.im

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        # im == 0 must hash like the plain rational so mixed dict keys work.
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __reduce__(self):
        # __slots__ plus the immutability guard defeat default pickling
        return (GaussianRational, (self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


@dataclass(frozen=True)
class QBase:
    """A base q with the strict invariant 0 < q < 1."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if not (0 < self.value < 1):
            raise ExactnumError(f"q must satisfy 0 < q < 1, got {self.value}")


def _q_value(q) -> Fraction:
    return q.value if isinstance(q, QBase) else Fraction(q)


def as_scalar(value) -> Scalar:
    """Coerce int/Fraction/GaussianRational (or a parseable str) to a Scalar."""
    if isinstance(value, (Fraction, GaussianRational)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ExactnumError(f"cannot interpret {value!r} as an exact scalar")


def scalar_re(value: Scalar) -> Fraction:
    return value.re if isinstance(value, GaussianRational) else Fraction(value)


def scalar_im(value: Scalar) -> Fraction:
    return value.im if isinstance(value, GaussianRational) else Fraction(0)


def is_real(value: Scalar) -> bool:
    return scalar_im(value) == 0


def as_fraction(value: Scalar) -> Fraction:
    """Certify a scalar real and return it as a Fraction.

    Raises NotRealError if the imaginary part is nonzero; this is the exact
    cancellation check used after complex-parameter constructions.
    """
    if isinstance(value, GaussianRational):
        if value.im != 0:
            raise NotRealError(f"nonzero imaginary part: {value}")
        return value.re
    return Fraction(value)


def conj(value: Scalar) -> Scalar:
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return Fraction(value)


# ---------------------------------------------------------------------------
# Pochhammer primitives
# ---------------------------------------------------------------------------


def pochhammer(a: Scalar, m: int) -> Scalar:
    """Shifted factorial (a)_m = a (a+1) ... (a+m-1); (a)_0 = 1."""
    if m < 0:
        raise ExactnumError("pochhammer needs m >= 0")
    result: Scalar = Fraction(1)
    a = as_scalar(a)
    for j in range(m):
        result = result * (a + j)
    return result


def qpochhammer(a: Scalar, q, m: int) -> Scalar:
    """(a;q)_m = prod_{j=0}^{m-1} (1 - a q^j); (a;q)_0 = 1."""
    if m < 0:
        raise ExactnumError("qpochhammer needs m >= 0")
    qv = _q_value(q)
    result: Scalar = Fraction(1)
    a = as_scalar(a)
    qj: Scalar = Fraction(1)
    for _ in range(m):
        result = result * (1 - a * qj)
        qj = qj * qv
    return result


def qpochhammer_multi(values: Iterable[Scalar], q, m: int) -> Scalar:
    """(a_1, ..., a_r; q)_m = prod_i (a_i; q)_m; empty product is 1."""
    result: Scalar = Fraction(1)
    for a in values:
        result = result * qpochhammer(a, q, m)
    return result


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------
#
# Rational:  "p/q" or "p" (q == 1).
# Gaussian:  "re+im*i" or "re-im*i" with each part in rational form.


def format_scalar(value: Scalar) -> str:
    if isinstance(value, GaussianRational):
        if value.im == 0:
            return _format_fraction(value.re)
        re = _format_fraction(value.re)
        im = _format_fraction(value.im)
        sign = "+"
        if im.startswith("-"):
            sign, im = "-", im[1:]
        return f"{re}{sign}{im}*i"
    return _format_fraction(Fraction(value))


def _format_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_scalar(text: str) -> Scalar:
    """Parse the scalar grammar.  Inverse of format_scalar."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ExactnumError("empty scalar text")
    if s.endswith("i"):
        return _parse_gaussian(s)
    return _parse_fraction(s)


def _parse_fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ExactnumError(f"bad rational {s!r}: {exc}") from None


def _parse_gaussian(s: str) -> GaussianRational:
    body = s[:-1]
    if body.endswith("*"):
        body = body[:-1]
    # Split re / im on the last +/- not at position 0 and not inside "/".
    split = -1
    for idx in range(len(body) - 1, 0, -1):
        if body[idx] in "+-":
            split = idx
            break
    if split <= 0:
        # pure imaginary: "i", "-i", "im*i" with no real part
        if body in ("", "+"):
            return GaussianRational(0, 1)
        if body == "-":
            return GaussianRational(0, -1)
        return GaussianRational(0, _parse_fraction(body))
    re = _parse_fraction(body[:split])
    im_text = body[split:]
    if im_text in ("+", "-"):
        im_text += "1"
    return GaussianRational(re, _parse_fraction(im_text))
