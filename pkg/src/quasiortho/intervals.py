"""Rational interval arithmetic for rigorous quadrature error bounds.

Endpoints are exact Fractions; every operation returns an interval that
encloses the true result, so a quadrature sum evaluated through this layer
yields a certified enclosure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value) -> "RatInterval":
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other):
        o = _coerce(other)
        return RatInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return RatInterval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __mul__(self, other):
        o = _coerce(other)
        products = (
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        )
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def inverse(self) -> "RatInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __pow__(self, n: int) -> "RatInterval":
        if n < 0:
            raise ValueError("negative powers not supported")
        result = RatInterval.point(1)
        base = self
        e = n
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def abs_hi(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def definitely_positive(self) -> bool:
        return self.lo > 0


def _coerce(value) -> RatInterval:
    if isinstance(value, RatInterval):
        return value
    return RatInterval.point(Fraction(value))


def eval_poly(coeffs, x: RatInterval) -> RatInterval:
    """Horner evaluation of an exact-coefficient polynomial on an interval."""
    acc = RatInterval.point(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + RatInterval.point(c)
    return acc
