"""Exact rational helpers: parsing, formatting, and certified square-root bounds.

All solver arithmetic in this package is exact.  Rationals are stdlib
``fractions.Fraction``; square roots (which appear only in geometric
diameter checks) are handled through certified rational enclosures, never
floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Rational = Fraction


def parse_rational(text: str | int) -> Fraction:
    """Parse "p/q", integer, or exact decimal strings like "1.5" into a Fraction.

    Fraction's own constructor accepts all three forms exactly (decimal
    strings are parsed as base-10 rationals, not floats).
    """
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected rational string, got {type(text).__name__}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a Fraction canonically: plain integer, or "p/q" in lowest terms."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class SqrtBound:
    """A certified enclosure lo <= sqrt(value) <= hi with rational endpoints.

    ``bits`` controls the width: hi - lo <= 2**-bits (for values around 1).
    """

    __slots__ = ("value", "lo", "hi")

    def __init__(self, value: Fraction, bits: int = 64):
        value = Fraction(value)
        if value < 0:
            raise ValueError("square root of a negative rational")
        self.value = value
        scale = 1 << bits
        # sqrt(a/b) = sqrt(a*b)/b; floor via integer isqrt on the scaled value.
        n = isqrt(value.numerator * value.denominator * scale * scale)
        den = value.denominator * scale
        lo = Fraction(n, den)
        hi = Fraction(n + 1, den)
        assert lo * lo <= value < hi * hi
        self.lo = lo
        self.hi = hi


class Interval:
    """Closed rational interval used for certified arithmetic on sqrt terms.

    Supports the handful of operations the geometry checks need.  Widths stay
    tiny (roots are computed to 64+ bits), so comparisons against rational
    thresholds with real margins always resolve.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    @classmethod
    def sqrt_of(cls, value: Fraction, bits: int = 64) -> "Interval":
        b = SqrtBound(value, bits)
        return cls(b.lo, b.hi)

    def __add__(self, other):
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        products = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def sq(self) -> "Interval":
        if self.lo >= 0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(0, max(self.lo * self.lo, self.hi * self.hi))

    def sqrt(self, bits: int = 64) -> "Interval":
        return Interval(SqrtBound(self.lo, bits).lo, SqrtBound(self.hi, bits).hi)

    def certainly_lt(self, threshold) -> bool:
        return self.hi < Fraction(threshold)

    def certainly_gt(self, threshold) -> bool:
        return self.lo > Fraction(threshold)

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval(Fraction(x))
