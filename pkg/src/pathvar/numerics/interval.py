"""Dyadic-endpoint intervals with directed rounding.

Every operation returns an interval that contains the exact result for every
choice of reals inside the operands.  Addition, subtraction, multiplication
and absolute value are exact on dyadics, so no rounding slack appears there;
square roots and reciprocals take an explicit precision exponent.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .dyadic import Dyadic, ZERO, ceil_to, floor_to, sqrt_down, sqrt_up

Number = Union[Dyadic, int, Fraction]


class DomainError(ValueError):
    """A certified operation was asked to act outside its domain."""


def _as_dyadic_pair(x: Number, exp: int) -> tuple[Dyadic, Dyadic]:
    if isinstance(x, Dyadic):
        return x, x
    if isinstance(x, int):
        d = Dyadic(x)
        return d, d
    return floor_to(x, exp), ceil_to(x, exp)


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo: Dyadic, hi: Dyadic):
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    # -- constructors ------------------------------------------------------

    @classmethod
    def point(cls, x: Number) -> "Interval":
        if isinstance(x, int):
            x = Dyadic(x)
        elif isinstance(x, Fraction):
            x = Dyadic.from_fraction(x)
        return cls(x, x)

    @classmethod
    def enclose(cls, q: Fraction, exp: int = -64) -> "Interval":
        """Tightest interval with endpoints on the 2**exp grid containing q."""
        return cls(floor_to(q, exp), ceil_to(q, exp))

    @classmethod
    def enclose_pair(cls, lo: Fraction, hi: Fraction, exp: int = -64) -> "Interval":
        return cls(floor_to(lo, exp), ceil_to(hi, exp))

    # -- views ---------------------------------------------------------------

    def width(self) -> Dyadic:
        return self.hi - self.lo

    def mid(self) -> Dyadic:
        return (self.lo + self.hi).half()

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, Fraction):
            return self.lo.as_fraction() <= x <= self.hi.as_fraction()
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"

    # -- exact arithmetic ----------------------------------------------------

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def _coerce(self, other):
        if isinstance(other, Interval):
            return other
        if isinstance(other, (Dyadic, int)):
            return Interval.point(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        products = (
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __abs__(self):
        if self.lo.sign >= 0:
            return self
        if self.hi.sign <= 0:
            return -self
        return Interval(ZERO, max(-self.lo, self.hi))

    def scale2(self, k: int) -> "Interval":
        return Interval(self.lo.scale2(k), self.hi.scale2(k))

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    # -- rounded operations ----------------------------------------------------

    def sqrt(self, exp: int = -64) -> "Interval":
        """Enclosure of sqrt over the interval; requires hi >= 0.

        A slightly negative lo is clamped to zero so that enclosures of
        nonnegative quantities (squared sums) stay usable after rounding.
        """
        if self.hi.sign < 0:
            raise DomainError(f"sqrt of negative interval {self}")
        lo = self.lo if self.lo.sign > 0 else ZERO
        return Interval(sqrt_down(lo, exp), sqrt_up(self.hi, exp))

    def recip(self, exp: int = -64) -> "Interval":
        """Enclosure of 1/x; requires the interval to exclude zero."""
        if self.lo.sign <= 0 <= self.hi.sign:
            raise DomainError(f"reciprocal of interval containing zero: {self}")
        lo_q = 1 / self.hi.as_fraction()
        hi_q = 1 / self.lo.as_fraction()
        return Interval(floor_to(lo_q, exp), ceil_to(hi_q, exp))

    def round_out(self, exp: int) -> "Interval":
        return Interval(self.lo.round_down(exp), self.hi.round_up(exp))

    # -- certified comparisons ---------------------------------------------

    def certainly_lt(self, other: "Interval") -> bool:
        return self.hi < other.lo

    def certainly_gt(self, other: "Interval") -> bool:
        return self.lo > other.hi
