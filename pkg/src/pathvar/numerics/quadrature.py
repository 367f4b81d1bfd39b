"""Certified enclosure of the speed integral of a polynomial path.

integrate_speed_upper encloses integral over [0, 1] of sqrt(x'(t)^2 + y'(t)^2)
by exact rational range enclosures of the squared speed on uniform cells.
Cell ranges are inclusion-isotone and the square-root rounding grid is fixed,
so doubling the cell count can only shrink (never shift) the enclosure.
"""

from __future__ import annotations

from fractions import Fraction

from .dyadic import ceil_to, floor_to, sqrt_down, sqrt_up
from .interval import Interval
from .ratpoly import RationalPoly

_SQRT_EXP = -64
_OUT_EXP = -60


def integrate_speed_upper(xp: RationalPoly, yp: RationalPoly, n: int) -> Interval:
    """Enclosure of the arc-length integral using n uniform cells (n >= 1)."""
    if n < 1:
        raise ValueError("cell count must be positive")
    lo_sum = Fraction(0)
    hi_sum = Fraction(0)
    for i in range(n):
        a = Fraction(i, n)
        b = Fraction(i + 1, n)
        xlo, xhi = xp.eval_range(a, b)
        ylo, yhi = yp.eval_range(a, b)
        s2_lo = _sq_lo(xlo, xhi) + _sq_lo(ylo, yhi)
        s2_hi = max(xlo * xlo, xhi * xhi) + max(ylo * ylo, yhi * yhi)
        lo_sum += sqrt_down(s2_lo, _SQRT_EXP).as_fraction()
        hi_sum += sqrt_up(s2_hi, _SQRT_EXP).as_fraction()
    return Interval(floor_to(lo_sum / n, _OUT_EXP), ceil_to(hi_sum / n, _OUT_EXP))


def _sq_lo(lo: Fraction, hi: Fraction) -> Fraction:
    if lo >= 0:
        return lo * lo
    if hi <= 0:
        return hi * hi
    return Fraction(0)
