"""Directions and certified directional variation.

A Direction is a line through the origin, canonically an angle in [0, pi).
Three descriptions are kept exact so enclosures can be recomputed at any
precision: an exact rational ray (scale handled by exact norm division), a
rational multiple of pi, or a rational radian value reduced mod pi.

The variation of a path along direction w over a partition P is
sum_i |<w_unit, alpha(x_{i+1}) - alpha(x_i)>|.  The inner-product form is the
computational primary; the |cos(theta - theta_i)| * l_i form over chord
angles is kept as a cross-check in the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Optional

from .core.chords import chord_deltas, chord_deltas_exact
from .core.partitions import Partition
from .core.paths import PathSpec
from .numerics.dyadic import Dyadic, ZERO, ceil_to, floor_to, sqrt_down, sqrt_up
from .numerics.interval import DomainError, Interval
from .numerics.trig import atan_enclosure, cos_enclosure, pi_enclosure, sin_enclosure

_NORM_TOL_EXP = -40  # rays this far from unit norm are rejected outright


def scale_interval(iv: Interval, q: Fraction, exp: int) -> Interval:
    """Outward enclosure of q * iv for an exact rational q."""
    a = iv.lo.as_fraction() * q
    b = iv.hi.as_fraction() * q
    if b < a:
        a, b = b, a
    return Interval(floor_to(a, exp), ceil_to(b, exp))


class Direction:
    __slots__ = ("_kind", "_ray", "_pi_frac", "_radians", "_cache")

    def __init__(self, kind, ray=None, pi_frac=None, radians=None):
        self._kind = kind
        self._ray = ray
        self._pi_frac = pi_frac
        self._radians = radians
        self._cache: dict = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_vector(cls, wx, wy) -> "Direction":
        """Direction of an exact rational vector; the vector's scale is
        divided out exactly, so any nonzero rational vector is admissible."""
        wx, wy = Fraction(wx), Fraction(wy)
        n2 = wx * wx + wy * wy
        if n2 == 0:
            raise DomainError("zero vector has no direction")
        return cls("ray", ray=(wx, wy, n2))

    @classmethod
    def from_theta_pi(cls, q) -> "Direction":
        """Direction at angle q * pi."""
        q = Fraction(q) % 1
        if q == 0:
            return cls.from_vector(1, 0)
        if q == Fraction(1, 2):
            return cls.from_vector(0, 1)
        return cls("pi_frac", pi_frac=q)

    @classmethod
    def from_radians(cls, x) -> "Direction":
        x = x.as_fraction() if isinstance(x, Dyadic) else Fraction(x)
        if x == 0:
            return cls.from_vector(1, 0)
        return cls("radians", radians=x)

    # -- exact views -------------------------------------------------------

    def exact_ray(self) -> Optional[tuple[Fraction, Fraction, Fraction]]:
        """(wx, wy, |w|^2) when the direction is an exact rational ray."""
        return self._ray if self._kind == "ray" else None

    def theta(self, exp: int = -64) -> Interval:
        """Enclosure of the canonical angle in [0, pi)."""
        key = ("theta", exp)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = self._theta_uncached(exp)
        self._cache[key] = out
        return out

    def _theta_uncached(self, exp: int) -> Interval:
        if self._kind == "pi_frac":
            return scale_interval(pi_enclosure(exp - 4), self._pi_frac, exp)
        if self._kind == "radians":
            return self._reduced_radians(exp)
        wx, wy, n2 = self._ray
        if wx < 0 or (wx == 0 and wy < 0):
            wx, wy = -wx, -wy
        if wx == 0:
            return pi_enclosure(exp - 2).scale2(-1).round_out(exp)
        base = atan_enclosure(wy / wx, exp - 2)
        if wy >= 0:
            return base.round_out(exp)
        pi = pi_enclosure(exp - 2)
        return Interval((base.lo + pi.lo).round_down(exp), (base.hi + pi.hi).round_up(exp))

    def _reduced_radians(self, exp: int) -> Interval:
        x = self._radians
        # pi precision must grow with |x| or k0 lands thousands of multiples
        # off and the candidate window below never brackets the reduction
        mag_bits = abs(x.numerator // x.denominator).bit_length()
        prec = min(exp - 8, -48) - mag_bits
        while True:
            pi = pi_enclosure(prec)
            k0 = math.floor(x / pi.mid().as_fraction())
            for k in (k0, k0 - 1, k0 + 1, k0 - 2, k0 + 2):
                cand_lo = x - k * pi.hi.as_fraction()
                cand_hi = x - k * pi.lo.as_fraction()
                if cand_lo >= 0 and cand_hi < pi.lo.as_fraction():
                    return Interval(floor_to(cand_lo, exp), ceil_to(cand_hi, exp))
            prec -= 32
            if prec < -4096:
                raise DomainError("cannot reduce angle modulo pi")

    def components(self, exp: int = -64) -> tuple[Interval, Interval]:
        """Enclosures of the exact unit vector (cos theta, sin theta) of the
        canonical representative."""
        key = ("comp", exp)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if self._kind == "ray":
            wx, wy, n2 = self._ray
            if wx < 0 or (wx == 0 and wy < 0):
                wx, wy = -wx, -wy
            root_exp = exp - 8
            while sqrt_down(n2, root_exp).sign == 0:
                root_exp *= 2  # extremely short rays need a finer sqrt grid
            n = Interval(sqrt_down(n2, root_exp), sqrt_up(n2, root_exp))
            nlo, nhi = n.lo.as_fraction(), n.hi.as_fraction()
            cx = (min(wx / nlo, wx / nhi), max(wx / nlo, wx / nhi))
            cy = (min(wy / nlo, wy / nhi), max(wy / nlo, wy / nhi))
            out = (
                Interval(floor_to(cx[0], exp), ceil_to(cx[1], exp)),
                Interval(floor_to(cy[0], exp), ceil_to(cy[1], exp)),
            )
        else:
            th = self.theta(exp - 4)
            out = (cos_enclosure(th, exp), sin_enclosure(th, exp))
        self._cache[key] = out
        return out

    def rational_approx(self, max_gap: Fraction) -> tuple[Fraction, Fraction, Fraction]:
        """Exact rational ray within angle max_gap of this direction.

        Returns (wx, wy, certified angle gap bound)."""
        ray = self.exact_ray()
        if ray is not None:
            return ray[0], ray[1], Fraction(0)
        exp = -56
        while True:
            cx, cy = self.components(exp)
            wc = cx.width().as_fraction()
            ws = cy.width().as_fraction()
            gap = 4 * max(wc, ws)
            if gap <= max_gap:
                return cx.mid().as_fraction(), cy.mid().as_fraction(), gap
            exp -= 32

    def describe(self) -> str:
        if self._kind == "ray":
            wx, wy, _ = self._ray
            return f"vector({wx},{wy})"
        if self._kind == "pi_frac":
            return f"{self._pi_frac}*pi"
        return f"radians({self._radians})"


# -- variation over a partition --------------------------------------------------


def directional_variation_on_partition(
    path: PathSpec,
    partition: Partition,
    d: Direction,
    precision: int = -60,
) -> Interval:
    """Certified enclosure of sum_i |<w, delta_i>| for the unit vector w."""
    exact = chord_deltas_exact(path, partition)
    ray = d.exact_ray()
    if exact is not None and ray is not None:
        wx, wy, n2 = ray
        s = Fraction(0)
        for dx, dy in exact:
            s += abs(wx * dx + wy * dy)
        if n2 == 1:
            return Interval.enclose(s, precision)
        root_exp = precision - max(4, s.numerator.bit_length() - s.denominator.bit_length() + 4)
        while sqrt_down(n2, root_exp).sign == 0:
            root_exp *= 2
        n = Interval(sqrt_down(n2, root_exp), sqrt_up(n2, root_exp))
        return Interval.enclose_pair(
            s / n.hi.as_fraction(), s / n.lo.as_fraction(), precision
        )
    # interval route: widths shrink linearly with the working precision
    work = precision - max(1, len(partition)).bit_length() - 4
    for _ in range(6):
        wx_i, wy_i = d.components(work)
        total = Interval(ZERO, ZERO)
        if exact is not None:
            for dx, dy in exact:
                term = scale_interval(wx_i, dx, work) + scale_interval(wy_i, dy, work)
                total = total + abs(term)
        else:
            deltas = chord_deltas(path, partition, work)
            for dx, dy in deltas:
                total = total + abs(wx_i * dx + wy_i * dy)
        if total.width() <= Dyadic(1, precision):
            return total
        work -= 32
    return total


def variation_profile(
    path: PathSpec,
    partition: Partition,
    count: int,
    precision: int = -60,
) -> list[tuple[Interval, Interval]]:
    """Samples (theta_j, v_{theta_j, P}) at theta_j = j*pi/count, j = 0..count."""
    if count < 1:
        raise ValueError("profile needs at least one cell")
    rows = []
    pi = pi_enclosure(precision - 8)
    for j in range(count + 1):
        q = Fraction(j, count)
        theta = scale_interval(pi, q, precision)
        d = Direction.from_theta_pi(q)
        v = directional_variation_on_partition(path, partition, d, precision)
        rows.append((theta, v))
    return rows


def direction_lipschitz_bound(l_p: Interval) -> Interval:
    """|v_{theta1,P} - v_{theta2,P}| <= 2 * l_P * |theta1 - theta2|; this is
    the 2 * l_P factor."""
    return l_p.scale2(1)


# -- two-direction length bound ---------------------------------------------------


def certified_min(
    f: Callable[[Interval], Interval],
    lo: Dyadic,
    hi: Dyadic,
    tol: Fraction,
    max_rounds: int = 64,
) -> Interval:
    """Branch-and-bound enclosure of min f over [lo, hi] for an inclusion-
    isotone interval extension f."""
    cells = [Interval(lo, hi)]
    out_lo, out_hi = None, None
    for _ in range(max_rounds):
        evals = [(c, f(c)) for c in cells]
        out_hi = min(fv.hi for _, fv in evals)
        out_lo = min(fv.lo for _, fv in evals)
        if (out_hi - out_lo).as_fraction() <= tol:
            return Interval(out_lo, out_hi)
        keep = [c for c, fv in evals if fv.lo <= out_hi]
        cells = []
        for c in keep:
            m = c.mid()
            cells.append(Interval(c.lo, m))
            cells.append(Interval(m, c.hi))
    return Interval(out_lo, out_hi)


def _intersect(a: Interval, b: Interval) -> Interval:
    lo = a.lo if a.lo > b.lo else b.lo
    hi = a.hi if a.hi < b.hi else b.hi
    return Interval(lo, hi) if lo <= hi else a


def _pair_sum_range(cell: Interval, gamma: Interval, exp: int) -> Interval:
    """Range enclosure of |cos t| + |cos(t+gamma)| over the cell.

    Away from the kinks the slope is enclosed by the signed sines, so a
    mean-value form about the midpoint tightens quadratically; kink cells
    fall back to the direct interval image.
    """
    c1 = cos_enclosure(cell, exp)
    c2 = cos_enclosure(cell + gamma, exp)
    direct = abs(c1) + abs(c2)
    s1 = 1 if c1.lo.sign > 0 else (-1 if c1.hi.sign < 0 else 0)
    s2 = 1 if c2.lo.sign > 0 else (-1 if c2.hi.sign < 0 else 0)
    if s1 == 0 or s2 == 0 or cell.is_point():
        return direct
    m = Interval.point(cell.mid())
    at_mid = abs(cos_enclosure(m, exp)) + abs(cos_enclosure(m + gamma, exp))
    d1 = sin_enclosure(cell, exp)
    d2 = sin_enclosure(cell + gamma, exp)
    slope = (-d1 if s1 > 0 else d1) + (-d2 if s2 > 0 else d2)
    rad = cell.width().half()
    spread = slope * Interval(-rad, rad)
    return _intersect(direct, at_mid + spread)


def direction_pair_min(gamma: Interval, tol: Fraction = Fraction(1, 1 << 16)) -> Interval:
    """Certified enclosure of c(gamma) = min_theta(|cos theta| + |cos(theta+gamma)|)
    for gamma strictly inside (0, pi)."""
    pi = pi_enclosure(-64)
    if not (gamma.lo.sign > 0 and gamma.hi < pi.lo):
        raise DomainError("separation angle must lie strictly inside (0, pi)")
    exp = min(-48, _floor_log2_fraction(tol) - 8)

    def h(cell: Interval) -> Interval:
        return _pair_sum_range(cell, gamma, exp)

    work_tol = tol
    for _ in range(8):
        c = certified_min(h, ZERO, pi.hi, work_tol, max_rounds=200)
        if c.lo.sign > 0:
            return c
        work_tol = work_tol / 16
    raise DomainError("could not certify a positive two-direction minimum")


def _floor_log2_fraction(q: Fraction) -> int:
    n, d = q.numerator, q.denominator
    k = n.bit_length() - d.bit_length()
    if (n << max(0, -k)) >= (d << max(0, k)):
        return k
    return k - 1


def two_direction_length_bound(gamma: Interval, tol: Fraction = Fraction(1, 1 << 16)) -> Interval:
    """Enclosure of r(gamma) = 1 / c(gamma).

    l_P <= r(gamma) * (v_{theta,P} + v_{theta+gamma,P}) holds for every theta
    and partition; gamma must lie strictly inside (0, pi).
    """
    c = direction_pair_min(gamma, tol)
    return c.recip(min(-48, _floor_log2_fraction(tol) - 8))


def length_upper_bound(path: PathSpec, oracle, eps_call: Dyadic = Dyadic(1, -8)) -> Interval:
    """Interval containing r(pi/2) * (v_0 + v_{pi/2}); its hi certifiably
    dominates every inscribed length of the path."""
    d0 = Direction.from_vector(1, 0)
    d1 = Direction.from_vector(0, 1)
    _, v0 = oracle.achieve_variation(d0, eps_call)
    _, v1 = oracle.achieve_variation(d1, eps_call)
    half_pi = pi_enclosure(-64).scale2(-1)
    r = two_direction_length_bound(half_pi, Fraction(1, 1 << 12))
    slack = Interval(ZERO, eps_call.scale2(1))
    return r * (v0 + v1 + slack)
