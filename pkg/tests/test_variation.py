"""Directional variation over partitions, directions, and the two-direction
length bound.

Reference identity used throughout: for an exact ray w and exact chords,
v_{w,P} = sum_i |<w, delta_i>| / |w|, so small cases have closed forms.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pathvar.core.partitions import Partition
from pathvar.core.paths import Polyline, SawtoothGraph, as_polyline, canonical_partition
from pathvar.core.chords import polyline_length
from pathvar.numerics.dyadic import Dyadic
from pathvar.numerics.interval import DomainError, Interval
from pathvar.numerics.trig import pi_enclosure, sin_enclosure
from pathvar.variation import (
    Direction,
    direction_lipschitz_bound,
    direction_pair_min,
    directional_variation_on_partition,
    length_upper_bound,
    scale_interval,
    two_direction_length_bound,
    variation_profile,
)

F = Fraction

RT2_HALF = F("0.70710678118654752440084436210484903928483593768847")  # sqrt(2)/2
RT2 = 2 * RT2_HALF


def test_direction_constructors_and_exact_rays():
    d = Direction.from_vector(3, 4)
    assert d.exact_ray() == (3, 4, 25)
    assert Direction.from_theta_pi(0).exact_ray() == (1, 0, 1)
    assert Direction.from_theta_pi(F(1, 2)).exact_ray() == (0, 1, 1)
    assert Direction.from_theta_pi(F(3, 2)).exact_ray() == (0, 1, 1)  # mod 1
    assert Direction.from_radians(0).exact_ray() == (1, 0, 1)
    assert Direction.from_theta_pi(F(1, 3)).exact_ray() is None
    with pytest.raises(DomainError):
        Direction.from_vector(0, 0)


QUARTER_PI = F("0.78539816339744830961566084581987572104929234984378")


def test_theta_canonical_range():
    for d in (
        Direction.from_vector(1, 1),
        Direction.from_vector(-1, -1),  # same line, flipped representative
        Direction.from_theta_pi(F(1, 4)),
    ):
        assert d.theta(-60).contains(QUARTER_PI)
    # a downhill ray flips into the upper half plane: theta = 3pi/4
    assert Direction.from_vector(1, -1).theta(-60).contains(3 * QUARTER_PI)


def test_theta_of_flipped_rays_agree():
    a = Direction.from_vector(2, -5).theta(-60)
    b = Direction.from_vector(-2, 5).theta(-60)
    assert a.lo == b.lo and a.hi == b.hi


def test_radians_reduction_mod_pi():
    pi40 = F("3.1415926535897932384626433832795028841971693993751")
    # 10 + pi reduces to ~10 - 3pi = 0.575...
    d = Direction.from_radians(F(10))
    th = d.theta(-60)
    assert th.contains(F(10) - 3 * pi40)
    big = Direction.from_radians(F(10**12) + F(1, 7))
    th = big.theta(-60)
    assert th.lo.as_fraction() >= 0 and th.hi.as_fraction() < pi40 + F(1, 1000)


def test_components_are_unit_norm():
    for d in (
        Direction.from_vector(3, 4),
        Direction.from_theta_pi(F(2, 7)),
        Direction.from_radians(F(5, 3)),
    ):
        cx, cy = d.components(-60)
        lo = cx.lo.as_fraction() ** 2 + cy.lo.as_fraction() ** 2
        hi = cx.hi.as_fraction() ** 2 + cy.hi.as_fraction() ** 2
        lo, hi = min(lo, hi), max(lo, hi)
        assert lo <= 1 + F(1, 1 << 50)
        assert hi >= 1 - F(1, 1 << 50)


def test_rational_approx_gap():
    d = Direction.from_theta_pi(F(1, 3))
    wx, wy, gap = d.rational_approx(F(1, 1 << 40))
    assert gap <= F(1, 1 << 40)
    # the returned ray must be within gap of the true angle pi/3
    n2 = wx * wx + wy * wy
    cos_true, sin_true = F(1, 2), F("0.86602540378443864676372317075293618347140262690519")
    dot = wx * cos_true + wy * sin_true
    cross = abs(wx * sin_true - wy * cos_true)
    assert dot > 0
    # |sin(angle gap)| <= gap, and cross/|w| = |sin gap| up to sin_true rounding
    assert cross * cross <= 2 * gap * gap * n2


def test_exact_ray_gap_is_zero():
    wx, wy, gap = Direction.from_vector(-7, 24).rational_approx(F(1, 10**30))
    assert (wx, wy, gap) == (-7, 24, 0)


def test_describe_forms():
    assert Direction.from_vector(1, 2).describe() == "vector(1,2)"
    assert Direction.from_theta_pi(F(1, 3)).describe() == "1/3*pi"
    assert Direction.from_radians(F(7, 5)).describe() == "radians(7/5)"


# -- directional variation ------------------------------------------------------


def test_sawtooth_vertical_variation_exact():
    s = SawtoothGraph(3)
    part = canonical_partition(s)
    v = directional_variation_on_partition(s, part, Direction.from_theta_pi(F(1, 2)), -60)
    assert v.is_point() and v.lo.as_fraction() == 1


def test_sawtooth_horizontal_variation_exact():
    s = SawtoothGraph(2)
    part = canonical_partition(s)
    v = directional_variation_on_partition(s, part, Direction.from_theta_pi(0), -60)
    assert v.is_point() and v.lo.as_fraction() == 1


def test_diagonal_variation_of_sawtooth_one():
    # chords alternate (1/4, 1/4) and (1/4, -1/4); against w = (1,1)/sqrt(2)
    # the inner products are 1/2, 0, 1/2, 0 -> v = 1/sqrt(2)... divided: 1/2*2/sqrt2
    s = SawtoothGraph(1)
    part = canonical_partition(s)
    v = directional_variation_on_partition(s, part, Direction.from_vector(1, 1), -70)
    assert v.contains(RT2_HALF)
    assert v.width() <= Dyadic(1, -64)


def test_variation_against_pi_frac_matches_ray():
    # theta = pi/4 equals the (1,1) ray direction
    s = SawtoothGraph(1)
    part = canonical_partition(s)
    v_ray = directional_variation_on_partition(s, part, Direction.from_vector(1, 1), -60)
    v_ang = directional_variation_on_partition(s, part, Direction.from_theta_pi(F(1, 4)), -60)
    assert v_ang.contains(RT2_HALF)
    assert v_ray.lo <= v_ang.hi and v_ang.lo <= v_ray.hi  # overlap


def test_square_loop_variations():
    sq = Polyline(((F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1)), (F(0), F(0))))
    part = canonical_partition(sq)
    v0 = directional_variation_on_partition(sq, part, Direction.from_theta_pi(0), -60)
    assert v0.is_point() and v0.lo.as_fraction() == 2
    # four unit chords, each projecting to 1/sqrt(2): v = 4/sqrt(2) = 2*sqrt(2)
    v_diag = directional_variation_on_partition(sq, part, Direction.from_vector(1, 1), -60)
    assert v_diag.contains(2 * RT2)
    assert v_diag.width() <= Dyadic(1, -55)


def test_variation_scale_invariance_of_ray():
    s = SawtoothGraph(2)
    part = canonical_partition(s)
    a = directional_variation_on_partition(s, part, Direction.from_vector(1, 2), -60)
    b = directional_variation_on_partition(s, part, Direction.from_vector(F(1, 3), F(2, 3)), -60)
    assert a.lo == b.lo and a.hi == b.hi


def test_profile_endpoints_agree_and_thetas_increase():
    s = SawtoothGraph(3)
    part = canonical_partition(s)
    rows = variation_profile(s, part, 8, -60)
    assert len(rows) == 9
    # endpoint rows both describe the horizontal direction: equal variation
    assert rows[0][1].lo == rows[-1][1].lo and rows[0][1].hi == rows[-1][1].hi
    assert rows[0][1].contains(F(1))
    for (ta, _), (tb, _) in zip(rows, rows[1:]):
        assert ta.lo < tb.hi
    assert rows[-1][0].contains(pi_enclosure(-80).lo.as_fraction())
    # the vertical row sits in the middle and is exactly 1 for a sawtooth
    assert rows[4][1].contains(F(1))


def test_direction_lipschitz_bound_doubles_length():
    iv = Interval(Dyadic(3), Dyadic(7, 1))
    out = direction_lipschitz_bound(iv)
    assert out.lo == Dyadic(6) and out.hi == Dyadic(7, 2)


# -- cosine-form cross-check ------------------------------------------------------


def test_inner_product_form_matches_cosine_form():
    # v_theta = sum_i |cos(theta - phi_i)| * len_i for chords at angles phi_i.
    # For the scale-1 sawtooth at theta = pi/3 this collapses to the closed
    # form 2 * (cos(pi/12) + cos(5*pi/12)) * sqrt(2)/4 = sqrt(3)/2.
    from pathvar.numerics.dyadic import sqrt_down, sqrt_up

    s = as_polyline(SawtoothGraph(1))
    part = canonical_partition(s)
    v = directional_variation_on_partition(s, part, Direction.from_theta_pi(F(1, 3)), -70)
    ref = Interval(sqrt_down(F(3, 4), -100), sqrt_up(F(3, 4), -100))
    assert v.contains_interval(ref)
    import mpmath

    mpmath.mp.dps = 40
    cosine_form = (
        2
        * (abs(mpmath.cos(mpmath.pi / 12)) + abs(mpmath.cos(5 * mpmath.pi / 12)))
        * mpmath.sqrt(2)
        / 4
    )
    assert abs(cosine_form - mpmath.sqrt(3) / 2) < mpmath.mpf(10) ** -35


# -- two-direction bound ----------------------------------------------------------


def test_pair_min_at_right_angle_is_one():
    half_pi = pi_enclosure(-64).scale2(-1)
    m = direction_pair_min(half_pi, F(1, 1 << 16))
    assert m.contains(F(1))
    assert m.width().as_fraction() <= F(1, 1 << 14)


def test_pair_min_matches_sine():
    # c(gamma) = sin(gamma) for gamma in (0, pi/2]
    import mpmath

    mpmath.mp.dps = 40
    pi = pi_enclosure(-64)
    for num, den in ((1, 3), (1, 4), (2, 5)):
        gamma = scale_interval(pi, F(num, den), -64)
        m = direction_pair_min(gamma, F(1, 1 << 18))
        ref = F(mpmath.nstr(mpmath.sin(mpmath.pi * num / den), 30))
        assert m.contains(ref), (num, den)
        assert m.width().as_fraction() <= F(1, 1 << 16)


def test_pair_min_rejects_degenerate_gap():
    with pytest.raises(DomainError):
        direction_pair_min(Interval.point(0), F(1, 1 << 10))


def test_two_direction_length_bound_value():
    # r(pi/3) = 1/sin(pi/3) = 2/sqrt(3), frozen
    pi = pi_enclosure(-64)
    r = two_direction_length_bound(scale_interval(pi, F(1, 3), -64), F(1, 1 << 18))
    assert r.contains(F("1.1547005383792515290182975610039149112952035025403"))


def test_length_upper_bound_contains_true_length():
    from pathvar.oracles import PolylineOracle

    seg = Polyline(((F(0), F(0)), (F(1), F(0))))
    ub = length_upper_bound(seg, PolylineOracle(seg))
    assert ub.hi.as_fraction() >= 1
    assert ub.hi.as_fraction() <= 4  # r(pi/2) = 1, v0 + v1 = 1 + small slack
    s = as_polyline(SawtoothGraph(1))
    ub2 = length_upper_bound(s, PolylineOracle(s))
    assert ub2.hi.as_fraction() >= RT2  # true length sqrt(2)
