"""Exact dyadic scalar arithmetic."""

from fractions import Fraction

from hypothesis import given, strategies as st

from pathvar.numerics.dyadic import (
    Dyadic,
    ONE,
    ZERO,
    ceil_to,
    floor_to,
    sqrt_down,
    sqrt_up,
)

mantissas = st.integers(min_value=-(1 << 40), max_value=1 << 40)
exponents = st.integers(min_value=-60, max_value=40)
dyadics = st.builds(Dyadic, mantissas, exponents)


def test_canonical_form():
    d = Dyadic(12, 3)  # 12 * 8 = 96 = 3 * 32
    assert (d.m, d.e) == (3, 5)
    assert Dyadic(0, 17).e == 0
    assert Dyadic(-8) == Dyadic(-1, 3)


def test_zero_one_constants():
    assert ZERO.as_fraction() == 0
    assert ONE.as_fraction() == 1


@given(dyadics, dyadics)
def test_add_sub_mul_match_fractions(a, b):
    assert (a + b).as_fraction() == a.as_fraction() + b.as_fraction()
    assert (a - b).as_fraction() == a.as_fraction() - b.as_fraction()
    assert (a * b).as_fraction() == a.as_fraction() * b.as_fraction()


@given(dyadics, dyadics)
def test_comparisons_match_fractions(a, b):
    assert (a < b) == (a.as_fraction() < b.as_fraction())
    assert (a == b) == (a.as_fraction() == b.as_fraction())
    assert (a <= b) == (a.as_fraction() <= b.as_fraction())


@given(dyadics)
def test_canonical_mantissa_odd_or_zero(a):
    assert a.m == 0 or a.m & 1


@given(dyadics)
def test_neg_abs_scale(a):
    assert (-a).as_fraction() == -a.as_fraction()
    assert abs(a).as_fraction() == abs(a.as_fraction())
    assert a.scale2(5).as_fraction() == a.as_fraction() * 32
    assert a.half().as_fraction() * 2 == a.as_fraction()


@given(dyadics)
def test_round_trip_fraction(a):
    assert Dyadic.from_fraction(a.as_fraction()) == a


@given(dyadics, st.integers(min_value=-50, max_value=10))
def test_requantization_is_directed(a, exp):
    lo, hi = a.round_down(exp), a.round_up(exp)
    assert lo <= a <= hi
    step = Fraction(1, 1 << -exp) if exp < 0 else Fraction(1 << exp)
    assert hi.as_fraction() - lo.as_fraction() <= step
    if a.e >= exp:
        assert lo == a == hi


def test_from_fraction_rejects_non_dyadic():
    import pytest

    with pytest.raises(ValueError):
        Dyadic.from_fraction(Fraction(1, 3))


@given(st.fractions(min_value=-100, max_value=100), st.integers(min_value=-40, max_value=-1))
def test_directed_rounding_brackets(q, exp):
    lo, hi = floor_to(q, exp), ceil_to(q, exp)
    assert lo.as_fraction() <= q <= hi.as_fraction()
    grid = Fraction(1, 1 << -exp)
    assert hi.as_fraction() - lo.as_fraction() <= grid
    if q.denominator & (q.denominator - 1) == 0 and q.denominator <= (1 << -exp):
        assert lo == hi  # already on the grid


@given(st.fractions(min_value=0, max_value=1000), st.integers(min_value=-50, max_value=-4))
def test_sqrt_bounds(q, exp):
    lo, hi = sqrt_down(q, exp), sqrt_up(q, exp)
    assert lo.as_fraction() ** 2 <= q <= hi.as_fraction() ** 2
    assert hi.as_fraction() - lo.as_fraction() <= 2 * Fraction(1, 1 << -exp)


def test_sqrt_exact_squares():
    assert sqrt_down(Fraction(4), -20) == sqrt_up(Fraction(4), -20) == Dyadic(2)
    assert sqrt_down(Fraction(9, 4), -10).as_fraction() == Fraction(3, 2)


def test_str_is_exact_decimal():
    assert str(Dyadic(3, -2)) == "0.75"
    assert str(Dyadic(-1, -3)) == "-0.125"
    assert str(Dyadic(5)) == "5"
