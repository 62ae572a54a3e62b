from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from doublehurwitz.errors import IncompatibleTruncation, OddIndex, ZeroArgument
from doublehurwitz.series import (LaurentSeries, bernoulli, exp_series, fmt_rational, inv_sigma_series,
                                  parse_rational, sigma_series)

from oracles import sympy_series_coeffs

z = sympy.Symbol("z")
nonzero = st.integers(-12, 12).filter(bool)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def assert_matches_sympy(series, expr, N, low=-1):
    ref = sympy_series_coeffs(expr, z, N)
    for k in range(low, N + 1):
        assert series.coefficient(k) == Fraction(int(ref[k].p), int(ref[k].q)), k


# -- basic series ----------------------------------------------------------------

def test_sigma_examples():
    s = sigma_series(1, 5)
    assert s.coefficient(1) == 1
    assert s.coefficient(3) == Fraction(1, 24)
    assert s.coefficient(5) == Fraction(1, 1920)
    assert sigma_series(3, 3).coefficient(1) == 3
    assert sigma_series(0, 6).is_zero()


@given(nonzero, st.integers(1, 12))
def test_sigma_matches_sympy(a, N):
    assert_matches_sympy(sigma_series(a, N), 2 * sympy.sinh(a * z / 2), N, low=0)


@given(nonzero, st.integers(1, 12))
def test_sigma_is_odd(a, N):
    assert sigma_series(-a, N) == sigma_series(a, N).scale(-1)
    assert all(k % 2 == 1 for k, _ in sigma_series(a, N).items())


@given(rationals, st.integers(0, 10))
def test_exp_matches_sympy(a, N):
    assert_matches_sympy(exp_series(a, N), sympy.exp(sympy.Rational(a.numerator, a.denominator) * z), N, low=0)


def test_inv_sigma_examples():
    s = inv_sigma_series(1, 3)
    assert s.coefficient(-1) == 1
    assert s.coefficient(1) == Fraction(-1, 24)
    assert s.coefficient(3) == Fraction(7, 5760)
    assert inv_sigma_series(4, 1).coefficient(-1) == Fraction(1, 4)


def test_inv_sigma_zero_argument():
    with pytest.raises(ZeroArgument):
        inv_sigma_series(0, 4)


@given(nonzero, st.integers(0, 12))
def test_inv_sigma_matches_sympy(a, N):
    assert_matches_sympy(inv_sigma_series(a, N), 1 / (2 * sympy.sinh(a * z / 2)), N)


@given(nonzero, st.integers(0, 12))
def test_inv_sigma_times_sigma_is_one(a, N):
    prod = sigma_series(a, N + 1) * inv_sigma_series(a, N)
    assert prod.equal_through(LaurentSeries.constant(1, N), N)


@given(nonzero, st.integers(0, 12))
def test_inv_sigma_agrees_with_generic_reciprocal(a, N):
    generic = sigma_series(a, N + 2).reciprocal()
    assert generic.equal_through(inv_sigma_series(a, N), N)


@given(st.integers(1, 9))
def test_inv_sigma_coefficients_alternate(j):
    s = inv_sigma_series(1, 2 * j + 1)
    for k in range(0, j + 1):
        c = s.coefficient(2 * k - 1)
        assert c != 0
        assert (c > 0) == (k % 2 == 0)


# -- Bernoulli numbers -------------------------------------------------------------

def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_odd_index():
    with pytest.raises(OddIndex):
        bernoulli(3)


@pytest.mark.parametrize("k", range(0, 42, 2))
def test_bernoulli_matches_sympy(k):
    ref = sympy.bernoulli(k)
    assert bernoulli(k) == Fraction(int(ref.p), int(ref.q))


# -- truncation bookkeeping ---------------------------------------------------------

def test_coefficient_beyond_order():
    s = sigma_series(1, 3)
    with pytest.raises(IncompatibleTruncation):
        s.coefficient(4)
    with pytest.raises(IncompatibleTruncation):
        s.truncate(5)


def test_product_order_tracks_pole():
    # z^-1 known through z^3 times (z + ...) known through z^5
    a = inv_sigma_series(1, 3)
    b = sigma_series(1, 5)
    assert (a * b).order == min(3 + 1, 5 - 1)


def test_equal_through_rejects_unknown_orders():
    with pytest.raises(IncompatibleTruncation):
        sigma_series(1, 3).equal_through(sigma_series(1, 7), 5)


@given(nonzero, nonzero, st.integers(0, 8))
def test_substitute_scale(a, b, N):
    assert sigma_series(a, N).substitute_scale(b) == sigma_series(a * b, N)


@given(st.lists(rationals, min_size=1, max_size=6), st.integers(-2, 2))
def test_json_round_trip(coeffs, start):
    s = LaurentSeries(coeffs, start)
    assert LaurentSeries.from_json(s.to_json()) == s


def test_text_rendering():
    assert inv_sigma_series(1, 1).to_text() == "z^-1 - 1/24*z + O(z^2)"
    assert LaurentSeries.zero(2).to_text() == "0 + O(z^3)"


@given(rationals)
def test_rational_format_round_trip(q):
    assert parse_rational(fmt_rational(q)) == q


# -- cyclic identity -------------------------------------------------------------------

@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30), st.integers(0, 15))
def test_cyclic_identity(a, b, c, N):
    s = lambda x: sigma_series(x, N)
    total = s(a - b) * s(c) + s(b - c) * s(a) + s(c - a) * s(b)
    assert total.equal_through(LaurentSeries.zero(N), N)


def test_cyclic_identity_example():
    N = 25
    s = lambda x: sigma_series(x, N)
    assert (s(2) * s(2) + s(1) * s(5) + s(-3) * s(3)).equal_through(LaurentSeries.zero(N), N)
