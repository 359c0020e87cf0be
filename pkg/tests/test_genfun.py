from __future__ import annotations

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from bernstein_kit import genfun
from bernstein_kit.basis_core import BasisIndex, Interval, UNIT, basis_row, eval_closed_form
from bernstein_kit.errors import DivergenceError, RangeError

from conftest import interval_and_point


def test_exponential_form_examples():
    iv = Interval(1, 3)
    assert genfun.eval_exponential_form(0, 1, 0.7, iv, 0) == pytest.approx(math.exp(2 * 0.7))
    assert genfun.eval_exponential_form(1, 0.5, 1, UNIT, 1) == pytest.approx(0.8243606354, abs=1e-10)
    assert genfun.eval_exponential_form(2, 1, 1, iv, 2) == 0


def test_exponential_form_overflow():
    with pytest.raises(RangeError):
        genfun.eval_exponential_form(0, 0, 1000, Interval(0, 1), 0)


def test_double_sum_examples():
    assert genfun.eval_double_sum(0, 0.5, 1, UNIT, 1, 0) == pytest.approx(math.exp(0.5), rel=1e-15)
    iv = Interval(1, 3)
    expected = 0.5 * math.exp(1.5) / 4
    assert genfun.eval_exponential_form(1, 1.5, 1, iv, 2) == pytest.approx(expected, rel=1e-15)
    assert abs(genfun.eval_double_sum(1, 1.5, 1, iv, 2, 40) - expected) < 1e-10
    assert abs(genfun.eval_double_sum(0, 3, 2, iv, 1, 40) - 0.5) < 1e-10


def test_double_sum_rejects_divergent_intervals():
    with pytest.raises(DivergenceError):
        genfun.eval_double_sum(1, 1, 1, Interval(3, 1), 1, 10)
    with pytest.raises(DivergenceError):
        genfun.eval_double_sum(1, 1, 1, Interval(-2, 0), 1, 10)
    with pytest.raises(ValueError):
        genfun.eval_double_sum(1, 1, 1, UNIT, 0, 10)


def test_double_sum_tail_estimate_bounds_error():
    iv = Interval(1, 3)
    for j_max in (5, 10, 20):
        err = abs(genfun.eval_double_sum(2, 2, 0.5, iv, 2, j_max) - genfun.eval_exponential_form(2, 2, 0.5, iv, 2))
        assert err <= genfun.double_sum_tail_estimate(2, 2, 0.5, iv, 2, j_max) * 1.01


def test_taylor_examples():
    s = genfun.taylor_coefficients(1, F(1, 2), UNIT, 2, 2)
    assert list(s.coefficients) == [0, F(1, 2), F(1, 2)]
    assert s[2] == eval_closed_form(BasisIndex(2, 1, 2), F(1, 2), UNIT)
    iv = Interval(1, 3)
    assert list(genfun.taylor_coefficients(0, iv.b, iv, 0, 3).coefficients) == [1, 0, 0, 0]
    assert list(genfun.taylor_coefficients(3, F(2), iv, 3, 2).coefficients) == [0, 0, 0]


def test_truncated_series_evaluates_toward_exponential_form():
    iv = Interval(1, 3)
    s = genfun.taylor_coefficients(2, F(3, 2), iv, 2, 30)
    assert float(s.evaluate(F(1, 2))) == pytest.approx(genfun.eval_exponential_form(2, 1.5, 0.5, iv, 2), rel=1e-14)


def test_poly_genfun_examples():
    assert genfun.poly_genfun(2, F(1, 2), 1, UNIT) == 1
    assert genfun.poly_genfun(2, F(1, 2), 2, UNIT) == F(9, 4)
    iv = Interval(-2, 5)
    assert genfun.poly_genfun(3, iv.a, 5, iv) == 1


def test_exponential_specialization_is_unit_interval_form():
    assert genfun.exponential_specialization(2, 0.3, 1.2) == pytest.approx(
        genfun.eval_exponential_form(2, 0.3, 1.2, UNIT, 2)
    )


@given(interval_and_point(), st.integers(0, 6), st.integers(-2, 8))
def test_taylor_coefficients_are_basis_values(ivx, k, m):
    iv, x = ivx
    s = genfun.taylor_coefficients(k, x, iv, m, 8)
    for n in range(9):
        assert s[n] == eval_closed_form(BasisIndex(n, k, m), x, iv)


@given(interval_and_point(), st.integers(0, 8), st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_poly_genfun_matches_sum(ivx, n, t):
    iv, x = ivx
    assert genfun.poly_genfun(n, x, t, iv) == sum(v * t**k for k, v in enumerate(basis_row(n, x, iv)))
