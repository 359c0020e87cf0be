from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from bernstein_kit import calculus
from bernstein_kit.basis_core import BasisIndex, Interval, UNIT, bernstein, eval_closed_form
from bernstein_kit.poly_algebra import BernsteinPoly, monomial_derivative, monomial_eval, to_monomial

from conftest import interval_and_point


def test_multinomial():
    assert calculus.multinomial(4, 2, 1, 1) == 12
    assert calculus.multinomial(3, 3, 0, 0) == 1
    with pytest.raises(ValueError):
        calculus.multinomial(3, 2, 2)


@pytest.mark.parametrize("x", [F(0), F(1, 3), F(7, 8)])
def test_second_derivative_constant(x):
    assert calculus.derivative(BasisIndex(2, 1, 2), 2, x, UNIT) == -4


def test_derivative_examples():
    assert calculus.derivative(BasisIndex(2, 1, 2), 0, F(1, 2), UNIT) == F(1, 2)
    assert calculus.derivative(BasisIndex(1, 0, 1), 1, F(3), Interval(0, 4)) == F(-1, 4)
    assert calculus.derivative(BasisIndex(2, 1, 2), 3, F(1, 2), UNIT) == 0


def test_first_derivative_examples():
    assert calculus.derivative_first(BasisIndex(2, 1, 2), F(1, 2), UNIT) == 0
    assert calculus.derivative_first(BasisIndex(2, 2, 2), F(1, 2), UNIT) == 1
    iv = Interval(1, 3)
    assert calculus.derivative_first(BasisIndex(3, 0, 3), iv.a, iv) == F(-3, 2)


def test_recurrence_compose_examples():
    x = F(2, 7)
    idx = BasisIndex(2, 1, 2)
    assert calculus.recurrence_compose(idx, 1, x, UNIT) == 2 * x * (1 - x)
    assert calculus.recurrence_compose(idx, 0, x, UNIT) == eval_closed_form(idx, x, UNIT)
    assert calculus.recurrence_compose(idx, 2, F(1, 2), UNIT) == F(1, 2)
    with pytest.raises(ValueError):
        calculus.recurrence_compose(idx, 3, x, UNIT)


def test_product_identity_examples():
    assert calculus.product_identity(1, 1, 2, 2, 2, F(1, 2), UNIT) == F(1, 4) == bernstein(2, 2, F(1, 2))
    iv = Interval(1, 3)
    assert calculus.product_identity(0, 0, 0, 0, 1, F(5, 2), iv) == eval_closed_form(BasisIndex(1, 0, 0), F(5, 2), iv)
    assert calculus.product_identity(2, 1, 2, 1, 2, F(5, 2), iv) == 0


def _symbolic(idx, l, x, iv):
    unit = [0] * (idx.n + 1)
    unit[idx.k] = 1
    mono = to_monomial(BernsteinPoly(tuple(F(c) for c in unit), iv, idx.m))
    return monomial_eval(monomial_derivative(mono, l), x)


@given(interval_and_point(), st.integers(0, 7), st.data())
def test_derivative_matches_symbolic(ivx, n, data):
    iv, x = ivx
    k = data.draw(st.integers(0, n))
    m = data.draw(st.integers(n - 1, n + 2))
    l = data.draw(st.integers(0, n + 2))
    idx = BasisIndex(n, k, m)
    assert calculus.derivative(idx, l, x, iv) == _symbolic(idx, l, x, iv)


@given(interval_and_point(), st.integers(1, 7), st.data())
def test_first_derivative_two_term_form(ivx, n, data):
    iv, x = ivx
    idx = BasisIndex(n, data.draw(st.integers(0, n)), data.draw(st.integers(0, n + 2)))
    assert calculus.derivative_first(idx, x, iv) == calculus.derivative(idx, 1, x, iv)


def test_float_derivative_against_central_difference():
    iv = Interval(-2.0, 5.0)
    idx = BasisIndex(6, 2, 6)
    h = 1e-6
    for x in (-1.5, 0.25, 3.0):
        fd = (eval_closed_form(idx, x + h, iv) - eval_closed_form(idx, x - h, iv)) / (2 * h)
        assert calculus.derivative(idx, 1, x, iv) == pytest.approx(fd, rel=1e-6, abs=1e-9)


@given(interval_and_point(), st.integers(0, 7), st.data())
def test_recurrence_compose_any_split(ivx, n, data):
    iv, x = ivx
    idx = BasisIndex(n, data.draw(st.integers(0, n)), data.draw(st.integers(n - 1, n + 2)))
    v = data.draw(st.integers(0, n))
    assert calculus.recurrence_compose(idx, v, x, iv) == eval_closed_form(idx, x, iv)


@given(interval_and_point(), st.integers(0, 6), st.data())
def test_product_identity_property(ivx, n, data):
    iv, x = ivx
    k1 = data.draw(st.integers(0, n + 1))
    k2 = data.draw(st.integers(0, n + 1))
    m1 = data.draw(st.integers(-1, 6))
    m2 = data.draw(st.integers(-1, 6))
    got = calculus.product_identity(k1, k2, m1, m2, n, x, iv)
    if k1 + k2 <= n:
        assert got == eval_closed_form(BasisIndex(n, k1 + k2, m1 + m2), x, iv)
    else:
        assert got == 0
