"""Generating functions of the basis and Taylor-coefficient extraction.

For fixed index ``k`` the exponential generating function in ``t`` is::

    f_k(x, t) = t**k * (x - a)**k * exp((b - x) * t) / ((b - a)**m * k!)
              = sum_n Y(n, k, m)(x) * t**n / n!

It can also be written as a double sum whose inner ``j``-series is the negative
binomial expansion of ``(b - a)**(-m)`` in powers of ``a / b``; that form only
converges for ``|a / b| < 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, factorial

from .basis_core import Interval
from .errors import DivergenceError, RangeError
from .scalar import Scalar


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of ``t**n / n!`` for ``n = 0..order``."""

    coefficients: tuple
    order: int

    def __post_init__(self):
        if len(self.coefficients) != self.order + 1:
            raise ValueError("a series of order N carries N + 1 coefficients")

    def __getitem__(self, n: int):
        return self.coefficients[n]

    def evaluate(self, t: Scalar) -> Scalar:
        return sum(c * t**n / factorial(n) for n, c in enumerate(self.coefficients))


def eval_exponential_form(k: int, x: float, t: float, iv: Interval, m: int) -> float:
    if k < 0:
        return 0.0
    x, t = float(x), float(t)
    a, b = float(iv.a), float(iv.b)
    try:
        growth = math.exp((b - x) * t)
    except OverflowError as exc:
        raise RangeError(f"exp({(b - x) * t}) overflows binary64") from exc
    return t**k * (x - a) ** k * growth / ((b - a) ** m * factorial(k))


def _check_convergent(iv: Interval) -> float:
    a, b = float(iv.a), float(iv.b)
    if b == 0:
        raise DivergenceError("the double-sum form needs b != 0")
    ratio = a / b
    if abs(ratio) >= 1:
        raise DivergenceError(f"the j-series diverges for |a/b| = {abs(ratio)} >= 1")
    return ratio


def eval_double_sum(k: int, x: float, t: float, iv: Interval, m: int, j_max: int) -> float:
    """Partial sum over ``j <= j_max`` of the double-sum generating function.

    Powers use the ``0**0 == 1`` convention, so ``a == 0`` leaves only ``j == 0``.
    """
    if m < 1:
        raise ValueError("the negative-binomial expansion needs m >= 1")
    if j_max < 0:
        raise ValueError("j_max must be non-negative")
    _check_convergent(iv)
    if k < 0:
        return 0.0
    x, t = float(x), float(t)
    a, b = float(iv.a), float(iv.b)
    try:
        growth = math.exp((b - x) * t)
    except OverflowError as exc:
        raise RangeError(f"exp({(b - x) * t}) overflows binary64") from exc
    total = 0.0
    for j in range(j_max + 1):
        neg_binom = comb(j + m - 1, j)
        for l in range(k + 1):
            total += (
                neg_binom
                * (-1) ** (k - l)
                * x**l
                * a ** (j + k - l)
                * b ** (-m - j)
                / (factorial(l) * factorial(k - l))
            )
    return total * t**k * growth


def double_sum_tail_estimate(k: int, x: float, t: float, iv: Interval, m: int, j_max: int) -> float:
    """Size of the neglected ``j > j_max`` terms, as a geometric-tail estimate.

    Uses ``C(j_max + m, j_max) * r**(j_max + 1) * b**(-m) / (1 - r)`` with
    ``r = |a / b|``, scaled by the ``j``-independent prefactor.
    """
    r = abs(_check_convergent(iv))
    b = abs(float(iv.b))
    x, t = float(x), float(t)
    a = abs(float(iv.a))
    inner = sum(abs(x) ** l * a ** (k - l) / (factorial(l) * factorial(k - l)) for l in range(k + 1))
    prefactor = abs(t) ** k * math.exp((float(iv.b) - x) * t) * inner
    return prefactor * comb(j_max + m, j_max) * r ** (j_max + 1) * b ** (-m) / (1 - r)


def taylor_coefficients(k: int, x: Scalar, iv: Interval, m: int, order: int) -> TruncatedSeries:
    """Expand the generating function to ``t**order`` and read off coefficients.

    The prefactor ``t**k * (x - a)**k / ((b - a)**m * k!)`` is multiplied into
    the Taylor series of ``exp((b - x) t)`` as a Cauchy product of ordinary
    power series; coefficient ``n`` of the result is then scaled by ``n!``.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    zero = (x - iv.a) * 0
    if k < 0:
        return TruncatedSeries(tuple(zero for _ in range(order + 1)), order)
    prefactor = [zero] * (order + 1)
    if k <= order:
        prefactor[k] = (x - iv.a) ** k / (iv.width() ** m * factorial(k))
    exp_series = [(iv.b - x) ** n / factorial(n) for n in range(order + 1)]
    coeffs = []
    for n in range(order + 1):
        ordinary = sum((prefactor[i] * exp_series[n - i] for i in range(n + 1)), zero)
        coeffs.append(ordinary * factorial(n))
    return TruncatedSeries(tuple(coeffs), order)


def poly_genfun(n: int, x: Scalar, t: Scalar, iv: Interval) -> Scalar:
    """``((b - x)/(b - a) + t (x - a)/(b - a))**n``, the ordinary generating
    function ``sum_k B_k^n(x) t**k`` in closed form."""
    return (iv.complement(x) + t * iv.normalize(x)) ** n


def exponential_specialization(k: int, x: float, t: float) -> float:
    """The ``[0, 1]`` form ``(x t)**k exp((1 - x) t) / k!``."""
    x, t = float(x), float(t)
    return (x * t) ** k * math.exp((1 - x) * t) / factorial(k)


__all__ = [
    "TruncatedSeries",
    "double_sum_tail_estimate",
    "eval_double_sum",
    "eval_exponential_form",
    "exponential_specialization",
    "poly_genfun",
    "taylor_coefficients",
]
