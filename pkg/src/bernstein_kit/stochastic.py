"""Probabilistic reading of the basis: binomial pmf, moments, Poisson limit,
and Szasz-Mirakjan type basis functions parameterized through
``xi = (x - a)/(b - a)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .basis_core import BasisIndex, Interval, eval_closed_form
from .errors import RangeError
from .scalar import Scalar

# above this index the direct power/factorial form is replaced by log space
_LOG_SPACE_INDEX = 30


def _check_in_interval(x: Scalar, iv: Interval) -> None:
    if not iv.contains(x):
        raise RangeError(f"x = {x} lies outside [{iv.a}, {iv.b}]")


def binomial_pmf(n: int, x: Scalar, iv: Interval) -> list[Scalar]:
    """``(Y(n,0,n)(x), ..., Y(n,n,n)(x))``: success probability ``xi`` in ``n`` trials."""
    if n < 0:
        raise ValueError("number of trials must be non-negative")
    _check_in_interval(x, iv)
    return [eval_closed_form(BasisIndex(n, k, n), x, iv) for k in range(n + 1)]


def mean_variance(n: int, x: Scalar, iv: Interval) -> tuple[Scalar, Scalar]:
    """Closed-form mean ``n xi`` and variance ``n (x-a)(b-x)/(b-a)**2``."""
    _check_in_interval(x, iv)
    mean = n * iv.normalize(x)
    variance = n * (x - iv.a) * (iv.b - x) / iv.width() ** 2
    return mean, variance


def moments_from_pmf(pmf: list[Scalar]) -> tuple[Scalar, Scalar]:
    mean = sum(k * p for k, p in enumerate(pmf))
    second = sum(k * k * p for k, p in enumerate(pmf))
    return mean, second - mean * mean


def poisson_pmf(mu: float, k: int) -> float:
    if k < 0:
        return 0.0
    if mu == 0:
        return 1.0 if k == 0 else 0.0
    return math.exp(k * math.log(mu) - mu - math.lgamma(k + 1))


def _binomial_pmf_float(n: int, k: int, p: float) -> float:
    if k < 0 or k > n:
        return 0.0
    if p == 0.0:
        return 1.0 if k == 0 else 0.0
    if p == 1.0:
        return 1.0 if k == n else 0.0
    log_c = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    return math.exp(log_c + k * math.log(p) + (n - k) * math.log1p(-p))


def poisson_limit_error(n: int, mu: Scalar, k: int, iv: Interval) -> float:
    """``|Y(n, k, n)(a + (b-a) mu/n) - mu**k e**(-mu)/k!|``.

    Rational ``mu`` evaluates the binomial side exactly before rounding once;
    float ``mu`` uses log space so large ``n`` stays accurate.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if mu < 0 or mu > n:
        raise RangeError(f"mu = {mu} must satisfy 0 <= mu <= n = {n}")
    if isinstance(mu, float):
        iv = iv.as_float()
        binom = _binomial_pmf_float(n, k, float(iv.normalize(iv.width() * mu / n + iv.a)))
    else:
        iv = iv.exact()
        x = iv.width() * Fraction(mu) / n + iv.a
        binom = float(eval_closed_form(BasisIndex(n, k, n), x, iv))
    return abs(binom - poisson_pmf(float(mu), k))


@dataclass(frozen=True)
class SzaszBasisParams:
    n: int
    interval: Interval

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("the Szasz parameter n must be a positive integer")

    def rate(self, x: Scalar) -> Scalar:
        """``n * xi``; the Poisson mean at ``x``."""
        xi = self.interval.normalize(x)
        if xi < 0:
            raise RangeError(f"x = {x} lies below a = {self.interval.a}")
        return self.n * xi


def szasz_basis(p: SzaszBasisParams, i: int, x: Scalar) -> float:
    """``(n xi)**i exp(-n xi) / i!`` evaluated in binary64."""
    lam = float(p.rate(x))
    if i < 0:
        return 0.0
    if lam == 0.0:
        return 1.0 if i == 0 else 0.0
    if i > _LOG_SPACE_INDEX or lam > 700:
        return math.exp(i * math.log(lam) - lam - math.lgamma(i + 1))
    return lam**i * math.exp(-lam) / factorial(i)


def szasz_genfun_partial(p: SzaszBasisParams, x: Scalar, t: float, terms: int) -> float:
    """``sum_{i<terms} f_i(x) t**i``; converges to ``exp((t - 1) n xi)``."""
    return math.fsum(szasz_basis(p, i, x) * t**i for i in range(terms))


def szasz_genfun(p: SzaszBasisParams, x: Scalar, t: float) -> float:
    return math.exp((t - 1) * float(p.rate(x)))

