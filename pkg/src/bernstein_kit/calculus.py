"""Derivatives of the basis functions and the recurrence/product identities
that come from differentiating the generating function in ``t``."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .basis_core import BasisIndex, Interval, eval_closed_form
from .scalar import Scalar


def multinomial(n: int, *parts: int) -> int:
    """``n! / (p1! p2! ...)`` for non-negative parts summing to ``n``."""
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"parts {parts} do not partition {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def derivative(idx: BasisIndex, l: int, x: Scalar, iv: Interval) -> Scalar:
    """``l``-th derivative in ``x`` of ``Y(n, k, m)``.

    Expands as a signed sum over ``j = 0..l`` of
    ``(n; n-l, l-j, j) * l! / (b-a)**j * Y(n-l, k-j, m-j)``.  Orders above the
    degree give zero, since the multinomial is undefined there.
    """
    n, k, m = idx
    if l < 0:
        raise ValueError("derivative order must be non-negative")
    zero = (x - iv.a) * 0
    if l > n or k < 0 or k > n:
        return zero
    width = iv.width()
    total = zero
    for j in range(l + 1):
        term = multinomial(n, n - l, l - j, j) * factorial(l) / width**j
        term = term * eval_closed_form(BasisIndex(n - l, k - j, m - j), x, iv)
        total = total + term if (l - j) % 2 == 0 else total - term
    return total


def derivative_first(idx: BasisIndex, x: Scalar, iv: Interval) -> Scalar:
    n, k, m = idx
    if n < 1:
        raise ValueError("the two-term derivative formula needs n >= 1")
    left = eval_closed_form(BasisIndex(n - 1, k - 1, m - 1), x, iv)
    right = eval_closed_form(BasisIndex(n - 1, k, m - 1), x, iv)
    return n * (left - right) / iv.width()


def recurrence_compose(idx: BasisIndex, v: int, x: Scalar, iv: Interval) -> Scalar:
    """Right-hand side of the split-degree recurrence.

    ``sum_{j=0}^{v} (b-a)**(v-j) * Y(v, j, v) * Y(n-v, k-j, m-j)``, which
    reproduces ``Y(n, k, m)`` for any ``0 <= v <= n``.
    """
    n, k, m = idx
    if not 0 <= v <= n:
        raise ValueError(f"split order must satisfy 0 <= v <= n, got v={v}, n={n}")
    width = iv.width()
    total = (x - iv.a) * 0
    for j in range(v + 1):
        total += (
            width ** (v - j)
            * eval_closed_form(BasisIndex(v, j, v), x, iv)
            * eval_closed_form(BasisIndex(n - v, k - j, m - j), x, iv)
        )
    return total


def product_identity(k1: int, k2: int, m1: int, m2: int, n: int, x: Scalar, iv: Interval) -> Scalar:
    """Convolution side of the product identity; equals ``Y(n, k1+k2, m1+m2)``."""
    if n < 0 or k1 < 0 or k2 < 0:
        raise ValueError("n, k1 and k2 must be non-negative")
    total = (x - iv.a) * 0
    for j in range(n + 1):
        total += (
            comb(n, j)
            * eval_closed_form(BasisIndex(j, k1, m1), x, iv)
            * eval_closed_form(BasisIndex(n - j, k2, m2), x, iv)
        )
    scale = Fraction(2) ** (k1 + k2 - n) * factorial(k1) * factorial(k2) / factorial(k1 + k2)
    return scale * total
