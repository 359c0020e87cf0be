"""Generalized Bernstein basis functions on an arbitrary interval.

The basis function of degree ``n``, index ``k`` and normalization exponent
``m`` on ``[a, b]`` is::

    Y(n, k, m)(x) = C(n, k) * (x - a)**k * (b - x)**(n - k) / (b - a)**m

With ``m == n`` this is the usual Bernstein basis ``B_k^n(x; a, b)``.  For any
other ``m`` the values are scaled by ``(b - a)**(n - m)``.  Indices outside
``0..n`` evaluate to zero, which several derivative and product identities rely
on.

Floats: binomials come from ``math.comb`` as exact integers and are converted on
use, so degrees up to 1029 evaluate without overflow; beyond that the central
binomials exceed binary64 and ``OverflowError`` is raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .scalar import Scalar, to_exact


def _as_number(value):
    if isinstance(value, float):
        return value
    return to_exact(value)


@dataclass(frozen=True)
class Interval:
    """The domain ``[a, b]``; ``a`` and ``b`` may be any reals with ``a != b``.

    Integers and ``"p/q"`` strings are stored as ``Fraction`` so that integer
    endpoints never trigger true division into floats.
    """

    a: Scalar
    b: Scalar

    def __post_init__(self):
        object.__setattr__(self, "a", _as_number(self.a))
        object.__setattr__(self, "b", _as_number(self.b))
        if self.a == self.b:
            raise ValueError(f"degenerate interval: a == b == {self.a}")

    def width(self) -> Scalar:
        return self.b - self.a

    def normalize(self, x: Scalar) -> Scalar:
        """Map ``a -> 0`` and ``b -> 1``."""
        return (x - self.a) / (self.b - self.a)

    def complement(self, x: Scalar) -> Scalar:
        """``(b - x) / (b - a)``, i.e. ``1 - normalize(x)``."""
        return (self.b - x) / (self.b - self.a)

    def from_unit(self, s: Scalar) -> Scalar:
        return self.a + (self.b - self.a) * s

    def reflect(self, x: Scalar) -> Scalar:
        return self.a + self.b - x

    def contains(self, x: Scalar) -> bool:
        lo, hi = min(self.a, self.b), max(self.a, self.b)
        return lo <= x <= hi

    def exact(self) -> "Interval":
        return Interval(to_exact(self.a), to_exact(self.b))

    def as_float(self) -> "Interval":
        return Interval(float(self.a), float(self.b))

    def grid(self, count: int, inclusive: bool = True) -> list[Fraction]:
        """Rational grid points ``a + (b - a) * s`` with equispaced ``s``.

        Inclusive grids use ``s = i/(count-1)``; open grids use
        ``s = i/(count+1)`` for ``i = 1..count``.
        """
        a, b = to_exact(self.a), to_exact(self.b)
        if inclusive:
            if count < 2:
                raise ValueError("an inclusive grid needs at least 2 points")
            return [a + (b - a) * Fraction(i, count - 1) for i in range(count)]
        if count < 1:
            raise ValueError("an open grid needs at least 1 point")
        return [a + (b - a) * Fraction(i, count + 1) for i in range(1, count + 1)]


UNIT = Interval(0, 1)


class BasisIndex(NamedTuple):
    """Degree ``n``, index ``k`` and normalization exponent ``m``."""

    n: int
    k: int
    m: int

    @classmethod
    def standard(cls, n: int, k: int) -> "BasisIndex":
        return cls(n, k, n)


def _check_degree(n: int) -> None:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")


def _zero(x: Scalar, iv: Interval) -> Scalar:
    return (x - iv.a) * 0


def eval_closed_form(idx: BasisIndex, x: Scalar, iv: Interval) -> Scalar:
    n, k, m = idx
    _check_degree(n)
    if k < 0 or k > n:
        return _zero(x, iv)
    return comb(n, k) * (x - iv.a) ** k * (iv.b - x) ** (n - k) / iv.width() ** m


def bernstein(n: int, k: int, x: Scalar, iv: Interval = UNIT) -> Scalar:
    """Shorthand for the ``m == n`` basis function."""
    return eval_closed_form(BasisIndex(n, k, n), x, iv)


def eval_recursive(idx: BasisIndex, x: Scalar, iv: Interval) -> Scalar:
    """Evaluate by the two-term recurrence, building the triangle bottom-up.

    Row ``d`` holds ``Y(d, j, m - n + d)``; the base is ``Y(0, 0, m - n)``,
    which equals ``(b - a)**(n - m)``.
    """
    n, k, m = idx
    _check_degree(n)
    if k < 0 or k > n:
        return _zero(x, iv)
    xi = iv.normalize(x)
    eta = iv.complement(x)
    row = [iv.width() ** (n - m) + _zero(x, iv)]
    for d in range(1, n + 1):
        nxt = [eta * row[0]]
        for j in range(1, d):
            nxt.append(xi * row[j - 1] + eta * row[j])
        nxt.append(xi * row[d - 1])
        row = nxt
    return row[k]


def alternating_sum(n: int, x: Scalar, iv: Interval) -> Scalar:
    """Closed form of ``sum_k (-1)**k * Y(n, k, n)(x)``."""
    _check_degree(n)
    return ((iv.a + iv.b - 2 * x) / iv.width()) ** n


def symmetry_partner(idx: BasisIndex, x: Scalar, iv: Interval) -> Scalar:
    """``Y(n, n - k, m)`` evaluated at the reflected point ``a + b - x``."""
    n, k, m = idx
    return eval_closed_form(BasisIndex(n, n - k, m), iv.reflect(x), iv)


def elevate_basis(idx: BasisIndex, x: Scalar, iv: Interval) -> tuple[Scalar, Scalar]:
    """Split ``B_k^n`` into its two degree-``n+1`` pieces.

    Returns ``((k+1)/(n+1) * B_{k+1}^{n+1}(x), (n+1-k)/(n+1) * B_k^{n+1}(x))``;
    their sum is ``B_k^n(x)``.
    """
    n, k, m = idx
    if m != n:
        raise ValueError("degree elevation of a basis function requires m == n")
    up = BasisIndex(n + 1, k + 1, n + 1)
    same = BasisIndex(n + 1, k, n + 1)
    return (
        Fraction(k + 1, n + 1) * eval_closed_form(up, x, iv),
        Fraction(n + 1 - k, n + 1) * eval_closed_form(same, x, iv),
    )


def basis_row(n: int, x: Scalar, iv: Interval, m: int | None = None) -> list[Scalar]:
    """All ``n + 1`` basis values at ``x``."""
    m = n if m is None else m
    return [eval_closed_form(BasisIndex(n, k, m), x, iv) for k in range(n + 1)]
