"""Polynomials in Bernstein form on ``[a, b]``.

``BernsteinPoly(coeffs, interval, m)`` is ``sum_k c_k * Y(n, k, m)(x)`` with
``n = len(coeffs) - 1``.  Multiplication and division by powers of
``xi = (x - a)/(b - a)`` and ``eta = (b - x)/(b - a)`` and degree elevation act
on the coefficients directly; ``to_monomial``/``from_monomial`` convert to and
from ordinary powers of ``x`` and serve as the independent check on all of
them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .basis_core import BasisIndex, Interval, eval_closed_form
from .errors import NotDivisible
from .scalar import Backend, Scalar, format_scalar, parse_scalar


@dataclass(frozen=True)
class BernsteinPoly:
    coeffs: tuple
    interval: Interval
    m: int | None = field(default=None)

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a Bernstein polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.m is None:
            object.__setattr__(self, "m", len(self.coeffs) - 1)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Scalar) -> Scalar:
        return evaluate(self, x)

    def normalized(self) -> "BernsteinPoly":
        """Same function with ``m == n``, via ``Y(n,k,m) = (b-a)**(n-m) Y(n,k,n)``."""
        n = self.degree
        if self.m == n:
            return self
        scale = self.interval.width() ** (n - self.m)
        return BernsteinPoly(tuple(c * scale for c in self.coeffs), self.interval, n)

    def to_json(self) -> dict:
        return {
            "a": format_scalar(self.interval.a),
            "b": format_scalar(self.interval.b),
            "m": self.m,
            "coeffs": [format_scalar(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict, backend: Backend = Backend.RATIONAL) -> "BernsteinPoly":
        iv = Interval(parse_scalar(data["a"], backend), parse_scalar(data["b"], backend))
        coeffs = tuple(parse_scalar(c, backend) for c in data["coeffs"])
        return cls(coeffs, iv, data.get("m"))


def evaluate(p: BernsteinPoly, x: Scalar) -> Scalar:
    n = p.degree
    total = (x - p.interval.a) * 0
    for k, c in enumerate(p.coeffs):
        total += c * eval_closed_form(BasisIndex(n, k, p.m), x, p.interval)
    return total


def _require_standard(p: BernsteinPoly) -> None:
    if p.m != p.degree:
        raise ValueError(f"operation requires m == n; got m={p.m}, n={p.degree} (use normalized())")


def _nonneg(power: int, name: str) -> None:
    if power < 0:
        raise ValueError(f"{name} must be non-negative, got {power}")


def multiply_by_xi_power(p: BernsteinPoly, d: int) -> BernsteinPoly:
    """``((x - a)/(b - a))**d * p`` in the degree ``n + d`` basis."""
    _require_standard(p)
    _nonneg(d, "d")
    n = p.degree
    zero = p.coeffs[0] * 0
    out = [zero] * (n + d + 1)
    for k, c in enumerate(p.coeffs):
        out[k + d] = c * Fraction(factorial(n) * factorial(k + d), factorial(k) * factorial(n + d))
    return BernsteinPoly(tuple(out), p.interval)


def multiply_by_eta_power(p: BernsteinPoly, d: int) -> BernsteinPoly:
    """``((b - x)/(b - a))**d * p`` in the degree ``n + d`` basis."""
    _require_standard(p)
    _nonneg(d, "d")
    n = p.degree
    zero = p.coeffs[0] * 0
    out = [zero] * (n + d + 1)
    for k, c in enumerate(p.coeffs):
        out[k] = c * Fraction(factorial(n) * factorial(n + d - k), factorial(n + d) * factorial(n - k))
    return BernsteinPoly(tuple(out), p.interval)


def divide_by_xi_power(p: BernsteinPoly, j: int) -> BernsteinPoly:
    """Exact quotient by ``((x - a)/(b - a))**j``.

    Raises ``NotDivisible`` unless ``c_0 = ... = c_{j-1} = 0``.
    """
    _require_standard(p)
    _nonneg(j, "j")
    n = p.degree
    if j > n:
        raise NotDivisible(f"cannot divide a degree-{n} polynomial by xi**{j}")
    bad = [k for k in range(j) if p.coeffs[k] != 0]
    if bad:
        raise NotDivisible(f"xi**{j} does not divide p: coefficient c_{bad[0]} = {p.coeffs[bad[0]]} is nonzero")
    out = tuple(
        p.coeffs[k] * Fraction(factorial(n) * factorial(k - j), factorial(k) * factorial(n - j))
        for k in range(j, n + 1)
    )
    return BernsteinPoly(out, p.interval)


def divide_by_eta_power(p: BernsteinPoly, j: int) -> BernsteinPoly:
    """Exact quotient by ``((b - x)/(b - a))**j``.

    Raises ``NotDivisible`` unless ``c_{n-j+1} = ... = c_n = 0``.
    """
    _require_standard(p)
    _nonneg(j, "j")
    n = p.degree
    if j > n:
        raise NotDivisible(f"cannot divide a degree-{n} polynomial by eta**{j}")
    bad = [k for k in range(n - j + 1, n + 1) if p.coeffs[k] != 0]
    if bad:
        raise NotDivisible(f"eta**{j} does not divide p: coefficient c_{bad[0]} = {p.coeffs[bad[0]]} is nonzero")
    out = tuple(
        p.coeffs[k] * Fraction(factorial(n) * factorial(n - j - k), factorial(n - k) * factorial(n - j))
        for k in range(n - j + 1)
    )
    return BernsteinPoly(out, p.interval)


def elevate(p: BernsteinPoly, times: int = 1) -> BernsteinPoly:
    """Re-express ``p`` in a basis ``times`` degrees higher.

    Each step sets ``c'_k = k/(n+1) c_{k-1} + (n+1-k)/(n+1) c_k``, a convex
    combination, so the coefficient range can only shrink.
    """
    _nonneg(times, "times")
    p = p.normalized()
    coeffs = list(p.coeffs)
    for _ in range(times):
        n = len(coeffs) - 1
        zero = coeffs[0] * 0
        padded = [zero, *coeffs, zero]
        coeffs = [
            Fraction(k, n + 1) * padded[k] + Fraction(n + 1 - k, n + 1) * padded[k + 1]
            for k in range(n + 2)
        ]
    return BernsteinPoly(tuple(coeffs), p.interval)


# dense monomial arithmetic: index i holds the coefficient of x**i

def _mul(p: Sequence, q: Sequence) -> list:
    zero = p[0] * 0
    out = [zero] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def _pow(p: Sequence, e: int) -> list:
    out = [p[0] * 0 + 1]
    for _ in range(e):
        out = _mul(out, p)
    return out


def to_monomial(p: BernsteinPoly) -> list:
    """Coefficients of ``1, x, x**2, ..., x**n`` (trailing zeros kept)."""
    a, b = p.interval.a, p.interval.b
    n = p.degree
    width_m = p.interval.width() ** p.m
    out = [a * 0] * (n + 1)
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        term = _mul(_pow([-a, a * 0 + 1], k), _pow([b, -(b * 0 + 1)], n - k))
        scale = c * comb(n, k) / width_m
        for i, t in enumerate(term):
            out[i] += scale * t
    return out


def from_monomial(seq: Sequence, iv: Interval, n: int | None = None, m: int | None = None) -> BernsteinPoly:
    """Bernstein coefficients of ``sum_i seq[i] x**i`` in degree ``n``.

    Substitutes ``x = a + (b - a) s`` to get powers of ``s``, then uses
    ``s**i = sum_{k>=i} C(k, i)/C(n, i) B_k^n``.
    """
    seq = list(seq)
    if n is None:
        n = len(seq) - 1
    while len(seq) > n + 1:
        if seq[-1] != 0:
            raise ValueError(f"monomial degree {len(seq) - 1} exceeds target degree {n}")
        seq.pop()
    zero = iv.a * 0
    seq = seq + [zero] * (n + 1 - len(seq))
    # coefficients in s after x = a + (b - a) s
    in_s = [zero] * (n + 1)
    line = [iv.a, iv.width()]
    for i, c in enumerate(seq):
        if c == 0:
            continue
        for r, t in enumerate(_pow(line, i)):
            in_s[r] += c * t
    coeffs = []
    for k in range(n + 1):
        coeffs.append(sum((in_s[i] * Fraction(comb(k, i), comb(n, i)) for i in range(k + 1)), zero))
    p = BernsteinPoly(tuple(coeffs), iv, n)
    if m is None or m == n:
        return p
    scale = iv.width() ** (m - n)
    return BernsteinPoly(tuple(c * scale for c in coeffs), iv, m)


def monomial_eval(seq: Sequence, x: Scalar) -> Scalar:
    total = x * 0
    for c in reversed(seq):
        total = total * x + c
    return total


def monomial_derivative(seq: Sequence, order: int = 1) -> list:
    seq = list(seq)
    for _ in range(order):
        if len(seq) <= 1:
            return [seq[0] * 0] if seq else []
        seq = [i * c for i, c in enumerate(seq)][1:]
    return seq
