"""Pointwise orthogonality of weighted derivative pairings.

A family ``f_0, f_1, ...`` with ordinary generating function
``A_t(x) = sum_i f_i(x) t**i`` is dual to a weight sequence ``w_k(x)`` when::

    sum_k w_k(x) * D^k A_t(x) * D^k A_z(x) = A_{tz}(x)        (D = d/dx)

and then ``sum_k w_k D^k f_i D^k f_j = delta_ij f_i``.

Both families here depend on ``x`` only through ``xi = (x - a)/(b - a)``, and
after substituting ``t = 1 + u`` their generating functions take the form
``A_{1+u} = F(u * xi)`` for a fixed power series ``F(s) = sum_p alpha_p s**p``:

* Bernstein, ``A_t = (eta + t xi)**n``  ->  ``F(s) = (1 + s)**n``
* Szasz,     ``A_t = exp((t - 1) n xi)`` ->  ``F(s) = exp(n s)``

That turns the premise into polynomial identities in ``xi`` for every
coefficient of ``u**p v**q``, which :func:`derive_weights` solves exactly.
Weights are stored as polynomials in ``xi`` with rational coefficients.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .basis_core import BasisIndex, Interval, bernstein
from .calculus import derivative
from .errors import InconsistentSystem, TruncationError
from .scalar import Scalar, format_scalar, to_exact
from .stochastic import SzaszBasisParams, szasz_basis

BERNSTEIN = "bernstein"
SZASZ = "szasz"


@dataclass(frozen=True)
class FunctionFamily:
    """Either the degree-``n`` Bernstein basis or the Szasz-Mirakjan type basis.

    For ``szasz`` the index range is ``0..max_index`` and derivative sums are
    cut at order ``truncation``.
    """

    kind: str
    n: int
    interval: Interval
    truncation: int | None = None
    max_index: int | None = None

    def __post_init__(self):
        if self.kind not in (BERNSTEIN, SZASZ):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == SZASZ and (self.truncation is None or self.max_index is None):
            raise ValueError("a szasz family needs truncation and max_index")
        if self.n < 0 or (self.kind == SZASZ and self.n < 1):
            raise ValueError(f"invalid family parameter n={self.n}")

    @classmethod
    def bernstein(cls, n: int, iv: Interval) -> "FunctionFamily":
        return cls(BERNSTEIN, n, iv)

    @classmethod
    def szasz(cls, n: int, iv: Interval, truncation: int = 80, max_index: int = 8) -> "FunctionFamily":
        return cls(SZASZ, n, iv, truncation, max_index)

    @property
    def indices(self) -> range:
        return range(self.n + 1) if self.kind == BERNSTEIN else range(self.max_index + 1)

    @property
    def order(self) -> int:
        """Highest derivative order entering the pairing sum."""
        return self.n if self.kind == BERNSTEIN else self.truncation

    def value(self, i: int, x: Scalar) -> Scalar:
        if self.kind == BERNSTEIN:
            return bernstein(self.n, i, x, self.interval)
        return szasz_basis(SzaszBasisParams(self.n, self.interval), i, x)

    def derivatives(self, i: int, x: Scalar, order: int) -> list[Scalar]:
        """``[D^0 f_i(x), ..., D^order f_i(x)]``, exact for Bernstein."""
        if self.kind == BERNSTEIN:
            idx = BasisIndex(self.n, i, self.n)
            return [derivative(idx, k, x, self.interval) for k in range(order + 1)]
        # D f_i = n/(b-a) * (f_{i-1} - f_i), hence a k-th backward difference in i
        values = [self.value(r, x) for r in range(i + 1)]
        rate = self.n / float(self.interval.width())
        out = []
        for k in range(order + 1):
            diff = sum((-1) ** (k - r) * comb(k, r) * values[i - r] for r in range(min(k, i) + 1))
            out.append(rate**k * diff)
        return out

    def profile(self, p: int) -> Fraction:
        """Coefficient ``alpha_p`` of ``s**p`` in ``F`` with ``A_{1+u} = F(u xi)``."""
        if p < 0:
            return Fraction(0)
        if self.kind == BERNSTEIN:
            return Fraction(comb(self.n, p))
        return Fraction(self.n**p, factorial(p))

    def generating_function(self, x: Scalar, t: Scalar) -> Scalar:
        """Closed form of ``A_t(x)``; Szasz is evaluated in binary64."""
        iv = self.interval
        if self.kind == BERNSTEIN:
            return (iv.complement(x) + t * iv.normalize(x)) ** self.n
        return math.exp((float(t) - 1) * self.n * float(iv.normalize(x)))

    def describe(self) -> dict:
        out = {"kind": self.kind, "n": self.n, "a": format_scalar(self.interval.a), "b": format_scalar(self.interval.b)}
        if self.kind == SZASZ:
            out["truncation"] = self.truncation
            out["max_index"] = self.max_index
        return out


# polynomials in xi: index s holds the coefficient of xi**s

def _padd(p: list, q: Sequence) -> list:
    if len(q) > len(p):
        p = p + [Fraction(0)] * (len(q) - len(p))
    return [c + (q[i] if i < len(q) else 0) for i, c in enumerate(p)]


def _pscale_shift(p: Sequence, scale: Fraction, shift: int) -> list:
    return [Fraction(0)] * shift + [c * scale for c in p]


def _ptrim(p: Sequence) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _pmul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _ppow(p: Sequence, e: int) -> list:
    out = [Fraction(1)]
    for _ in range(e):
        out = _pmul(out, p)
    return out


def _horner(p: Sequence, xi: Scalar) -> Scalar:
    total = xi * 0
    for c in reversed(p):
        total = total * xi + c
    return total


@dataclass(frozen=True)
class WeightSequence:
    """``w_k(x) = sum_s terms[k][s] * xi(x)**s`` for ``k < len(terms)``."""

    label: str
    terms: tuple
    interval: Interval

    def __len__(self) -> int:
        return len(self.terms)

    def __call__(self, k: int, x: Scalar) -> Scalar:
        if k >= len(self.terms):
            raise IndexError(f"weight w_{k} is not available (sequence has {len(self.terms)} terms)")
        return _horner(self.terms[k], self.interval.normalize(x))

    @classmethod
    def zero(cls, length: int, iv: Interval) -> "WeightSequence":
        return cls("zero", tuple(() for _ in range(length)), iv)

    def closed_form(self, k: int) -> str:
        """Recognize ``c * ((x-a)(b-x))**k`` or ``c * xi**k``; else list the xi-polynomial."""
        poly = _ptrim(self.terms[k])
        if not poly:
            return "0"
        if k == 0 and len(poly) == 1:
            return str(poly[0])
        width = to_exact(self.interval.width())
        bump = _ptrim(_ppow([Fraction(0), Fraction(1), Fraction(-1)], k))
        c = poly[k] if len(poly) > k else Fraction(0)
        if c != 0 and _ptrim(_pscale_shift(bump, c, 0)) == poly:
            return f"{c / width ** (2 * k)} * ((x-a)(b-x))^{k}"
        if c != 0 and len(poly) == k + 1 and all(v == 0 for v in poly[:k]):
            return f"{c} * xi^{k}"
        return " + ".join(f"{v} * xi^{s}" for s, v in enumerate(poly) if v != 0)

    def describe(self, shown: int = 8) -> dict:
        """Label, term count and closed forms of the first ``shown`` weights."""
        count = len(self.terms)
        return {
            "label": self.label,
            "count": count,
            "terms": [f"w_{k} = {self.closed_form(k)}" for k in range(min(shown, count))],
        }


def _derivative_coefficient(fam: FunctionFamily, p: int, k: int, inv_width: Fraction) -> tuple[Fraction, int]:
    """``D^k`` of the ``u**p`` coefficient ``alpha_p xi**p``: (constant, xi power)."""
    if p < k:
        return Fraction(0), 0
    return fam.profile(p) * Fraction(factorial(p), factorial(p - k)) * inv_width**k, p - k


def _lhs_term(fam: FunctionFamily, weight: Sequence, p: int, q: int, k: int, inv_width: Fraction) -> list:
    cp, ep = _derivative_coefficient(fam, p, k, inv_width)
    cq, eq = _derivative_coefficient(fam, q, k, inv_width)
    if cp == 0 or cq == 0:
        return []
    return _pscale_shift(weight, cp * cq, ep + eq)


def _rhs(fam: FunctionFamily, p: int, q: int) -> list:
    """Coefficient of ``u**p v**q`` in ``F((u + v + uv) xi)`` as a xi-polynomial."""
    out: list = []
    for l in range(min(p, q) + 1):
        r = p + q - l
        c = fam.profile(r) * Fraction(factorial(r), factorial(p - l) * factorial(q - l) * factorial(l))
        if c:
            out = _padd(out, _pscale_shift([Fraction(1)], c, r))
    return out


def derive_weights(fam: FunctionFamily, max_k: int, check_order: int | None = None) -> WeightSequence:
    """Solve the duality premise for ``w_0..w_max_k`` by coefficient matching.

    The diagonal coefficients ``u**k v**k`` form a triangular system in the
    unknown weights.  Every coefficient with ``p, q <= check_order`` (default
    ``min(max_k, 10)``) is then checked; any mismatch raises
    ``InconsistentSystem``.  Where the family's ``k``-th derivatives vanish
    identically the weight is free and set to zero.
    """
    if max_k < 0:
        raise ValueError("max_k must be non-negative")
    iv = fam.interval.exact()
    fam = FunctionFamily(fam.kind, fam.n, iv, fam.truncation, fam.max_index)
    inv_width = 1 / to_exact(iv.width())
    weights: list[list] = []
    for k in range(max_k + 1):
        residual = _rhs(fam, k, k)
        for j, w in enumerate(weights):
            residual = _padd(residual, [-c for c in _lhs_term(fam, w, k, k, j, inv_width)])
        lead, shift = _derivative_coefficient(fam, k, k, inv_width)
        if lead == 0:
            if _ptrim(residual):
                raise InconsistentSystem(f"u^{k} v^{k} coefficient cannot be matched: D^{k} A vanishes")
            weights.append([])
            continue
        assert shift == 0
        weights.append(list(_ptrim([c / (lead * lead) for c in residual])))
    bound = min(max_k, 10) if check_order is None else min(check_order, max_k)
    for p in range(bound + 1):
        for q in range(bound + 1):
            lhs: list = []
            for j in range(min(p, q) + 1):
                lhs = _padd(lhs, _lhs_term(fam, weights[j], p, q, j, inv_width))
            if _ptrim(lhs) != _ptrim(_rhs(fam, p, q)):
                raise InconsistentSystem(f"coefficient of u^{p} v^{q} does not match")
    return WeightSequence(f"derived/{fam.kind}", tuple(_ptrim(w) for w in weights), iv)


def published_weights(fam: FunctionFamily, max_k: int | None = None) -> WeightSequence:
    """The weights proposed for each family as published.

    Bernstein: ``w_k = Y(n, k, n)(x) = C(n,k) xi**k (1 - xi)**(n-k)``.
    Szasz: ``w_k = xi**k / (n**k k!)``.
    """
    iv = fam.interval.exact()
    if fam.kind == BERNSTEIN:
        one_minus = [Fraction(1), Fraction(-1)]
        terms = tuple(
            _ptrim(_pscale_shift(_ppow(one_minus, fam.n - k), Fraction(comb(fam.n, k)), k))
            for k in range(fam.n + 1)
        )
        return WeightSequence("published/bernstein", terms, iv)
    max_k = fam.truncation if max_k is None else max_k
    terms = tuple(_ptrim(_pscale_shift([Fraction(1)], Fraction(1, fam.n**k * factorial(k)), k)) for k in range(max_k + 1))
    return WeightSequence("published/szasz", terms, iv)


def _derivative_table(fam: FunctionFamily, x: Scalar) -> list[list[Scalar]]:
    return [fam.derivatives(i, x, fam.order) for i in fam.indices]


def tail_estimate(fam: FunctionFamily, w: WeightSequence, x: Scalar, table=None) -> Scalar:
    """``|w_K(x)| * max_i |D^K f_i(x)|**2`` at the truncation order ``K``."""
    table = _derivative_table(fam, x) if table is None else table
    k = fam.order
    return abs(w(k, x)) * max(abs(row[k]) for row in table) ** 2


def gram_matrix(fam: FunctionFamily, w: WeightSequence, x: Scalar, tol: Scalar | None = None) -> list[list[Scalar]]:
    """Entries ``sum_{k<=K} w_k(x) D^k f_i(x) D^k f_j(x)``.

    ``K`` is the degree for Bernstein (exact, finite sum) and the truncation
    order for Szasz.  With ``tol`` given, a Szasz tail estimate above
    ``tol / 10`` raises ``TruncationError``.
    """
    if len(w) < fam.order + 1:
        raise ValueError(f"need weights w_0..w_{fam.order}, got {len(w)} terms")
    table = _derivative_table(fam, x)
    if fam.kind == SZASZ and tol is not None:
        tail = tail_estimate(fam, w, x, table)
        if tail > tol / 10:
            raise TruncationError(f"tail estimate {tail} exceeds tol/10 = {tol / 10}")
    weights = [w(k, x) for k in range(fam.order + 1)]
    size = len(table)
    zero = weights[0] * 0
    out = [[zero] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            total = zero
            for k, wk in enumerate(weights):
                total += wk * table[i][k] * table[j][k]
            out[i][j] = out[j][i] = total
    return out


@dataclass
class PointReport:
    x: Scalar
    max_offdiag: Scalar | None
    max_diag_error: Scalar | None
    tail_estimate: Scalar | None
    passed: bool
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "x": format_scalar(self.x),
            "max_offdiag": None if self.max_offdiag is None else format_scalar(self.max_offdiag),
            "max_diag_error": None if self.max_diag_error is None else format_scalar(self.max_diag_error),
            "verdict": "PASS" if self.passed else "FAIL",
        }
        if self.tail_estimate is not None:
            out["tail_estimate"] = format_scalar(self.tail_estimate)
        if self.error:
            out["error"] = self.error
        return out


@dataclass
class OrthogonalityReport:
    family: dict
    weights: dict
    tol: Scalar
    points: list[PointReport]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    @property
    def max_error(self) -> Scalar:
        errs = [e for p in self.points for e in (p.max_offdiag, p.max_diag_error) if e is not None]
        return max(errs) if errs else 0

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "weights": self.weights,
            "tol": format_scalar(self.tol),
            "grid": [format_scalar(p.x) for p in self.points],
            "points": [p.to_json() for p in self.points],
            "max_error": format_scalar(self.max_error),
            "verdict": "PASS" if self.passed else "FAIL",
        }


def _check_point(fam: FunctionFamily, w: WeightSequence, x: Scalar, tol: Scalar) -> PointReport:
    tail = None
    try:
        if fam.kind == SZASZ:
            tail = tail_estimate(fam, w, x)
        gram = gram_matrix(fam, w, x, tol if fam.kind == SZASZ else None)
    except (TruncationError, IndexError, ValueError) as exc:
        return PointReport(x, None, None, tail, False, str(exc))
    values = [fam.value(i, x) for i in fam.indices]
    size = len(values)
    zero = values[0] * 0
    offdiag = max((abs(gram[i][j]) for i in range(size) for j in range(size) if i != j), default=zero)
    diag = max(abs(gram[i][i] - values[i]) for i in range(size))
    return PointReport(x, offdiag, diag, tail, offdiag <= tol and diag <= tol)


def verify_orthogonality(
    fam: FunctionFamily,
    w: WeightSequence,
    grid: Sequence[Scalar],
    tol: Scalar = 0,
    workers: int | None = None,
) -> OrthogonalityReport:
    """Check the pairing identity at every grid point.

    Failures are recorded in the report rather than raised.  With ``workers``
    the points are spread over a thread pool; results keep grid order.
    """
    check: Callable = lambda x: _check_point(fam, w, x, tol)  # noqa: E731
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(check, grid))
    else:
        points = [check(x) for x in grid]
    return OrthogonalityReport(fam.describe(), w.describe(), tol, points)
