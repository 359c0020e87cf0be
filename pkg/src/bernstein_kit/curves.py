"""Subdivision identities and Bezier curves over ``[a, b]``."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .basis_core import UNIT, BasisIndex, Interval, bernstein, eval_closed_form
from .errors import RangeError
from .scalar import Backend, Scalar, format_scalar, parse_scalar


def subdivision_identity(j: int, n: int, x: Scalar, y: Scalar, iv: Interval) -> Scalar:
    """``sum_{k=j}^{n} Y(k, j, k)(x) * Y(n, k, n-k)(y)``.

    On ``[0, 1]`` this equals ``B_j^n(x * y)``.  The mixed normalizations
    ``m = k`` and ``m = n - k`` make it fail on other intervals; see
    :func:`normalized_subdivision_identity` for the form that holds on every
    interval.
    """
    total = (x - iv.a) * 0
    for k in range(max(j, 0), n + 1):
        total += eval_closed_form(BasisIndex(k, j, k), x, iv) * eval_closed_form(BasisIndex(n, k, n - k), y, iv)
    return total


def normalized_product(x: Scalar, y: Scalar, iv: Interval) -> Scalar:
    """The point ``z`` with ``normalize(z) = normalize(x) * normalize(y)``."""
    return iv.from_unit(iv.normalize(x) * iv.normalize(y))


def normalized_subdivision_identity(j: int, n: int, x: Scalar, y: Scalar, iv: Interval) -> Scalar:
    """``sum_{k=j}^{n} B_j^k(x; a, b) * B_k^n(y; a, b)``; equals
    ``B_j^n(normalized_product(x, y))`` on any interval."""
    total = (x - iv.a) * 0
    for k in range(max(j, 0), n + 1):
        total += bernstein(k, j, x, iv) * bernstein(n, k, y, iv)
    return total


def affine_subdivision_identity(j: int, n: int, x: Scalar, y: Scalar) -> Scalar:
    """``sum_{k=0}^{j} B_{j-k}^{n-k}(x) B_k^n(y)``; equals ``B_j^n((1-y)x + y)``."""
    total = x * 0
    for k in range(0, min(j, n) + 1):
        total += bernstein(n - k, j - k, x, UNIT) * bernstein(n, k, y, UNIT)
    return total


def blend_subdivision_identity(j: int, n: int, x: Scalar, y: Scalar, z: Scalar) -> Scalar:
    """``sum_k (sum_{p+q=j} B_p^{n-k}(x) B_q^k(z)) B_k^n(y)``; equals
    ``B_j^n((1-y)x + y z)``."""
    total = x * 0
    for k in range(n + 1):
        inner = x * 0
        for p in range(0, j + 1):
            inner += bernstein(n - k, p, x, UNIT) * bernstein(k, j - p, z, UNIT)
        total += inner * bernstein(n, k, y, UNIT)
    return total


Point = tuple


@dataclass(frozen=True)
class BezierCurve:
    control_points: tuple
    interval: Interval = UNIT

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.control_points)
        if not pts:
            raise ValueError("a Bezier curve needs at least one control point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise ValueError(f"control points have mixed dimensions {sorted(dims)}")
        object.__setattr__(self, "control_points", pts)

    @property
    def degree(self) -> int:
        return len(self.control_points) - 1

    @property
    def dimension(self) -> int:
        return len(self.control_points[0])

    def to_json(self) -> dict:
        return {
            "a": format_scalar(self.interval.a),
            "b": format_scalar(self.interval.b),
            "points": [[format_scalar(c) for c in p] for p in self.control_points],
        }

    @classmethod
    def from_json(cls, data: dict, backend: Backend = Backend.RATIONAL) -> "BezierCurve":
        iv = Interval(parse_scalar(data.get("a", 0), backend), parse_scalar(data.get("b", 1), backend))
        pts = tuple(tuple(parse_scalar(c, backend) for c in p) for p in data["points"])
        return cls(pts, iv)


def bezier_eval(c: BezierCurve, x: Scalar) -> Point:
    """Evaluate by summing control points against the basis."""
    n = c.degree
    weights = [bernstein(n, k, x, c.interval) for k in range(n + 1)]
    return tuple(
        sum((w * p[d] for w, p in zip(weights, c.control_points)), weights[0] * 0)
        for d in range(c.dimension)
    )


def _lerp(p: Point, q: Point, s: Scalar) -> Point:
    return tuple((1 - s) * pi + s * qi for pi, qi in zip(p, q))


def de_casteljau(c: BezierCurve, x: Scalar) -> list[list[Point]]:
    """The full triangle of repeated linear interpolations at ``x``."""
    s = c.interval.normalize(x)
    rows = [list(c.control_points)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([_lerp(prev[i], prev[i + 1], s) for i in range(len(prev) - 1)])
    return rows


def de_casteljau_eval(c: BezierCurve, x: Scalar) -> Point:
    return de_casteljau(c, x)[-1][0]


def bezier_split(c: BezierCurve, x: Scalar, allow_degenerate: bool = False) -> tuple[BezierCurve, BezierCurve]:
    """Split at ``x`` into curves over ``[a, x]`` and ``[x, b]``.

    Splitting at an endpoint is rejected unless ``allow_degenerate``; then the
    empty side comes back as a degree-0 curve holding the endpoint.
    """
    iv = c.interval
    lo, hi = min(iv.a, iv.b), max(iv.a, iv.b)
    if not lo <= x <= hi:
        raise RangeError(f"split point {x} lies outside [{lo}, {hi}]")
    if x == iv.a or x == iv.b:
        if not allow_degenerate:
            raise RangeError(f"split point {x} is an endpoint; pass allow_degenerate=True to permit it")
        if x == iv.a:
            return BezierCurve((c.control_points[0],), iv), c
        return c, BezierCurve((c.control_points[-1],), iv)
    rows = de_casteljau(c, x)
    left = tuple(row[0] for row in rows)
    right = tuple(row[-1] for row in reversed(rows))
    return BezierCurve(left, Interval(iv.a, x)), BezierCurve(right, Interval(x, iv.b))


def sample_csv(c: BezierCurve, xs: Sequence[Scalar]) -> str:
    """CSV text with header ``x,p0,p1,...`` and one row per sample."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", *(f"p{d}" for d in range(c.dimension))])
    for x in xs:
        writer.writerow([format_scalar(x), *(format_scalar(v) for v in bezier_eval(c, x))])
    return buf.getvalue()
