"""Identity-verification suites behind ``bernstein-kit verify``.

Each suite compares two independent routes to the same quantity over grids of
degrees, indices, points and intervals and returns one :class:`IdentityResult`
per identity.  In the rational backend comparisons are exact and any nonzero
difference fails.  Checks that are inherently floating point (Poisson limit,
Szasz sums, series truncation, finite differences) run in binary64 with their
own fixed tolerances whatever the backend.

Results marked ``gating=False`` are archived observations: they are reported
with a verdict but do not affect the exit status.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import basis_core as bc
from . import calculus, curves, duality, genfun, poly_algebra, stochastic
from .basis_core import BasisIndex, Interval
from .scalar import Backend, Scalar, format_scalar

SUITE_NAMES = (
    "recurrence",
    "series",
    "derivatives",
    "subdivision",
    "product",
    "algebra",
    "elevation",
    "distribution",
    "orthogonality",
)

DEFAULT_MAX_N = 10
MAX_N_ENV = "BERNSTEIN_KIT_MAX_N"

TEST_INTERVALS = ((0, 1), (1, 3), (-2, 5))

FD_STEP = 1e-6
FD_TOL = 1e-5
SERIES_TOL = 1e-10
SZASZ_TOL = 1e-10
POISSON_LADDER = (100, 1000, 10000)
POISSON_CEILING = 5e-4


def default_max_n() -> int:
    return int(os.environ.get(MAX_N_ENV, DEFAULT_MAX_N))


@dataclass
class IdentityResult:
    name: str
    instances: int
    max_error: Scalar
    passed: bool
    gating: bool = True
    backend: str = "rational"
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "identity": self.name,
            "instances": self.instances,
            "max_error": format_scalar(self.max_error),
            "verdict": "PASS" if self.passed else "FAIL",
            "gating": self.gating,
            "backend": self.backend,
        }
        if self.details:
            out["details"] = self.details
        return out


@dataclass
class VerifyConfig:
    backend: Backend = Backend.RATIONAL
    max_n: int = DEFAULT_MAX_N
    tol: Scalar = 0
    grid: int = 11
    family: str = "both"
    weights: str = "derived"


class Tally:
    """Accumulates ``|lhs - rhs|`` over instances of one identity."""

    def __init__(self, name: str, cfg: VerifyConfig, *, tol=None, backend: str | None = None, gating: bool = True):
        self.name = name
        self.backend = backend or cfg.backend.value
        self.tol = cfg.tol if tol is None else tol
        self.exact = self.backend == Backend.RATIONAL.value and tol is None
        self.gating = gating
        self.count = 0
        self.max_error: Scalar = 0 if self.exact else 0.0
        self.failures = 0
        self.details: dict = {}

    def compare(self, lhs, rhs, scale=None) -> None:
        self.count += 1
        err = abs(lhs - rhs)
        if not self.exact:
            err = err / max(1.0, abs(float(rhs)) if scale is None else scale)
        if err > self.max_error:
            self.max_error = err
        if (err != 0) if self.exact else (err > self.tol):
            self.failures += 1

    def check(self, ok: bool) -> None:
        self.count += 1
        if not ok:
            self.failures += 1

    def result(self) -> IdentityResult:
        return IdentityResult(
            self.name, self.count, self.max_error, self.failures == 0, self.gating, self.backend, self.details
        )


def _intervals(cfg: VerifyConfig) -> list[Interval]:
    ivs = [Interval(a, b) for a, b in TEST_INTERVALS]
    return ivs if cfg.backend.exact else [iv.as_float() for iv in ivs]


def _points(iv: Interval, cfg: VerifyConfig, count: int | None = None, inclusive: bool = True) -> list[Scalar]:
    pts = iv.exact().grid(count or cfg.grid, inclusive)
    return [cfg.backend.coerce(p) for p in pts]


def suite_recurrence(cfg: VerifyConfig) -> list[IdentityResult]:
    rec = Tally("recurrence = closed form", cfg)
    sym = Tally("symmetry", cfg)
    scale = Tally("scaling law (b-a)^(n-m)", cfg)
    unity = Tally("partition of unity", cfg)
    alt = Tally("alternating sum closed form", cfg)
    corner = Tally("corner values (m = n)", cfg)
    nonneg = Tally("non-negativity on [a, b]", cfg)
    split = Tally("split-degree recurrence", cfg)
    for iv in _intervals(cfg):
        for x in _points(iv, cfg):
            for n in range(cfg.max_n + 1):
                row = bc.basis_row(n, x, iv)
                unity.compare(sum(row), 1)
                alt.compare(sum((-1) ** k * v for k, v in enumerate(row)), bc.alternating_sum(n, x, iv))
                for k in range(n + 1):
                    nonneg.check(row[k] >= 0)
                    for m in sorted({0, max(n - 1, 0), n, n + 1, n + 2}):
                        idx = BasisIndex(n, k, m)
                        closed = bc.eval_closed_form(idx, x, iv)
                        rec.compare(bc.eval_recursive(idx, x, iv), closed)
                        sym.compare(bc.symmetry_partner(idx, x, iv), closed)
                        scale.compare(closed, iv.width() ** (n - m) * row[k])
                    if n <= min(cfg.max_n, 8):
                        for m in (n, n + 1):
                            idx = BasisIndex(n, k, m)
                            closed = bc.eval_closed_form(idx, x, iv)
                            for v in range(n + 1):
                                split.compare(calculus.recurrence_compose(idx, v, x, iv), closed)
        for n in range(cfg.max_n + 1):
            for k in range(n + 1):
                corner.compare(bc.bernstein(n, k, iv.a, iv), 1 if k == 0 else 0)
                corner.compare(bc.bernstein(n, k, iv.b, iv), 1 if k == n else 0)
    return [t.result() for t in (rec, sym, scale, unity, alt, corner, nonneg, split)]


def suite_series(cfg: VerifyConfig) -> list[IdentityResult]:
    taylor = Tally("Taylor coefficients = basis values", cfg)
    ogf = Tally("polynomial generating function = sum B_k t^k", cfg)
    ogf_alt = Tally("generating function at t = -1 = alternating sum", cfg)
    double = Tally("double sum -> exponential form ([1,3], j_max = 40)", cfg, tol=SERIES_TOL, backend="float")
    ts = [cfg.backend.coerce(t) for t in (Fraction(-3, 2), Fraction(1, 3), 2)]
    for iv in _intervals(cfg):
        for x in _points(iv, cfg):
            for k in range(cfg.max_n + 1):
                for m in (k, k + 1, cfg.max_n):
                    series = genfun.taylor_coefficients(k, x, iv, m, cfg.max_n)
                    for n in range(cfg.max_n + 1):
                        taylor.compare(series[n], bc.eval_closed_form(BasisIndex(n, k, m), x, iv))
            for n in range(cfg.max_n + 1):
                row = bc.basis_row(n, x, iv)
                for t in ts:
                    ogf.compare(genfun.poly_genfun(n, x, t, iv), sum(v * t**k for k, v in enumerate(row)))
                ogf_alt.compare(genfun.poly_genfun(n, x, -1, iv), bc.alternating_sum(n, x, iv))
    iv = Interval(1.0, 3.0)
    for x in _points(Interval(1, 3), cfg, 5):
        for k in range(4):
            for m in (1, 2, 3):
                for t in (-1.0, 0.5, 1.0, 2.0):
                    exact = genfun.eval_exponential_form(k, x, t, iv, m)
                    double.compare(genfun.eval_double_sum(k, x, t, iv, m, 40), exact)
    return [taylor.result(), ogf.result(), ogf_alt.result(), double.result()]


def suite_derivatives(cfg: VerifyConfig) -> list[IdentityResult]:
    top = min(cfg.max_n, 8)
    symbolic = Tally("higher derivative formula = formal derivative of monomial form", cfg)
    first = Tally("two-term first derivative = general formula at l = 1", cfg)
    summed = Tally("sum over k of first derivatives = 0", cfg)
    fd = Tally("first derivative vs central difference (h = 1e-6)", cfg, tol=FD_TOL, backend="float")
    for iv in _intervals(cfg):
        xs = _points(iv, cfg)
        for n in range(top + 1):
            for m in (n, n + 1):
                for k in range(n + 1):
                    idx = BasisIndex(n, k, m)
                    unit = [0] * (n + 1)
                    unit[k] = 1
                    mono = poly_algebra.to_monomial(poly_algebra.BernsteinPoly(tuple(cfg.backend.coerce(c) for c in unit), iv, m))
                    for l in range(n + 3):
                        dmono = poly_algebra.monomial_derivative(mono, l)
                        for x in xs:
                            symbolic.compare(calculus.derivative(idx, l, x, iv), poly_algebra.monomial_eval(dmono, x))
                    if n >= 1:
                        for x in xs:
                            first.compare(calculus.derivative_first(idx, x, iv), calculus.derivative(idx, 1, x, iv))
            if n >= 1:
                for x in xs:
                    total = sum(calculus.derivative(BasisIndex(n, k, n), 1, x, iv) for k in range(n + 1))
                    summed.compare(total, 0)
        fiv = iv.as_float()
        fxs = [float(x) for x in iv.exact().grid(21, inclusive=False)]
        for n in range(top + 1):
            for k in range(n + 1):
                idx = BasisIndex(n, k, n)
                exact = [calculus.derivative(idx, 1, x, fiv) for x in fxs]
                scale_ = max(max(abs(d) for d in exact), 1e-300)
                for x, d in zip(fxs, exact):
                    h = FD_STEP
                    approx = (bc.eval_closed_form(idx, x + h, fiv) - bc.eval_closed_form(idx, x - h, fiv)) / (2 * h)
                    fd.compare(approx, d, scale=scale_)
    return [symbolic.result(), first.result(), summed.result(), fd.result()]


def _composition_study(cfg: VerifyConfig, top: int) -> tuple[IdentityResult, dict]:
    """Which normalization convention makes the composition identity hold where."""
    conventions: dict[str, Callable] = {
        "mixed m: Y_j^n(xy;n) = sum Y_j^k(x;k) Y_k^n(y;n-k)": (
            lambda j, n, x, y, iv: (
                bc.eval_closed_form(BasisIndex(n, j, n), x * y, iv),
                curves.subdivision_identity(j, n, x, y, iv),
            )
        ),
        "uniform m: B_j^n(xy) = sum B_j^k(x) B_k^n(y)": (
            lambda j, n, x, y, iv: (
                bc.bernstein(n, j, x * y, iv),
                curves.normalized_subdivision_identity(j, n, x, y, iv),
            )
        ),
        "normalized product: B_j^n(z) = sum B_j^k(x) B_k^n(y), xi(z) = xi(x) xi(y)": (
            lambda j, n, x, y, iv: (
                bc.bernstein(n, j, curves.normalized_product(x, y, iv), iv),
                curves.normalized_subdivision_identity(j, n, x, y, iv),
            )
        ),
    }
    study_intervals = [(0, 1), (0, 2), (1, 2), (1, 3), (-2, 5), (-1, 0)]
    table: dict = {}
    for label, fn in conventions.items():
        holds_on = []
        for a, b in study_intervals:
            iv = Interval(a, b)
            xs = iv.grid(5)
            ok = all(
                lhs == rhs
                for n in range(top + 1)
                for j in range(n + 1)
                for x in xs
                for y in xs
                for lhs, rhs in [fn(j, n, x, y, iv)]
            )
            if ok:
                holds_on.append(f"[{a},{b}]")
        table[label] = {"holds_on": holds_on, "tested": [f"[{a},{b}]" for a, b in study_intervals]}
    gate = Tally("normalized-product subdivision holds on every test interval", cfg)
    for iv in _intervals(cfg):
        xs = _points(iv, cfg, 6)
        for n in range(top + 1):
            for j in range(n + 1):
                for x in xs:
                    for y in xs:
                        gate.compare(
                            curves.normalized_subdivision_identity(j, n, x, y, iv),
                            bc.bernstein(n, j, curves.normalized_product(x, y, iv), iv),
                        )
    return gate.result(), table


def suite_subdivision(cfg: VerifyConfig) -> list[IdentityResult]:
    top = min(cfg.max_n, 8)
    remark_top = min(cfg.max_n, 6)
    unit = bc.UNIT if cfg.backend.exact else bc.UNIT.as_float()
    sub = Tally("subdivision B_j^n(xy) = sum B_j^k(x) B_k^n(y) on [0,1]", cfg)
    xs = _points(bc.UNIT, cfg)
    for n in range(top + 1):
        for j in range(n + 1):
            for x in xs:
                for y in xs:
                    sub.compare(curves.subdivision_identity(j, n, x, y, unit), bc.bernstein(n, j, x * y, unit))
    anchor = Tally("anchor: B_1^2(1/4) = 3/8 via subdivision", cfg)
    half = cfg.backend.coerce(Fraction(1, 2))
    anchor.compare(curves.subdivision_identity(1, 2, half, half, unit), cfg.backend.coerce(Fraction(3, 8)))
    affine = Tally("affine subdivision B_j^n((1-y)x + y)", cfg)
    blend = Tally("blend subdivision B_j^n((1-y)x + yz)", cfg)
    coarse = _points(bc.UNIT, cfg, 5)
    for n in range(remark_top + 1):
        for j in range(n + 1):
            for x in coarse:
                for y in coarse:
                    affine.compare(curves.affine_subdivision_identity(j, n, x, y), bc.bernstein(n, j, (1 - y) * x + y, unit))
                    for z in coarse:
                        blend.compare(
                            curves.blend_subdivision_identity(j, n, x, y, z),
                            bc.bernstein(n, j, (1 - y) * x + y * z, unit),
                        )
    gate, table = _composition_study(cfg, min(top, 5))
    archive = IdentityResult(
        "composition identity validity domain by normalization convention",
        sum(len(v["tested"]) for v in table.values()),
        0,
        True,
        gating=False,
        backend="rational",
        details=table,
    )
    bez = Tally("Bezier: basis sum = de Casteljau", cfg)
    split = Tally("Bezier split reproduces the curve", cfg)
    rng = random.Random(7)
    for iv in _intervals(cfg):
        for n in range(top + 1):
            pts = [tuple(cfg.backend.coerce(Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(2)) for _ in range(n + 1)]
            c = curves.BezierCurve(pts, iv)
            grid = _points(iv, cfg)
            for x in grid:
                for p, q in zip(curves.bezier_eval(c, x), curves.de_casteljau_eval(c, x)):
                    bez.compare(p, q)
            cut = _points(iv, cfg, 3)[1]
            left, right = curves.bezier_split(c, cut)
            for x in grid:
                piece = left if (x - cut) * (iv.b - iv.a) <= 0 else right
                for p, q in zip(curves.bezier_eval(piece, x), curves.bezier_eval(c, x)):
                    split.compare(p, q)
    return [sub.result(), anchor.result(), affine.result(), blend.result(), gate, archive, bez.result(), split.result()]


def suite_product(cfg: VerifyConfig) -> list[IdentityResult]:
    top = min(cfg.max_n, 8)
    prod = Tally("product identity (k1 + k2 <= n)", cfg)
    zero = Tally("product identity vanishes for k1 + k2 > n", cfg)
    for iv in _intervals(cfg):
        for x in _points(iv, cfg, 6):
            for n in range(top + 1):
                for k1 in range(n + 2):
                    for k2 in range(n + 2 - k1):
                        for m1, m2 in ((k1, k2), (n, n), (0, 1)):
                            rhs = calculus.product_identity(k1, k2, m1, m2, n, x, iv)
                            if k1 + k2 <= n:
                                prod.compare(rhs, bc.eval_closed_form(BasisIndex(n, k1 + k2, m1 + m2), x, iv))
                            else:
                                zero.compare(rhs, 0)
    return [prod.result(), zero.result()]


def _random_poly(rng: random.Random, n: int, iv: Interval, cfg: VerifyConfig) -> poly_algebra.BernsteinPoly:
    coeffs = tuple(cfg.backend.coerce(Fraction(rng.randint(-20, 20), rng.randint(1, 6))) for _ in range(n + 1))
    return poly_algebra.BernsteinPoly(coeffs, iv)


def suite_algebra(cfg: VerifyConfig) -> list[IdentityResult]:
    top = min(cfg.max_n, 8)
    rng = random.Random(2024)
    rt_xi = Tally("divide(multiply(p, xi^d), xi^d) = p", cfg)
    rt_eta = Tally("divide(multiply(p, eta^d), eta^d) = p", cfg)
    pw_xi = Tally("multiply by xi^d is pointwise xi^d * p", cfg)
    pw_eta = Tally("multiply by eta^d is pointwise eta^d * p", cfg)
    mono = Tally("from_monomial(to_monomial(p)) = p", cfg)
    mono_eval = Tally("monomial form evaluates like the Bernstein form", cfg)
    for iv in _intervals(cfg):
        xs = _points(iv, cfg, 6)
        for n in range(top + 1):
            p = _random_poly(rng, n, iv, cfg)
            for d in (1, 2, 3):
                up = poly_algebra.multiply_by_xi_power(p, d)
                for c, e in zip(poly_algebra.divide_by_xi_power(up, d).coeffs, p.coeffs):
                    rt_xi.compare(c, e)
                upe = poly_algebra.multiply_by_eta_power(p, d)
                for c, e in zip(poly_algebra.divide_by_eta_power(upe, d).coeffs, p.coeffs):
                    rt_eta.compare(c, e)
                for x in xs:
                    pw_xi.compare(up(x), iv.normalize(x) ** d * p(x))
                    pw_eta.compare(upe(x), iv.complement(x) ** d * p(x))
            for m in (n, n + 1, 0):
                q = poly_algebra.BernsteinPoly(p.coeffs, iv, m)
                seq = poly_algebra.to_monomial(q)
                back = poly_algebra.from_monomial(seq, iv, n, m)
                for c, e in zip(back.coeffs, q.coeffs):
                    mono.compare(c, e)
                for x in xs:
                    mono_eval.compare(poly_algebra.monomial_eval(seq, x), q(x))
    return [t.result() for t in (rt_xi, rt_eta, pw_xi, pw_eta, mono, mono_eval)]


def suite_elevation(cfg: VerifyConfig) -> list[IdentityResult]:
    top = min(cfg.max_n, 8)
    rng = random.Random(99)
    values = Tally("elevation preserves values", cfg)
    hull = Tally("elevation keeps coefficients within [min c, max c]", cfg)
    basis = Tally("basis elevation: two pieces sum to B_k^n", cfg)
    anchor = Tally("anchor: [0, 1] elevates to [0, 1/2, 1]", cfg)
    unit = bc.UNIT if cfg.backend.exact else bc.UNIT.as_float()
    got = poly_algebra.elevate(poly_algebra.BernsteinPoly((cfg.backend.coerce(0), cfg.backend.coerce(1)), unit), 1)
    for c, e in zip(got.coeffs, (0, Fraction(1, 2), 1)):
        anchor.compare(c, cfg.backend.coerce(e))
    for iv in _intervals(cfg):
        xs = _points(iv, cfg, 6)
        for n in range(top + 1):
            p = _random_poly(rng, n, iv, cfg)
            for times in (1, 2, 3):
                q = poly_algebra.elevate(p, times)
                for x in xs:
                    values.compare(q(x), p(x))
                hull.check(min(p.coeffs) <= min(q.coeffs) and max(q.coeffs) <= max(p.coeffs))
            for k in range(n + 1):
                for x in xs:
                    basis.compare(sum(bc.elevate_basis(BasisIndex(n, k, n), x, iv)), bc.bernstein(n, k, x, iv))
    return [t.result() for t in (values, hull, basis, anchor)]


def poisson_ladder(mu=2, ks=range(7)) -> dict:
    """Limit errors along ``n = 100, 1000, 10000`` for each ``k``."""
    iv = bc.UNIT
    return {k: [stochastic.poisson_limit_error(n, mu, k, iv) for n in POISSON_LADDER] for k in ks}


def suite_distribution(cfg: VerifyConfig) -> list[IdentityResult]:
    top = min(cfg.max_n, 12)
    unity = Tally("pmf sums to 1", cfg)
    nonneg = Tally("pmf is non-negative", cfg)
    mean = Tally("mean = n (x-a)/(b-a)", cfg)
    var = Tally("variance = n (x-a)(b-x)/(b-a)^2", cfg)
    for iv in _intervals(cfg):
        for x in _points(iv, cfg):
            for n in range(top + 1):
                pmf = stochastic.binomial_pmf(n, x, iv)
                unity.compare(sum(pmf), 1)
                nonneg.check(all(p >= 0 for p in pmf))
                mu, sigma2 = stochastic.mean_variance(n, x, iv)
                bm, bv = stochastic.moments_from_pmf(pmf)
                mean.compare(bm, mu)
                var.compare(bv, sigma2)
    ladder = poisson_ladder()
    decreasing = Tally("Poisson limit error at mu = 2, k = 3 decreases along n = 100, 1000, 10000", cfg, tol=0.0, backend="float")
    errs = ladder[3]
    decreasing.check(all(e1 > e2 for e1, e2 in zip(errs, errs[1:])))
    decreasing.details = {f"k={k}": [repr(e) for e in errs] for k, errs in ladder.items()}
    ceiling = Tally("Poisson limit error at n = 10000, mu = 2, k = 3 below 5e-4", cfg, tol=POISSON_CEILING, backend="float")
    ceiling.compare(ladder[3][-1], 0.0, scale=1.0)
    szasz = Tally("Szasz basis partition of unity (60 terms, n xi = 5)", cfg, tol=1e-12, backend="float")
    params = stochastic.SzaszBasisParams(10, bc.UNIT)
    szasz.compare(sum(stochastic.szasz_basis(params, i, Fraction(1, 2)) for i in range(61)), 1.0)
    gen = Tally("Szasz generating function exp((t-1) n xi)", cfg, tol=1e-12, backend="float")
    for n in (1, 3, 10):
        p = stochastic.SzaszBasisParams(n, Interval(1, 3))
        for x in Interval(1, 3).grid(5):
            for t in (-1.0, 0.0, 0.5, 1.5):
                gen.compare(stochastic.szasz_genfun_partial(p, x, t, 120), stochastic.szasz_genfun(p, x, t))
    return [t.result() for t in (unity, nonneg, mean, var, decreasing, ceiling, szasz, gen)]


def _ortho_result(name: str, report: duality.OrthogonalityReport, gating: bool, backend: str) -> IdentityResult:
    failing = [p.to_json() for p in report.points if not p.passed]
    details = {"family": report.family, "weights": report.weights}
    if failing:
        details["failing_points"] = failing[:1]
    return IdentityResult(name, len(report.points), report.max_error, report.passed, gating, backend, details)


def suite_orthogonality(cfg: VerifyConfig) -> list[IdentityResult]:
    out = []
    want_b = cfg.family in ("both", "bernstein")
    want_s = cfg.family in ("both", "szasz")
    derived_gates = cfg.weights in ("derived", "both")
    published_gates = cfg.weights in ("published", "both")
    top = min(cfg.max_n, 6)
    if want_b:
        for a, b in TEST_INTERVALS:
            iv = Interval(a, b)
            grid = iv.grid(11, inclusive=False)
            for n in range(top + 1):
                fam = duality.FunctionFamily.bernstein(n, iv)
                rep = duality.verify_orthogonality(fam, duality.derive_weights(fam, n), grid, 0)
                out.append(_ortho_result(f"Bernstein n={n} on [{a},{b}], derived weights", rep, derived_gates, "rational"))
                rep = duality.verify_orthogonality(fam, duality.published_weights(fam), grid, 0)
                out.append(_ortho_result(f"Bernstein n={n} on [{a},{b}], published weights w_k = Y_k^n", rep, published_gates, "rational"))
    if want_s:
        for a, b in ((0, 1), (1, 3)):
            iv = Interval(a, b)
            grid = iv.grid(11, inclusive=False)
            fam = duality.FunctionFamily.szasz(3, iv, truncation=80, max_index=8)
            rep = duality.verify_orthogonality(fam, duality.derive_weights(fam, 80), grid, SZASZ_TOL)
            out.append(_ortho_result(f"Szasz n=3 on [{a},{b}], derived weights, K=80", rep, derived_gates, "float"))
            rep = duality.verify_orthogonality(fam, duality.published_weights(fam), grid, SZASZ_TOL)
            gates = published_gates and (a, b) == (0, 1)
            out.append(_ortho_result(f"Szasz n=3 on [{a},{b}], published weights xi^k/(n^k k!), K=80", rep, gates, "float"))
    return out


SUITES: dict[str, Callable[[VerifyConfig], list[IdentityResult]]] = {
    "recurrence": suite_recurrence,
    "series": suite_series,
    "derivatives": suite_derivatives,
    "subdivision": suite_subdivision,
    "product": suite_product,
    "algebra": suite_algebra,
    "elevation": suite_elevation,
    "distribution": suite_distribution,
    "orthogonality": suite_orthogonality,
}


def run(suite: str, cfg: VerifyConfig, workers: int | None = None) -> dict:
    """Run one suite or ``"all"`` and assemble the report in suite order."""
    names = list(SUITE_NAMES) if suite == "all" else [suite]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}")
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda name: SUITES[name](cfg), names))
    else:
        results = [SUITES[name](cfg) for name in names]
    suites = {name: [r.to_json() for r in res] for name, res in zip(names, results)}
    passed = all(r.passed for res in results for r in res if r.gating)
    return {
        "backend": cfg.backend.value,
        "max_n": cfg.max_n,
        "tolerance": format_scalar(cfg.tol),
        "suites": suites,
        "verdict": "PASS" if passed else "FAIL",
    }
