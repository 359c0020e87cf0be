"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

from __future__ import annotations

import os
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from bernstein_kit import verify
from bernstein_kit.basis_core import UNIT
from bernstein_kit.stochastic import poisson_limit_error

CFG = verify.VerifyConfig(max_n=10)


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {title}"
            print("\n" + line + (f" ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def _by_name(results):
    return {r.name: r for r in results}


def _all_exact(results, names):
    return all(results[n].passed and results[n].max_error == 0 and results[n].instances > 0 for n in names)


def test_criterion_1_exact_identity_suite(report):
    start = time.perf_counter()
    res = _by_name(verify.suite_recurrence(CFG))
    elapsed = time.perf_counter() - start
    names = [
        "recurrence = closed form",
        "partition of unity",
        "alternating sum closed form",
        "symmetry",
        "scaling law (b-a)^(n-m)",
    ]
    ok = _all_exact(res, names) and elapsed <= 60
    total = sum(res[n].instances for n in names)
    report(1, "exact identity suite, n <= 10, three intervals, 11 points", ok, f"{total} instances, max error 0, {elapsed:.1f} s")


def test_criterion_2_derivative_suite(report):
    res = _by_name(verify.suite_derivatives(CFG))
    sym = res["higher derivative formula = formal derivative of monomial form"]
    fd = res["first derivative vs central difference (h = 1e-6)"]
    ok = sym.passed and sym.max_error == 0 and fd.passed and fd.max_error <= 1e-5
    report(2, "derivative formula exact for n <= 8, l <= n+2; central difference within 1e-5", ok, f"finite-difference max rel error {fd.max_error:.2e}")


def test_criterion_3_algebra_round_trips(report):
    alg = _by_name(verify.suite_algebra(CFG))
    elev = _by_name(verify.suite_elevation(CFG))
    ok = (
        _all_exact(alg, ["divide(multiply(p, xi^d), xi^d) = p", "divide(multiply(p, eta^d), eta^d) = p"])
        and _all_exact(elev, ["elevation preserves values", "anchor: [0, 1] elevates to [0, 1/2, 1]"])
    )
    report(3, "multiply/divide round trips d <= 3, n <= 8; elevation exact incl. [0,1] -> [0,1/2,1]", ok)


def test_criterion_4_subdivision(report):
    res = _by_name(verify.suite_subdivision(CFG))
    exact = _all_exact(
        res,
        [
            "subdivision B_j^n(xy) = sum B_j^k(x) B_k^n(y) on [0,1]",
            "anchor: B_1^2(1/4) = 3/8 via subdivision",
            "affine subdivision B_j^n((1-y)x + y)",
            "blend subdivision B_j^n((1-y)x + yz)",
        ],
    )
    archive = res["composition identity validity domain by normalization convention"]
    archived = not archive.gating and len(archive.details) == 3 and all("holds_on" in v for v in archive.details.values())
    domains = "; ".join(f"{k.split(':')[0]} holds on {','.join(v['holds_on'])}" for k, v in archive.details.items())
    report(4, "unit-interval subdivision n <= 8, both variants n <= 6, validity domain archived", exact and archived, domains)


def test_criterion_5_product_identity(report):
    res = _by_name(verify.suite_product(CFG))
    ok = _all_exact(res, ["product identity (k1 + k2 <= n)", "product identity vanishes for k1 + k2 > n"])
    report(5, "product identity exact for k1 + k2 <= n <= 8, zero beyond", ok)


def test_criterion_6_distribution(report):
    res = _by_name(verify.suite_distribution(verify.VerifyConfig(max_n=12)))
    moments = _all_exact(res, ["mean = n (x-a)/(b-a)", "variance = n (x-a)(b-x)/(b-a)^2"])
    errs = [poisson_limit_error(n, F(2), 3, UNIT) for n in (100, 1000, 10000)]
    ok = moments and errs[0] > errs[1] > errs[2] and errs[2] < 5e-4
    report(6, "pmf moments exact n <= 12; Poisson error at mu=2, k=3 decreasing and < 5e-4", ok, "errors " + ", ".join(f"{e:.6e}" for e in errs))


def test_criterion_7_orthogonality(report):
    results = verify.suite_orthogonality(CFG)
    derived_b = [r for r in results if r.name.startswith("Bernstein") and "derived" in r.name]
    szasz = [r for r in results if r.name.startswith("Szasz n=3 on [0,1], derived")]
    archived = [r for r in results if "published" in r.name and not r.gating]
    ok = (
        len(derived_b) == 21
        and all(r.passed and r.max_error == 0 and r.instances == 11 for r in derived_b)
        and len(szasz) == 1
        and szasz[0].passed
        and szasz[0].max_error <= 1e-10
        and len(archived) == 23
    )
    verdicts = {r.name: "PASS" if r.passed else "FAIL" for r in archived}
    ex2 = [f"{k.split(', ')[0]}: {v}" for k, v in verdicts.items() if k.startswith("Szasz")]
    ex1_pass = sum(1 for k, v in verdicts.items() if k.startswith("Bernstein") and v == "PASS")
    detail = f"Szasz max error {szasz[0].max_error:.1e}; published Bernstein weights pass {ex1_pass}/21 (the n = 0 cases); " + "; ".join(ex2)
    report(7, "derived-weight Gram matrices diagonal (exact), Szasz [0,1] within 1e-10, published weights archived", ok, detail)


def test_criterion_8_series_consistency(report):
    res = _by_name(verify.suite_series(CFG))
    double = res["double sum -> exponential form ([1,3], j_max = 40)"]
    taylor = res["Taylor coefficients = basis values"]
    ok = double.passed and double.max_error < 1e-10 and taylor.passed and taylor.max_error == 0
    report(8, "double sum within 1e-10 on [1,3] at j_max=40; Taylor coefficients exact n <= 10", ok, f"double-sum max error {double.max_error:.1e}")


def test_criterion_9_cli_verify_all(report, tmp_path):
    env = dict(os.environ)
    env.pop(verify.MAX_N_ENV, None)
    outputs = []
    codes = []
    start = time.perf_counter()
    for run in range(2):
        path = tmp_path / f"report{run}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "bernstein_kit", "verify", "--suite", "all", "--output", str(path)],
            env=env,
            capture_output=True,
        )
        codes.append(proc.returncode)
        outputs.append(path.read_bytes() if path.exists() else b"")
    elapsed = (time.perf_counter() - start) / 2
    ok = codes == [0, 0] and outputs[0] == outputs[1] and len(outputs[0]) > 0 and elapsed < 300
    report(9, "verify --suite all exits 0, under 5 minutes, byte-identical across runs", ok, f"exit codes {codes}, {elapsed:.1f} s per run")
