from __future__ import annotations

import json

import pytest

from bernstein_kit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_usage(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    return exc.value.code, capsys.readouterr().err


def test_eval_basis_grid(capsys):
    code, out, _ = run(capsys, "eval", "basis", "--n", "2", "--k", "1", "--a", "0", "--b", "1", "--grid", "3")
    assert code == 0
    assert out == "x,value\n0.0,0.0\n0.5,0.5\n1.0,0.0\n"


def test_eval_basis_rational(capsys):
    code, out, _ = run(capsys, "eval", "basis", "--n", "2", "--k", "1", "--a", "1", "--b", "3", "--grid", "3", "--backend", "rational")
    assert code == 0
    assert out == "x,value\n1,0\n2,1/2\n3,0\n"
    assert "." not in out


def test_eval_constant_basis(capsys):
    code, out, _ = run(capsys, "eval", "basis", "--n", "0", "--k", "0", "--m", "0")
    rows = out.splitlines()[1:]
    assert code == 0 and len(rows) == 11
    assert all(r.endswith(",1.0") for r in rows)


def test_eval_curve_endpoints(capsys, tmp_path):
    q = tmp_path / "q.json"
    q.write_text(json.dumps({"a": 0, "b": 1, "points": [[0, 0], [1, 2], [3, 1]]}))
    code, out, _ = run(capsys, "eval", "curve", "--points-file", str(q), "--grid", "2")
    assert code == 0
    assert out == "x,p0,p1\n0.0,0.0,0.0\n1.0,3.0,1.0\n"


def test_eval_json_and_output_file(capsys, tmp_path):
    path = tmp_path / "pmf.json"
    code, out, _ = run(capsys, "eval", "pmf", "--n", "2", "--grid", "3", "--backend", "rational", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    rows = json.loads(path.read_text())
    assert rows[1] == {"x": "1/2", "k0": "1/4", "k1": "1/2", "k2": "1/4"}


def test_eval_altsum_and_szasz(capsys):
    code, out, _ = run(capsys, "eval", "altsum", "--n", "3", "--a", "1", "--b", "3", "--grid", "3", "--backend", "rational")
    assert out.splitlines()[2] == "2,0"
    code, out, _ = run(capsys, "eval", "szasz", "--n", "2", "--i", "1", "--grid", "3")
    assert code == 0 and out.splitlines()[2].startswith("0.5,0.36787944")


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["eval", "basis", "--n", "2", "--k", "1", "--a", "1", "--b", "1"], "--b"),
        (["eval", "basis", "--n", "2", "--k", "1", "--grid", "1"], "--grid"),
        (["eval", "basis", "--k", "1"], "--n"),
        (["eval", "basis", "--n", "-1", "--k", "0"], "--n"),
        (["eval", "szasz", "--n", "2", "--i", "1", "--backend", "rational"], "--backend"),
        (["eval", "curve"], "--points-file"),
        (["verify", "--suite", "recurrence", "--tol", "1e-3"], "--tol"),
        (["verify", "--suite", "recurrence", "--backend", "float", "--tol", "0"], "--tol"),
        (["verify", "--suite", "recurrence", "--max-n", "-1"], "--max-n"),
        (["verify", "--suite", "nope"], "--suite"),
        (["convert", "elevate", "--times", "-1", "--input", "missing.json"], "--input"),
    ],
)
def test_usage_errors_exit_2_and_name_flag(capsys, argv, flag):
    code, err = run_usage(capsys, *argv)
    assert code == 2
    assert flag in err


def test_verify_recurrence_rational(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "recurrence", "--backend", "rational", "--max-n", "10")
    report = json.loads(out)
    assert code == 0 and report["verdict"] == "PASS"
    assert all(r["max_error"] == "0" for r in report["suites"]["recurrence"])


def test_verify_orthogonality_bernstein_derived(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "orthogonality", "--family", "bernstein", "--weights", "derived", "--backend", "rational")
    assert code == 0 and json.loads(out)["verdict"] == "PASS"


def test_verify_published_weights_gate_and_fail(capsys):
    code, out, err = run(capsys, "verify", "--suite", "orthogonality", "--family", "bernstein", "--weights", "published", "--max-n", "2")
    assert code == 1 and json.loads(out)["verdict"] == "FAIL"
    assert "FAILED" in err


def test_verify_trivial_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-n", "0")
    assert code == 0 and json.loads(out)["verdict"] == "PASS"


def test_verify_env_default(capsys, monkeypatch):
    monkeypatch.setenv("BERNSTEIN_KIT_MAX_N", "2")
    code, out, _ = run(capsys, "verify", "--suite", "elevation")
    assert code == 0 and json.loads(out)["max_n"] == 2


def test_verify_workers_output_identical(capsys):
    _, serial, _ = run(capsys, "verify", "--suite", "all", "--max-n", "2", "--backend", "float")
    _, fanned, _ = run(capsys, "verify", "--suite", "all", "--max-n", "2", "--backend", "float", "--workers", "4")
    assert serial == fanned


def _convert(capsys, tmp_path, poly, *argv):
    src = tmp_path / "in.json"
    src.write_text(json.dumps(poly))
    return run(capsys, "convert", *argv, "--input", str(src))


def test_convert_elevate(capsys, tmp_path):
    code, out, _ = _convert(capsys, tmp_path, {"a": 0, "b": 1, "coeffs": [0, 1]}, "elevate", "--times", "1")
    assert code == 0 and json.loads(out)["coeffs"] == [0.0, 0.5, 1.0]
    code, out, _ = _convert(capsys, tmp_path, {"a": 0, "b": 1, "coeffs": [0, 1]}, "elevate", "--times", "0")
    assert json.loads(out)["coeffs"] == [0.0, 1.0]


def test_convert_divxi_not_divisible(capsys, tmp_path):
    code, out, err = _convert(capsys, tmp_path, {"a": 0, "b": 1, "coeffs": [1, 0]}, "divxi", "--j", "1")
    assert code == 1 and out == ""
    assert "NotDivisible" in err


def test_convert_rational_ops(capsys, tmp_path):
    poly = {"a": "1", "b": "3", "coeffs": ["0", "1/2", "0"]}
    code, out, _ = _convert(capsys, tmp_path, poly, "diveta", "--j", "1", "--backend", "rational")
    assert json.loads(out)["coeffs"] == ["0", "1"]
    code, out, _ = _convert(capsys, tmp_path, {"a": 0, "b": 1, "coeffs": [1, 0]}, "mulxi", "--d", "1", "--backend", "rational")
    assert json.loads(out)["coeffs"] == ["0", "1/2", "0"]
    code, out, _ = _convert(capsys, tmp_path, {"a": 0, "b": 1, "coeffs": [1]}, "muleta", "--d", "1", "--backend", "rational")
    assert json.loads(out)["coeffs"] == ["1", "0"]


def test_convert_monomial_round_trip(capsys, tmp_path):
    code, out, _ = _convert(capsys, tmp_path, {"a": 0, "b": 1, "coeffs": ["0", "1/2", "0"]}, "to-monomial", "--backend", "rational")
    mono = json.loads(out)
    assert mono["coeffs"] == ["0", "1", "-1"]
    code, out, _ = _convert(capsys, tmp_path, mono, "from-monomial", "--backend", "rational")
    assert json.loads(out)["coeffs"] == ["0", "1/2", "0"]
