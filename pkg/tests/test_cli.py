import csv
import io
import json
import os
import subprocess
import sys

import pytest

from biortho.cli import main, reemit


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_airy(capsys):
    code, out, _ = run(["poly", "--r", "0", "--s", "0", "--beta0", "0", "--alpha1", "0", "--gamma", "1", "-N", "3"],
                       capsys)
    assert code == 0
    assert "P3 = x^3 - 2" in out.splitlines()


def test_moments_laguerre(capsys):
    code, out, _ = run(["moments", "--case", "III.2", "--alpha", "0", "-K", "8"], capsys)
    assert code == 0
    assert "m0: 1,1,2,6,24,120,720,5040,40320" in out.splitlines()


def test_moments_csv_with_quadrature(capsys):
    code, out, _ = run(["moments", "--case", "I.2", "-K", "6", "--quad", "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and set(rows[0]) == {"functional", "k", "exact", "float", "quadrature"}
    m0 = {int(r["k"]): r for r in rows if r["functional"] == "m0"}
    assert m0[6]["exact"] == "40" and abs(float(m0[6]["quadrature"]) - 40) < 40e-6


def test_verify_exit_codes(capsys):
    assert run(["verify", "--case", "I.2"], capsys)[0] == 0
    assert run(["verify", "--case", "III.2", "--variant", "printed"], capsys)[0] == 1


def test_verify_json(capsys):
    code, out, _ = run(["verify", "--case", "IV.2", "--json"], capsys)
    d = json.loads(out)
    assert code == 0 and d["schema"].startswith("biortho.") and d["reports"][0]["passed"]


def test_report_all_rows(capsys, case_ids):
    code, out, _ = run(["report", "--case", "all"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == len(case_ids)
    assert all(r["passed"] == "true" for r in rows)


@pytest.mark.parametrize("args", [
    ["poly", "--r", "0", "-N", "3"],
    ["poly", "--case", "I.2", "--gamma", "1"],
    ["poly", "--case", "I.2", "-N", "21"],
    ["moments", "--case", "I.2", "-K", "13"],
    ["moments", "--case", "III.2", "--alpha", "-3"],
])
def test_usage_errors(args, capsys):
    code, _, err = run(args, capsys)
    assert code == 2 and err


def test_domain_error_names_hypothesis(capsys):
    code, _, err = run(["weights", "sample", "--case", "III.2", "--alpha", "-3"], capsys)
    assert code == 2 and "alpha" in err


@pytest.mark.parametrize("args,fmt", [
    (["coeffs", "--case", "VI.1", "-N", "6", "--format", "csv"], "csv"),
    (["coeffs", "--case", "VI.1", "-N", "6", "--format", "json"], "json"),
    (["poly", "--case", "I.3", "-N", "7", "--format", "csv"], "csv"),
    (["moments", "--case", "IV.1", "-K", "6", "--quad", "--format", "json"], "json"),
    (["weights", "sample", "--case", "III.1", "--points", "9"], "csv"),
    (["weights", "sample", "--case", "VI.2", "--points", "9", "--format", "json"], "json"),
    (["report", "--case", "I.2"], "csv"),
])
def test_round_trip(args, fmt, capsys):
    code, out, _ = run(args, capsys)
    assert code == 0
    assert reemit(out, fmt) == out


def test_output_file_and_determinism(tmp_path, capsys):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["weights", "sample", "--case", "I.1", "--points", "21", "-o", str(p1)]) == 0
    assert main(["weights", "sample", "--case", "I.1", "--points", "21", "-o", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert p1.read_text().splitlines()[0] == "x,w0,w1"


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "biortho", "poly", "--case", "I.2", "-N", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "P3 = x^3 - 2" in res.stdout


def test_tol_env(monkeypatch, capsys):
    monkeypatch.delenv("BIORTHO_TOL", raising=False)
    code, _, _ = run(["moments", "--case", "IV.2", "-K", "4", "--quad", "--tol", "1e-9"], capsys)
    assert code == 0
    assert "BIORTHO_TOL" not in os.environ


def test_negative_fraction_values(capsys):
    code, out, _ = run(["poly", "--r", "-1/2", "--s", "0", "--beta0", "-3/2", "--alpha1", "0", "--gamma", "1",
                        "-N", "1"], capsys)
    assert code == 0 and "P1 = x + 3/2" in out
    code, out, _ = run(["moments", "--case", "III.1", "--p", "-7/10", "--q", "-1/2", "-K", "1"], capsys)
    assert code == 0 and out.startswith("m0: 1,")
