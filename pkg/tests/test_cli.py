import json
import subprocess
import sys

import pytest

from efl.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_characters(capsys):
    code, out, _ = call(capsys, "characters", "--modulus", "5")
    data = json.loads(out)
    assert code == 0 and len(data["characters"]) == 4
    assert data["config"]["modulus"] == 5


def test_zeros_csv_on_stdout(capsys):
    code, out, err = call(capsys, "zeros", "--source", "zeta", "--height", "30")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "re,im,multiplicity" and len(lines) == 7
    assert json.loads(err)["located"] == 6


def test_zeros_to_file(capsys, tmp_path):
    path = tmp_path / "z.csv"
    code, out, _ = call(capsys, "zeros", "--source", "dirichlet:4:1", "--height", "15", "--out", str(path))
    assert code == 0 and json.loads(out)["positive_height_zeros"] == 3
    assert path.read_text().count("\n") == 7


def test_bad_source(capsys):
    code, out, _ = call(capsys, "zeros", "--source", "dirichlet:8:0", "--height", "10")
    assert code == 1 and "not primitive" in json.loads(out)["error"]


def test_verify_is_deterministic(capsys):
    argv = ("verify", "--formula", "efchi", "--bump", "1.0,0.6", "--height", "60")
    code1, out1, _ = call(capsys, *argv)
    code2, out2, _ = call(capsys, *argv)
    assert code1 == 0 and out1 == out2
    assert json.loads(out1)["passed"]


def test_verify_failure_exit_code(capsys):
    code, out, _ = call(capsys, "verify", "--formula", "ef", "--bump", "1.0,0.6", "--height", "20", "--tol", "1e-12")
    assert code == 1 and not json.loads(out)["passed"]


def test_verify_rejects_support_at_zero(capsys):
    code, out, _ = call(capsys, "verify", "--formula", "efk", "--bump", "0.2,0.6", "--height", "20")
    assert code == 1 and json.loads(out)["type"] == "ValueError"


def test_lefschetz(capsys):
    code, out, _ = call(capsys, "lefschetz", "--model", "gauss_qi", "--rep", "char:1", "--bump", "1.3,0.6")
    data = json.loads(out)
    assert code == 0 and data["residual"] <= 1e-12


def test_moments(capsys, tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.json"
    a.write_text("re,im,multiplicity\n0.5,14.134725141735,1\n")
    b.write_text(json.dumps([[0.5, 21.022039638772]]))
    code, out, _ = call(capsys, "moments", "--a", str(a), "--b", str(b))
    assert code == 0 and json.loads(out)["first_differing_moment"] == 0


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["verify", "--formula", "nope", "--bump", "1,1"])
    assert exc.value.code == 2


def test_selftest_subprocess():
    proc = subprocess.run([sys.executable, "-m", "efl", "selftest", "--seed", "3"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    checks = json.loads(proc.stdout)["checks"]
    assert all(c["passed"] for c in checks) and len(checks) == 10
