from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hopfdouble.cli import EXIT_FAIL, EXIT_INPUT, EXIT_NA, EXIT_OK, main, resolve_selector
from hopfdouble import builtin


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_axioms_ok(capsys):
    code, out, _ = run(capsys, "axioms", "kS3", "--double")
    assert code == EXIT_OK
    assert out.count("all identities hold") == 2


def test_axioms_broken(capsys):
    code, out, _ = run(capsys, "axioms", "broken", "--json")
    assert code == EXIT_FAIL
    data = json.loads(out)
    assert [f["identity"] for f in data["failures"]] == ["antipode"]


def test_missing_fixture(capsys, monkeypatch):
    # --max-conductor writes the environment; let monkeypatch restore it
    monkeypatch.setenv("HOPF_MAX_CONDUCTOR", "840")
    code, _, err = run(capsys, "--max-conductor", "840", "irr", "--A", "nowhere", "--json")
    assert code == EXIT_INPUT
    assert json.loads(err)["error"] == "FileNotFoundError"


def test_bad_arguments(capsys):
    assert run(capsys, "frobnicate")[0] == EXIT_INPUT


def test_irr_csv(capsys):
    code, out, _ = run(capsys, "irr", "--A", "kS3", "--csv")
    assert code == EXIT_OK
    rows = [r.split(",") for r in out.strip().splitlines()]
    assert [r[1] for r in rows[1:]] == ["1", "1", "2"]


def test_smatrix_csv(capsys):
    code, out, _ = run(capsys, "smatrix", "--A", "kZ2", "--csv")
    assert code == EXIT_OK
    assert out == "1,1,1,1\n1,1,-1,-1\n1,-1,1,-1\n1,-1,-1,1\n"


def test_smatrix_json(capsys):
    code, out, _ = run(capsys, "smatrix", "--A", "kS3", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and all(data["invariants"].values())
    assert len(data["entries"]) == 8


def test_double(capsys):
    code, out, _ = run(capsys, "double", "--A", "kZ2", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["dim"] == 4 and data["factorizable"] and data["fourier"]["ok"]


def test_centralizer(capsys):
    code, out, _ = run(capsys, "centralizer", "--A", "kS3", "--K", "subgroup:A3", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["fpdim"] * data["centralizer fpdim"] == 36
    code, out, _ = run(capsys, "centralizer", "--A", "kS3", "--simples", "0", "--json")
    assert json.loads(out)["centralizer fpdim"] == 36
    assert run(capsys, "centralizer", "--A", "kS3", "--simples", "99")[0] == EXIT_INPUT


def test_kernels(capsys):
    code, out, _ = run(capsys, "kernels", "--A", "kS3", "--module", "simple:1", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["HKer"]["dim"] == 3 and data["LKer"]["dim"] == 3
    code, out, _ = run(capsys, "kernels", "--A", "kS3", "--double", "--module", "K:A3", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["LKer"]["classification"]["normal-left-coideal-subalgebra"]


def test_lattice(capsys):
    code, out, _ = run(capsys, "lattice", "--A", "kZ2", "--double", "--identities", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert len(data["subcategories"]) == 5
    assert set(data["identities"].values()) == {"pass"}


@pytest.mark.parametrize("argv,code", [
    (["check", "thm1.2", "--A", "kS3", "--K", "subgroup:A3"], EXIT_OK),
    (["check", "thm1.2", "--A", "kS3", "--K", "subgroup:S2"], EXIT_NA),
    (["check", "thm1.2", "--A", "kS3", "--K", "span:0,1"], EXIT_NA),
    (["check", "thm1.2", "--A", "kS3", "--K", "subgroup:Q8"], EXIT_INPUT),
    (["check", "thm1.1", "--A", "kS3", "--K", "A3", "--L", "A3"], EXIT_OK),
    (["check", "thm5.10", "--A", "k^S3"], EXIT_OK),
    (["check", "prop5.6", "--A", "k^S3", "--L", "subgroup:A3"], EXIT_OK),
    (["check", "thm1.2", "--A", "kS3"], EXIT_INPUT),
])
def test_check_exit_codes(capsys, argv, code):
    assert run(capsys, *argv, "--json")[0] == code


def test_check_is_deterministic(capsys):
    argv = ["check", "thm1.2", "--A", "kS3", "--K", "subgroup:A3", "--json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    data = json.loads(first)
    assert data["verdict"] == "pass" and data["lhs_indices"] == data["rhs_indices"]
    assert data["inputs"]["K selector"] == "subgroup:A3"


def test_selectors():
    A = builtin("kS3")
    assert resolve_selector(A, "subgroup:A3") == A.subspaces["A3"]
    assert resolve_selector(A, "named:whole").dim == 6
    assert resolve_selector(A, "unit").dim == 1
    assert resolve_selector(A, "span:0,4+5").dim == 2
    B = builtin("k^S3")
    assert resolve_selector(B, "subgroup:A3") == B.subspaces["k^S3/A3"]


def test_console_script_subprocess():
    proc = subprocess.run([sys.executable, "-m", "hopfdouble.cli", "check", "thm1.2", "--A", "kZ2",
                           "--K", "Z2"], capture_output=True, text=True)
    assert proc.returncode == EXIT_OK
    assert "verdict" in proc.stdout and "pass" in proc.stdout
