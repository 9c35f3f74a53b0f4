import io
import json
import subprocess
import sys

import pytest
from gmpy2 import mpq

from quasihook.cli import main
from quasihook.polyring import MultiPoly, vandermonde
from quasihook.quasi import clear_caches


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_qpoly_worked_example_json():
    code, out, _ = run("qpoly", "--n", "3", "--k", "3", "--m", "0", "--mu", "1,0")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == [1, 0] and data["degree"] == 3
    assert MultiPoly.from_json(data["poly"]) == vandermonde((1, 2, 3)).scale(mpq(1, 2))


def test_qpoly_text():
    code, out, _ = run("--format", "text", "qpoly", "--n", "2", "--k", "2", "--m", "0", "--mu", "0")
    assert code == 0 and out == "-x1 + x2\n"


def test_qpoly_alpha_and_custom_column():
    code, out, _ = run("qpoly", "--n", "4", "--k", "3", "--m", "0", "--alpha", "0,1", "--column", "1,2,4")
    assert code == 0
    data = json.loads(out)
    assert data["alpha"] == [0, 1] and data["tableau"] == {"column": [1, 2, 4], "row": [1, 3]}


def test_hilbert_example():
    code, out, _ = run("hilbert", "--n", "4", "--k", "3", "--m", "1")
    data = json.loads(out)
    assert code == 0
    assert (data["offset"], data["coeffs"], data["equal"]) == (11, [1, 1, 1], True)
    assert sum(data["full"]["coeffs"]) == 24


def test_basis_and_tableaux():
    code, out, _ = run("basis", "--n", "4", "--k", "3", "--m", "0")
    assert code == 0
    assert [e["degree"] for e in json.loads(out)["elements"]] == [3, 4, 5]
    code, out, _ = run("--format", "text", "tableaux", "--n", "4", "--k", "3")
    assert code == 0 and out.splitlines() == ["D(1,2,3;1,4)", "D(1,2,4;1,3)", "D(1,3,4;1,2)"]


def test_lm_readings():
    code, out, _ = run("lm", "--n", "4", "--k", "3", "--m", "1", "--alpha", "2,1")
    assert code == 0 and json.loads(out)["pass"]
    code, out, _ = run("lm", "--n", "4", "--k", "3", "--m", "1", "--alpha", "2,1", "--reading", "printed")
    assert code == 1
    assert json.loads(out)["first_diff"] == {"monomial": "x1^7·x2^4", "lhs": "1/90", "rhs": "1/60"}


def test_verify_prop3_4():
    code, out, _ = run("verify", "prop3_4", "--n-max", "8", "--k-max", "4")
    assert code == 0
    assert json.loads(out)["pass"]


@pytest.mark.parametrize("argv", [
    ("qpoly", "--n", "9", "--k", "2", "--m", "0", "--mu", "0"),
    ("qpoly", "--n", "3", "--k", "2", "--m", "4", "--mu", "0"),
    ("qpoly", "--n", "3", "--k", "3", "--m", "0", "--mu", "0,1"),
    ("qpoly", "--n", "3", "--k", "3", "--m", "0", "--mu", "1"),
    ("qpoly", "--n", "3", "--k", "3", "--m", "0", "--mu", "1,0", "--column", "1,3,2"),
    ("verify", "prop3_4", "--n-max", "9"),
    ("verify", "nope"),
    ("qpoly", "--n", "3"),
])
def test_bad_parameters_exit_2(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_term_cap_flag_and_env(monkeypatch):
    argv = ("qpoly", "--n", "5", "--k", "3", "--m", "1", "--mu", "3,2")
    clear_caches()  # memoized results would bypass the cap
    assert run("--max-terms", "10", *argv)[0] == 3
    clear_caches()
    monkeypatch.setenv("QUASI_MAX_TERMS", "10")
    assert run(*argv)[0] == 3
    assert run("--max-terms", "10000000", *argv)[0] == 0
    monkeypatch.setenv("QUASI_MAX_TERMS", "lots")
    assert run(*argv)[0] == 2


def test_output_is_byte_deterministic():
    cmd = [sys.executable, "-m", "quasihook", "basis", "--n", "4", "--k", "3", "--m", "1"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
    json.loads(first)
