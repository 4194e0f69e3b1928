import json
import subprocess
import sys

import pytest

from gja.algebra import t2_algebra, to_document
from gja.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,out",
    [
        (["eval", "cbcb"], "-a"),
        (["eval", "(a*b)*c"], "-d"),
        (["bracket", "d", "a"], "-c + d"),
        (["normalize", "cbcb"], "-ccbb"),
        (["normalize", "-3/2 bdbd"], "3/2 ddbb"),
        (["normalize", "-3/2", "bdbd"], "3/2 ddbb"),
        (["contract", "cbcb", "--trace"], "-ccbb -> cca -> -cc -> -a"),
        (["eval", "-a", "+", "b"], "-a + b"),
        (["eval", "i*j", "--algebra", "H"], "k"),
        (["classify", "--algebra", "H"], "associative"),
    ],
)
def test_text_output(capsys, argv, out):
    code, got, _ = run(capsys, *argv)
    assert code == 0
    assert got.splitlines()[0] == out


def test_classify_A_shows_witness(capsys):
    code, out, _ = run(capsys, "classify")
    assert out.splitlines()[0] == "neither"
    assert "(a,b,c) (xy)z = -d, delta x(yz) = c" in out


def test_jacobi_exit_codes(capsys):
    assert run(capsys, "jacobi")[0] == 0
    code, out, _ = run(capsys, "jacobi", "--mode", "foti", "--format", "json")
    assert code == 1
    doc = json.loads(out)
    nonzero = {r["id"]: r["value"] for r in doc["identities"] if not r["zero"]}
    assert nonzero["inner-3"] == {"c": "2", "d": "-2"}
    code, out, _ = run(capsys, "jacobi", "--variant", "commutator")
    assert code == 1 and "-4a" in out


def test_json_and_csv(capsys):
    code, out, _ = run(capsys, "eval", "2c - 2d", "--format", "json")
    assert json.loads(out)["value"] == {"c": "2", "d": "-2"}
    code, out, _ = run(capsys, "contract", "cbcb", "--format", "csv")
    assert out.splitlines()[1].startswith("cbcb,-a,")


def test_table_orientation(capsys):
    _, out, _ = run(capsys, "table")
    lines = [l.split() for l in out.splitlines()]
    assert lines[0] == ["*", "a", "b", "c", "d"]
    assert lines[2] == ["b", "b", "-a", "-d", "c"]
    _, out, _ = run(capsys, "table", "--format", "json")
    assert json.loads(out)["rows"][1][2] == "-d"


def test_rep(capsys):
    code, out, _ = run(capsys, "rep", "--algebra", "H", "--element", "i", "--format", "json")
    m = json.loads(out)["left"]
    assert [row[2] for row in m] == ["0", "0", "0", "1"]  # L(i) j = k
    assert run(capsys, "rep", "--element", "q")[0] == 3


@pytest.mark.parametrize(
    "argv,code,needle",
    [
        (["eval", "a*b*c"], 2, "^"),
        (["eval", "a + q"], 2, "^"),
        (["eval", "ij", "--algebra", "H"], 3, "error"),
        (["contract", "0"], 2, "expected a word"),
        (["eval", "a", "--algebra", "/nonexistent/alg.json"], 4, "I/O"),
    ],
)
def test_error_exit_codes(capsys, argv, code, needle):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert needle in err


def test_custom_algebra_file(capsys, tmp_path):
    path = tmp_path / "t2.json"
    path.write_text(json.dumps(to_document(t2_algebra())))
    code, out, _ = run(capsys, "classify", "--algebra", str(path))
    assert code == 0 and out.splitlines()[0] == "both"
    code, out, _ = run(capsys, "verify", "--suite", "axioms", "--algebra", str(path))
    assert code == 0 and "0 unexpected" in out
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "X", "dim": 1, "generators": ["x"], "parity": [2], "table": [[[]]]}')
    assert run(capsys, "table", "--algebra", str(bad))[0] == 2


def test_verify_all_is_green(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert out.rstrip().endswith("0 unexpected")


def test_verify_json_deterministic_across_jobs(capsys):
    outs = []
    for jobs in ("1", "4", "1"):
        code, out, _ = run(capsys, "verify", "--format", "json", "--jobs", jobs)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_verify_json_deterministic_across_processes():
    cmd = [sys.executable, "-m", "gja.cli", "verify", "--suite", "all", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd + ["--jobs", "3"], capture_output=True, check=True).stdout
    assert first == second and len(first) > 1000


def test_shipped_fixture_files(capsys):
    from pathlib import Path

    root = Path(__file__).resolve().parent.parent / "algebras"
    code, out, _ = run(capsys, "verify", "--suite", "axioms", "--algebra", str(root / "t2.json"))
    assert code == 0 and "class=both" in out and "k=3" in out
    code, out, _ = run(capsys, "classify", "--algebra", str(root / "t3.json"))
    assert out.splitlines()[0] == "antiassociative"
