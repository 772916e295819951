import csv
import io
import json
import subprocess
import sys

import pytest

from fibcube.cli import main
from fibcube.hypercube import InducedHypercube
from fibcube.maximal import count_f
from fibcube.poly import CountingPolynomial


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_single(capsys):
    assert run(capsys, "poly", "--family", "gamma", "--n", "6")[:2] == (0, "4x^3+x^2\n")
    assert run(capsys, "poly", "--family", "lambda", "--n", "0")[1] == "1\n"
    assert run(capsys, "poly", "--family", "fibonacci", "--n", "3", "--method", "series")[1] == "x^2+x\n"


def test_poly_all_methods(capsys):
    code, out, _ = run(capsys, "poly", "--family", "lambda", "--n", "12", "--method", "all")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert [r[1] for r in rows] == ["formula", "recurrence", "series", "status"]
    assert len({r[2] for r in rows[:3]}) == 1
    assert rows[3][2] == "agree"


def test_poly_table(capsys):
    code, out, _ = run(capsys, "poly", "--family", "gamma", "--n-max", "6")
    assert out.splitlines()[-1] == "6\t4x^3+x^2"


def test_poly_json_round_trip(capsys):
    code, out, _ = run(capsys, "poly", "--family", "lucas", "--n-max", "6", "--format", "json")
    rows = json.loads(out)
    assert [str(CountingPolynomial.from_json(r)) for r in rows][-1] == "2x^3+3x^2"
    assert rows[-1]["n"] == 6 and rows[-1]["family"] == "lambda"


def test_poly_csv_schema(capsys):
    code, out, _ = run(capsys, "poly", "--family", "gamma", "--n", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "family", "p", "count", "source"]
    assert [(r["p"], r["count"]) for r in rows] == [(str(p), str(count_f(6, p))) for p in range(4)]
    assert {r["source"] for r in rows} == {"formula"}


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "gamma", "--n", "4")
    cubes = [InducedHypercube.from_json(obj) for obj in json.loads(out)]
    assert {str(c.top) for c in cubes} == {"1001", "0101", "1010"}
    assert json.loads(out) == [c.to_json() for c in cubes]


def test_enumerate_lucas_1(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "lambda", "--n", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1 and rows[0]["dimension"] == "0"


def test_enumerate_count_matches_formula(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "gamma", "--n", "10")
    assert len(json.loads(out)) == sum(count_f(10, p) for p in range(11))


def test_enumerate_empty_string_csv(capsys):
    out = run(capsys, "enumerate", "--family", "gamma", "--n", "0", "--format", "csv")[1]
    assert out.splitlines()[1] == "0,gamma,0,(empty),(empty),"


def test_enumerate_dot(capsys):
    out = run(capsys, "enumerate", "--family", "lambda", "--n", "3", "--format", "dot")[1]
    assert "graph lambda_3 {" in out
    assert out.count("shape=doublecircle") == 3


def test_weights_labels_source(capsys):
    out = run(capsys, "weights", "--family", "lucas", "--n", "6")[1]
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[3]["count"] == "2" and rows[3]["source"] == "enumeration"
    out = run(capsys, "weights", "--family", "gamma", "--n", "4")[1]
    assert list(csv.DictReader(io.StringIO(out)))[2]["source"] == "closed-form"


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--oracle-max", "8")
    assert code == 0
    assert out.splitlines()[-1].endswith("0 failed")
    assert "FAIL" not in out


def test_verify_trivial(capsys):
    code, out, _ = run(capsys, "verify", "--oracle-max", "0", "--format", "json")
    assert code == 0
    report = json.loads(out)
    oracle = [c for c in report["checks"] if c["name"] == "oracle_equivalence"]
    assert [c["params"]["n_max"] for c in oracle] == [0, 0]


@pytest.mark.parametrize("fault,family", [("count_f", "gamma"), ("count_g", "lambda")])
def test_verify_detects_corrupted_formula(capsys, fault, family):
    code, out, _ = run(capsys, "verify", "--oracle-max", "2", "--fault", fault)
    assert code == 1
    failed = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert any(f"pascal_step [family={family}" in line for line in failed)
    assert any(line.startswith("FAIL golden_table") for line in failed)


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "verify", "--oracle-max", "13")[0] == 3
    assert run(capsys, "verify", "--n-max", "1000")[0] == 3
    monkeypatch.setenv("FIBCUBE_ORACLE_CAP", "4")
    assert run(capsys, "verify", "--oracle-max", "5")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["poly", "--family", "tribonacci", "--n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--family", "gamma", "--n", "-1"])
    assert exc.value.code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "poly.txt"
    code, out, _ = run(capsys, "poly", "--family", "gamma", "--n", "5", "--out", str(target))
    assert out == "" and target.read_text() == "x^3+3x^2\n"


def test_output_is_byte_stable():
    argv = [sys.executable, "-m", "fibcube.cli", "-v", "verify", "--oracle-max", "4"]
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert b"s\n" in first.stderr  # timings are logged on stderr only
