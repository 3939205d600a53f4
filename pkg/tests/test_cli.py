import csv
import io
import json

import pytest

from geomharm.cli import main
from geomharm.exact_core import corrupt_stirling2
from geomharm.series_eval import direct_sum
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_hgp(capsys):
    code, out, _ = run(capsys, "table", "hgp_coeffs", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["0", "x", "x + 3*x^2", "x + 9*x^2 + 11*x^3"]


def test_table_bernoulli(capsys):
    code, out, _ = run(capsys, "table", "bernoulli", "--n", "4")
    assert out.split() == ["1", "-1/2", "1/6", "0", "-1/30"]


@pytest.mark.parametrize("fmt", ["plain", "json", "csv"])
@pytest.mark.parametrize(
    "seq", ["stirling2", "stirling1", "harmonic", "genocchi", "ordered_bell", "gp_coeffs", "poly_bernoulli"]
)
def test_table_all_sequences(capsys, seq, fmt):
    code, out, _ = run(capsys, "table", seq, "--n", "5", "--format", fmt)
    assert code == 0 and out.strip()
    if fmt == "json":
        data = json.loads(out)
        assert data["name"] == seq
        assert data["offset"] == (1 if seq == "genocchi" else 0)
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][0] == "n"


def test_table_ordered_bell(capsys):
    _, out, _ = run(capsys, "table", "ordered_bell", "--n", "4")
    assert out.split() == ["1", "1", "3", "13", "75"]


def test_table_unknown(capsys):
    assert run(capsys, "table", "unknown")[0] == 2


def test_verify_number(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "number", "--max-n", "12")
    assert code == 0
    assert "FAIL" not in out


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "integral", "--max-n", "8", "--format", "json")
    text = out.rstrip("\n")
    reports = json.loads(text)
    assert {"identity_id", "params", "status", "lhs", "rhs", "elapsed"} <= set(reports[0])
    assert json.dumps(json.loads(text), indent=2) == text


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "number", "--max-n", "5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and all(r["status"] == "pass" for r in rows)


def test_verify_bad_flags(capsys):
    assert run(capsys, "verify", "--suite", "all", "--max-n", "1")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "verify", "--jobs", "0")[0] == 2


def _strip_elapsed(text):
    return [{k: v for k, v in r.items() if k != "elapsed"} for r in json.loads(text)]


def test_verify_deterministic_across_jobs(capsys, monkeypatch):
    _, one, _ = run(capsys, "verify", "--suite", "polynomial", "--max-n", "8", "--format", "json", "--jobs", "1")
    _, many, _ = run(capsys, "verify", "--suite", "polynomial", "--max-n", "8", "--format", "json", "--jobs", "6")
    monkeypatch.setenv("GEOMHARM_JOBS", "3")
    _, env, _ = run(capsys, "verify", "--suite", "polynomial", "--max-n", "8", "--format", "json")
    assert _strip_elapsed(one) == _strip_elapsed(many) == _strip_elapsed(env)


def test_verify_reports_corruption(capsys):
    with corrupt_stirling2(5, 2, 16):
        code, out, _ = run(capsys, "verify", "--suite", "polynomial", "--max-n", "6", "--failures-only")
    assert code == 1
    assert "FAIL gp-gf (n=5)" in out


def test_eval(capsys):
    assert run(capsys, "eval", "A", "--m", "1", "--x", "1/2")[1].strip() == "2"
    assert run(capsys, "eval", "hA", "--m", "0", "--x", "1/2")[1].strip() == "0 + -2*ln(1-x)"
    code, out, _ = run(capsys, "eval", "hA", "--m", "1", "--x", "1/2", "--p", "3")
    assert Fraction(out.strip()) == direct_sum(1, 3, Fraction(1, 2), with_harmonic=True)
    code, out, _ = run(capsys, "eval", "A", "--m", "2", "--x", "1/3", "--p", "4", "--numeric")
    exact, numeric = out.split()
    assert Fraction(exact) == direct_sum(2, 4, Fraction(1, 3))
    assert float(numeric) == pytest.approx(float(Fraction(exact)))


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "A", "--m", "1", "--x", "1"),
        ("eval", "hA", "--m", "1", "--x", "0"),
        ("eval", "A", "--m", "1", "--x", "0.5"),
        ("eval", "hA", "--m", "1", "--x", "1/2", "--p", "0"),
    ],
)
def test_eval_domain_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--m", "2", "--p", "10,50", "--x", "1/3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2 * 3 * 2
    assert all(r["equal"] == "True" for r in rows)
    assert run(capsys, "bench", "--reps", "0")[0] == 2
    assert run(capsys, "bench", "--x", "0")[0] == 2


def test_explore(capsys):
    code, out, _ = run(capsys, "explore", "eq13_odd", "--max-n", "6")
    assert code == 0 and "open problem" in out
    assert "PASS" not in out and "FAIL" not in out
    code, out, _ = run(capsys, "explore", "hgp_semiorth", "--max-n", "4", "--format", "json")
    data = json.loads(out)
    assert len(data["values"]) == 16
    assert run(capsys, "explore", "bad")[0] == 2
