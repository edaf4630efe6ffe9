import csv
import io
import json

import pytest
from click.testing import CliRunner

from nielsenbeta.cli import main
from nielsenbeta.core import CATALAN, LN2, PI
from nielsenbeta.harness import CheckReport


@pytest.fixture
def run():
    runner = CliRunner()

    def _run(*args):
        return runner.invoke(main, list(args))
    return _run


def test_eval_text(run):
    r = run("eval", "-x", "1", "-m", "0")
    assert r.exit_code == 0
    assert "0.69314718056" in r.output


def test_eval_domain(run):
    r = run("eval", "-x", "0", "-m", "0")
    assert r.exit_code == 2
    assert "x must be > 0" in r.output


def test_eval_order_cap(run):
    r = run("eval", "-x", "1", "-m", "13")
    assert r.exit_code == 2 and "m must be <= 12" in r.output


def test_eval_json(run):
    r = run("eval", "-x", "0.5", "-m", "1", "--format", "json")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert set(doc) == {"x", "m", "value", "error_bound", "method", "reductions", "reflection_used"}
    assert doc["value"] == pytest.approx(-4 * CATALAN, abs=1e-12)
    assert doc["reflection_used"] is False


def test_eval_reflect(run):
    r = run("eval", "-x", "0.25", "--reflect", "--format", "json")
    doc = json.loads(r.output)
    assert doc["reflection_used"] is True
    assert run("eval", "-x", "0.25", "-m", "1", "--reflect").exit_code == 2


def test_eval_bad_tol(run):
    assert run("eval", "-x", "1", "--tol", "1e-20").exit_code == 2


def test_table_text(run):
    r = run("table", "--x-min", "0.5", "--x-max", "2", "--points", "4", "-m", "0")
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert len(lines) == 5
    assert "1.57079632679" in r.output and "0.30685281944" in r.output


def test_table_bad_points(run):
    assert run("table", "--points", "1").exit_code == 2


def test_table_csv(run):
    r = run("table", "--x-min", "1", "--x-max", "10", "--points", "10", "-m", "0,1,2", "--format", "csv")
    assert r.exit_code == 0
    rows = list(csv.reader(io.StringIO(r.output)))
    assert rows[0] == ["x", "m", "value", "error_bound", "method"]
    assert len(rows) == 31
    assert float(rows[1][2]) == LN2 or abs(float(rows[1][2]) - LN2) < 1e-15


def test_table_json_roundtrip_floats(run):
    r = run("table", "--x-min", "1", "--x-max", "2", "--points", "2", "--format", "json")
    rows = json.loads(r.output)
    assert rows[1]["x"] == 2.0 and rows[1]["value"] == pytest.approx(1 - LN2, abs=1e-15)


def test_table_deterministic(run):
    args = ("table", "--x-min", "0.3", "--x-max", "9", "--points", "7", "-m", "0,3", "--spacing", "log",
            "--format", "csv")
    assert run(*args).output == run(*args).output


def test_verify_single_json(run):
    r = run("verify", "turan", "--format", "json")
    assert r.exit_code == 0
    reports = [CheckReport.from_dict(d) for d in json.loads(r.output)]
    assert len(reports) == 1 and reports[0].worst_margin > 0
    assert json.loads(json.dumps([x.to_dict() for x in reports])) == json.loads(r.output)


def test_verify_unknown(run):
    assert run("verify", "nosuchcheck").exit_code == 2


def test_verify_failure_exit(run, monkeypatch):
    from nielsenbeta import cli

    def fake(cfg):
        return [CheckReport("turan", 1, 1, -1.0, "")]
    monkeypatch.setattr(cli, "run_all", fake)
    r = run("verify", "turan")
    assert r.exit_code == 1 and "FAIL" in r.output


def test_verify_all_text(run):
    r = run("verify", "all")
    assert r.exit_code == 0
    assert "FAIL" not in r.output
    assert r.output.count("PASS") == 22


def test_verify_csv(run):
    r = run("verify", "abs_bound", "omega", "--format", "csv")
    rows = list(csv.reader(io.StringIO(r.output)))
    assert rows[0] == ["check_name", "points_tested", "violations", "worst_margin", "parameters"]
    assert [row[0] for row in rows[1:]] == ["abs_bound", "omega"]


def test_constants_text(run):
    r = run("constants")
    assert r.exit_code == 0
    assert "G       = 0.915965594177" in r.output


def test_constants_json(run):
    doc = json.loads(run("constants", "--format", "json").output)
    assert {"ln2", "pi", "catalan", "zeta2", "special_values"} <= set(doc)
    assert doc["pi"] == PI
    entry = [s for s in doc["special_values"] if s["x"] == 2.5 and s["m"] == 1]
    assert len(entry) == 1 and entry[0]["closed_form"].endswith("- 4G")
