import json

import pytest
from click.testing import CliRunner

from codegraph.cli import main
from codegraph.report import InvariantReport, build_report

EXAMPLE = "(0 1^2)(0^3 1)(0^2 1^2)(0^3 1^4)(0 1)(0^3 1^4)"


@pytest.fixture
def run():
    runner = CliRunner()

    def go(*args):
        return runner.invoke(main, list(args))

    return go


def test_invariants_threshold(run):
    r = run("invariants", EXAMPLE, "--family=threshold")
    assert r.exit_code == 0, r.output
    rep = json.loads(r.output)
    assert rep["beta"]["value"] == 18 and rep["beta"]["source"] == "formula"
    assert rep["lambda"]["applicable"] and "rewritten_code" in rep["witness"]
    assert rep["discrepancies"] == []


def test_invariants_chain(run):
    rep = json.loads(run("invariants", "0101", "--family=chain").output)
    assert rep["beta"]["value"] == 1
    assert not rep["tau"]["applicable"]
    assert rep["witness"]["labeling"]["span"] == rep["lambda"]["value"]


def test_invariants_with_oracle(run):
    rep = json.loads(run("invariants", "01", "--oracle=require").output)
    assert rep["beta"]["formula"] == rep["beta"]["oracle"] == 1
    assert rep["beta"]["source"] == "both"
    assert rep["discrepancies"] == []


def test_invariants_reports_discrepancy(run):
    rep = json.loads(run("invariants", "0 1^2 0^3 1", "--oracle=try").output)
    assert {"invariant": "tau_r", "formula_value": 4, "oracle_value": 3} in rep["discrepancies"]
    assert rep["tau_r"]["source"] == "both" and rep["tau_r"]["value"] == 4


def test_exit_codes(run):
    assert run("invariants", "10").exit_code == 2
    assert run("invariants", "0x1").exit_code == 2
    r = run("invariants", "0^20 1", "--oracle=require")
    assert r.exit_code == 3
    r = run("invariants", "0^20 1", "--oracle=try")
    assert r.exit_code == 0
    assert "oracle skipped" in json.loads(r.output)["beta"]["note"]
    assert run("invariants", "0 1", "--budget-beta=0").exit_code == 2


def test_report_round_trip():
    rep = build_report(EXAMPLE, "threshold", "off")
    again = InvariantReport.from_json(rep.to_json())
    assert again == rep and again.to_json() == rep.to_json()
    rep = build_report("0^2 1 0 1", "chain", "try")
    assert InvariantReport.from_json(rep.to_json()) == rep


def test_report_is_deterministic(run):
    a = run("invariants", "0^2 1^2 0 1", "--oracle=try").output
    b = run("invariants", "0^2 1^2 0 1", "--oracle=try").output
    assert a == b


def test_sweep_trivial(run):
    r = run("sweep", "--max-n=2", "--family=threshold", "--invariant=beta")
    lines = [json.loads(x) for x in r.output.splitlines()]
    assert r.exit_code == 0 and len(lines) == 2
    assert lines[0]["code"] == "(0 1)" and lines[0]["agree"]
    assert lines[1]["summary"]["codes_tested"] == 1 and lines[1]["summary"]["agreements"] == 1


def test_sweep_threshold_beta(run):
    r = run("sweep", "--max-n=8", "--family=threshold", "--invariant=beta")
    s = json.loads(r.output.splitlines()[-1])["summary"]
    assert s["codes_tested"] == 127 and s["bounds_violations"] == []
    assert s["theorem_covered_discrepancies"] == []


def test_sweep_chain_lambda_csv(run):
    r = run("sweep", "--max-n=6", "--family=chain", "--invariant=lambda", "--format=csv")
    rows = r.stdout.splitlines()
    assert rows[0] == "code,family,n,invariant,formula,oracle,agree,note"
    assert len(rows) == 1 + 31


def test_sweep_both_families(run):
    r = run("sweep", "--max-n=6", "--family=both", "--invariant=beta", "--literal")
    s = json.loads(r.output.splitlines()[-1])["summary"]
    assert s["rows"] == 62 and s["chain_relation_violations"] == []
    assert s["discrepancies"]  # literal chain rules miss the (0 1) seed cases


def test_sweep_budget(run):
    assert run("sweep", "--max-n=16").exit_code == 3
    r = run("sweep", "--max-n=5", "--invariant=tau", "--budget-tau=2")
    s = json.loads(r.output.splitlines()[-1])["summary"]
    assert s["skipped"] > 0


def test_oracle_command(run, tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    out = json.loads(run("oracle", str(f)).output)
    assert out["beta"] == 1 and out["lambda"] == 3 and out["basis"] == [0]
    out = json.loads(run("oracle", str(f), "--invariant=tau", "--invariant=tau_r").output)
    assert out["tau"] == 1 and out["tau_r"] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 9\n")
    assert run("oracle", str(bad)).exit_code == 2
    split = tmp_path / "split.txt"
    split.write_text("3 1\n0 1\n")
    assert run("oracle", str(split)).exit_code == 1


def test_export(run):
    r = run("export", "0101010101", "--family=chain")
    assert r.output.splitlines()[0] == "10 15"
    r = run("export", "0 1", "--to", "dot")
    assert r.output.startswith("graph G {")
    assert run("export", "1").exit_code == 2
