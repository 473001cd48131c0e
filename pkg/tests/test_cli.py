import csv
import io
import json

import pytest
from click.testing import CliRunner

from ogcoh import data
from ogcoh.cli import main
from ogcoh.graded import GradedDims
from ogcoh.report import loads, render


@pytest.fixture
def run():
    runner = CliRunner()

    def go(*args):
        return runner.invoke(main, list(args))
    return go


def test_tables_csv(run):
    r = run("tables", "--variety", "K", "--format", "csv")
    assert r.exit_code == 0
    assert "Sigma,1,0,28,0,70,0,28,0,1,0,0,0,0" in r.output.splitlines()


def test_tables_json(run):
    r = run("tables", "--variety", "M", "--format", "json")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["tables"]["Omega"][0] == 1
    assert doc["schema_version"] == "1"
    assert len(doc["tables"]["Mtilde"]) == 21
    assert doc["euler"] == 123606


def test_tables_md(run):
    r = run("tables", "--variety", "M", "--format", "md")
    row = next(l for l in r.output.splitlines() if l.startswith("| SigmaHat"))
    assert row.endswith("| 7247 | 600 | 25 | 1 | 0 |")


def test_betti(run):
    doc = json.loads(run("betti", "--variety", "M", "--format", "json").output)
    b16 = doc["betti"][16]
    assert b16["exact"] == 277
    assert b16["rules"] == ["sym-refined-upper", "e2-lower"]
    k = json.loads(run("betti", "--variety", "K", "--format", "json").output)
    assert k["betti"][0]["exact"] == 1
    assert (k["betti"][6]["lower"], k["betti"][6]["upper"]) == (1178, 1502)
    assert any("b_2 = 23" in w for w in k["warnings"])


def test_betti_rules_option(run):
    doc = json.loads(run("betti", "-v", "K", "--rules", "cor1", "--format", "json").output)
    assert doc["betti"][4]["upper"] == 198
    assert run("betti", "-v", "all", "--rules", "cor2").exit_code == 2


def test_euler(run):
    r = run("euler", "--format", "csv")
    assert r.output.splitlines() == ["variety,euler", "M,123606", "K,1280"]


def test_facts(run):
    m = run("facts", "--variety", "M", "--format", "json")
    doc = json.loads(m.output)
    f = next(x for x in doc["facts"] if x["id"] == "m-i-surjective")
    assert f["status"] == "imported" and "prop Sigma and Omega (1)" in f["citation"]
    both = json.loads(run("facts", "--format", "json").output)
    assert [d["variety"] for d in both] == ["M", "K"]
    k = next(d for d in both if d["variety"] == "K")
    assert any(x["id"] == "k-ibar-surjective" and x["status"] == "verified_by_engine" for x in k["facts"])


def test_local_model(run):
    r = run("local-model")
    assert r.exit_code == 0
    assert "bijective" in r.output
    assert json.loads(run("local-model", "--format", "json").output)["ok"] is True


def test_usage_errors(run):
    assert run("tables", "--variety", "X").exit_code == 2
    assert run("tables", "--format", "xml").exit_code == 2
    assert run("nonsense").exit_code == 2


def test_verify_m(run):
    r = run("verify", "--variety", "M")
    assert r.exit_code == 0, r.output
    assert "chi(M)=123606 OK" in r.output
    assert "d1 surjective: degrees 0..20 OK" in r.output


def test_verify_k_reports_euler(run):
    r = run("verify", "--variety", "K")
    assert "d1 surjective: degrees 0..16 OK" in r.output
    # the stated chi(K) is not reproduced by the alternating sum
    assert "FAIL [3] chi(K)=1280" in r.output
    assert r.exit_code == 1


def test_verify_fault_injection(run, monkeypatch):
    bad = GradedDims.even([1, 24, 300, 2899, 22150, 126157, 22150, 2899, 300, 24, 1])
    monkeypatch.setitem(data.RESOLUTION_ROWS, "M", bad)
    r = run("verify", "--variety", "M")
    assert r.exit_code == 1
    assert "Mtilde[b10]" in r.output


@pytest.mark.parametrize("kind", ["tables", "betti", "euler", "facts"])
def test_json_round_trip(run, kind):
    text = run(kind, "--format", "json").output
    docs = loads(text)
    assert render(docs, "json", kind) == text
    for d in json.loads(text):
        for k in ("variety", "schema_version", "tables", "betti", "euler", "facts", "warnings"):
            assert k in d


def _ints(obj):
    if isinstance(obj, bool):
        return []
    if isinstance(obj, int):
        return [obj]
    if isinstance(obj, float):
        raise AssertionError("float in output")
    if isinstance(obj, dict):
        return [x for v in obj.values() for x in _ints(v)]
    if isinstance(obj, list):
        return [x for v in obj for x in _ints(v)]
    return []


def test_renderings_agree(run):
    doc = json.loads(run("tables", "-v", "K", "--format", "json").output)
    rows = list(csv.reader(io.StringIO(run("tables", "-v", "K", "--format", "csv").output)))[1:]
    from_csv = {r[0]: [int(x) for x in r[1:]] for r in rows}
    assert from_csv == doc["tables"]
    md = run("tables", "-v", "K", "--format", "md").output
    for name, vals in doc["tables"].items():
        line = next(l for l in md.splitlines() if l.startswith(f"| {name} |"))
        cells = [int(c) for c in line.strip("| ").split(" | ")[1:]]
        assert cells == vals[::2]


def test_no_floats_in_json(run):
    for kind in ("tables", "betti", "euler", "facts"):
        assert _ints(json.loads(run(kind, "--format", "json").output))


def test_width_env(run, monkeypatch):
    monkeypatch.setenv("OGCOH_WIDTH", "40")
    out = run("facts", "-v", "K").output
    assert max(len(l) for l in out.splitlines()) <= 40
