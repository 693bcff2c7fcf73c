import io
import json

import pytest

from simpsep.cli import main
from simpsep.sset import standard_simplex


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_enum_delta():
    code, out = run("enum", "delta", "2", "1", "--epi")
    assert code == 0
    assert out.splitlines() == ["0 1 1", "0 0 1", "# 2 epi morphisms [2] -> [1]"]


def test_enum_gamma_onto_and_poset():
    code, out = run("enum", "gamma", "1", "2", "--onto")
    assert code == 0 and "# 2 onto morphisms [1] => [2]" in out
    code, out = run("enum", "gamma", "0", "4", "--poset")
    assert code == 0 and "subset-not-leq {0,4} {0,2,4}" in out


@pytest.mark.parametrize("lemma,extra", [
    ("duality", ["--k", "1", "--kp", "3"]),
    ("order", ["--k", "1", "--kp", "3"]),
    ("remark", ["--k", "0", "--kp", "4"]),
    ("admitted3", ["--k", "1", "--kp", "3"]),
    ("admitted1", ["--k", "1", "--kp", "4", "--scope", "uncovered"]),
    ("face-section", ["--k", "1", "--kp", "3"]),
    ("simpset", ["--sset", "delta1"]),
    ("degenlemma", ["--sset", "delta1"]),
    ("same-cell", ["--sset", "delta1"]),
    ("compat", ["--sset", "delta1", "--cell", "e01", "--kmax", "2", "--samples", "10"]),
])
def test_checks_pass(lemma, extra):
    code, out = run("check", lemma, *extra)
    assert code == 0, out
    assert f"# {lemma}:" in out and "0 violations" in out


def test_failing_check_exits_one():
    code, out = run("check", "admitted1", "--k", "0", "--kp", "3")
    assert code == 1 and "violations" in out


def test_separate_and_verify(tmp_path):
    cert = tmp_path / "cert.json"
    code, out = run("separate", "boundary2", "e01:1/2,1/2", "e12:1/3,2/3", "-o", str(cert), "--jobs", "1")
    assert code == 0, out
    doc = json.loads(cert.read_text())
    assert doc["kmax"] == 18 and doc["branch"] == "distinct-cells"
    code, out = run("verify", str(cert), "--probes", "20")
    assert code == 0 and out.startswith("OK:")
    doc["eta"] = "0.5"
    cert.write_text(json.dumps(doc))
    code, out = run("verify", str(cert))
    assert code == 1 and out.startswith("FAIL")


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("SIMPSEP_SEED", "7")
    a = run("check", "compat", "--sset", "delta1", "--cell", "e01", "--kmax", "1", "--samples", "5")
    monkeypatch.setenv("SIMPSEP_SEED", "oops")
    assert run("check", "compat", "--sset", "delta1")[0] == 2
    assert a[0] == 0


@pytest.mark.parametrize("argv", [
    ["separate", "delta1", "e01:1/2,1/2", "e01:1/2,1/2"],
    ["separate", "delta1", "e01:0.5,0.5", "v0:1"],
    ["separate", "delta1", "e01:1/2", "v0:1"],
    ["separate", "delta1", "zz:1", "v0:1"],
    ["separate", "nowhere.json", "e01:1/2,1/2", "v0:1"],
    ["frobnicate"],
    ["check", "compat", "--eps", "0.5"],
    ["verify", "does-not-exist.json"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_validate_sset(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps(standard_simplex(2).to_json()))
    code, out = run("validate-sset", str(good))
    assert code == 0 and "valid: dimension 2" in out
    doc = standard_simplex(2).to_json()
    doc["faces"]["t012"] = list(reversed(doc["faces"]["t012"]))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out = run("validate-sset", str(bad))
    assert code == 1 and out.startswith("invalid")
    junk = tmp_path / "junk.json"
    junk.write_text("{")
    assert run("validate-sset", str(junk))[0] == 1
