import json
from importlib import resources

import pytest

from symclass.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_powersum_json(capsys):
    code, out, _ = call(capsys, "powersum", "--n", "3", "--m", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["classes"] == [{"class": [3], "coeff": "1"}, {"class": [1, 1, 1], "coeff": "3"}]


def test_table_text(capsys):
    code, out, _ = call(capsys, "table", "--max-m", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert lines[2] == "p_3(Xi) = 1/4 a_4 + a_21 + 1/2 a_2"


def test_table_json_matches_golden_bytes(capsys):
    code, out, _ = call(capsys, "table", "--max-m", "6", "--format", "json")
    golden = resources.files("symclass").joinpath("data/jm_table.json").read_text()
    assert code == 0 and out == golden


def test_classprod_and_astruct(capsys):
    code, out, _ = call(capsys, "classprod", "--n", "4", "--alpha", "2,1,1", "--beta", "2,1,1")
    assert code == 0 and out.strip() == "C_211 * C_211 in S_4 = 3 C_31 + 2 C_22 + 6 C_1111"
    code, out, _ = call(capsys, "astruct", "--alpha", "2", "--beta", "2")
    assert code == 0 and out.strip() == "a_2 x a_2 = a_22 + 4 a_3 + 2 a_11"


def test_expand(capsys):
    code, out, _ = call(capsys, "expand", "--m", "1", "--kappa", "1", "--check-n", "3", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["terms"] == [{"kappa": [2, 1], "coeff": "1/2"}, {"kappa": [2], "coeff": "1"}]


def test_operator_dump_roundtrip(capsys):
    from symclass.diffop import PolyDiffOp
    from symclass.vertex import d_operator

    code, out, _ = call(capsys, "operator", "--name", "D", "--k", "2", "--max-deg", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ring"] == "rational"
    assert PolyDiffOp.from_json(doc) == d_operator(2, 4)
    code, out, _ = call(capsys, "operator", "--name", "T", "--k", "1", "--max-deg", "3", "--format", "json")
    assert json.loads(out)["ring"] == "q-laurent"


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["powersum", "--n", "9", "--m", "1"],
        ["classprod", "--n", "3", "--alpha", "1,2", "--beta", "2"],
        ["classprod", "--n", "3", "--alpha", "4", "--beta", "2"],
        ["astruct", "--alpha", "3", "--beta", "3", "--offset", "2"],
        ["operator", "--name", "H", "--rho", "2,1"],
        ["verify", "--suite", "nope"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(argv) == 2


def test_verify_suite_exit_and_determinism(capsys):
    code, first, _ = call(capsys, "verify", "--suite", "jucys", "--max-n", "5")
    assert code == 0 and "ALL PASSED" in first
    _, second, _ = call(capsys, "verify", "--suite", "jucys", "--max-n", "5")
    assert first == second


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "pn", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert json.loads(json.dumps(doc)) == doc


def test_verify_failure_exit(capsys, monkeypatch):
    from symclass import verify

    def broken(rep, max_n=7, max_deg=8):
        rep.add("broken/check", False, "n=1")

    monkeypatch.setitem(verify.SUITES, "pn", broken)
    code, out, _ = call(capsys, "verify", "--suite", "pn")
    assert code == 1 and "FAIL broken/check  [n=1]" in out
