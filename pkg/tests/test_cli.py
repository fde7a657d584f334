"""The thin-client CLI: round trips, exit codes, output formats."""

import json

import pytest

from cattell_szondi import checks, cli
from cattell_szondi.core import TRAITS

ALL_FIVES = {t.value: 5 for t in TRAITS}
NORM_DOC = {"type": "spp", "factors": {"h": "+", "s": "+", "e": "-", "hy": "-",
                                       "k": "-", "p": "-", "d": "+", "m": "+"}}


def write_doc(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_right_round_trip(tmp_path, capsys):
    traits = dict(ALL_FIVES, LE=9)
    in_path = write_doc(tmp_path, "ppp.json", {"type": "ppp", "traits": traits})
    out_path = str(tmp_path / "box.json")
    code = cli.main(["right", "--in", in_path, "--out", out_path,
                     "--enumerate", "1"])
    assert code == 0
    box = json.loads(open(out_path).read())
    assert box["cardinality"] == "1"
    assert box["sample"][0]["k"] == "0"


def test_right_reads_stdin(monkeypatch, capsys, tmp_path):
    import io
    import sys
    doc = json.dumps({"type": "ppp_set", "profiles": []})
    monkeypatch.setattr(sys, "stdin", io.StringIO(doc))
    assert cli.main(["right"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["cardinality"] == "429981696"


def test_left_explain(tmp_path, capsys):
    in_path = write_doc(tmp_path, "spp.json", NORM_DOC)
    assert cli.main(["left", "--in", in_path, "--explain"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["cardinality"] == "0"
    assert "B" in body["explain"]


def test_invalid_document_exits_1(tmp_path, capsys):
    in_path = write_doc(tmp_path, "bad.json", {"type": "ppp", "traits": {"A": 5}})
    assert cli.main(["right", "--in", in_path]) == 1
    assert "rejected" in capsys.readouterr().err


def test_unparseable_json_exits_1(tmp_path, capsys):
    path = tmp_path / "garbage.json"
    path.write_text("{not json")
    assert cli.main(["right", "--in", str(path)]) == 1


def test_missing_input_file_exits_3(capsys):
    assert cli.main(["right", "--in", "/nonexistent/ppp.json"]) == 3


def test_check_passes(capsys):
    assert cli.main(["check", "--trials", "20", "--seed", "2"]) == 0
    out = capsys.readouterr().out
    assert "all suites passed" in out
    assert out.count("PASS") == 18


def test_check_violation_exits_2(monkeypatch, capsys):
    from cattell_szondi.checks import CheckReport, SuiteResult

    def broken(trials, seed, table=None):
        return CheckReport(trials=trials, seed=seed, suites=[
            SuiteResult(name="theorem1-biconditional", trials=trials,
                        passed=False, counterexample="F=[...] P=[...]"),
        ])

    monkeypatch.setattr(checks, "run_checks", broken)
    assert cli.main(["check", "--trials", "5", "--seed", "1"]) == 2
    out = capsys.readouterr().out
    assert "FAIL theorem1-biconditional" in out
    assert "property violation" in out


def test_table_dump(tmp_path):
    out_path = str(tmp_path / "table.csv")
    assert cli.main(["table", "dump", "--out", out_path]) == 0
    lines = open(out_path).read().strip().splitlines()
    assert len(lines) == 281
    assert lines[1].strip() == "A,1,(atom h -!!)"


def test_norm_demo_output(capsys):
    assert cli.main(["norm-demo"]) == 0
    out = capsys.readouterr().out
    assert "left polarity: EMPTY" in out
    assert "failing traits: B G H Q3 PS ST SR PI OT AP TI" in out
    assert "discrepancy: LE" in out and "discrepancy: M" in out


def test_find_empty(capsys):
    assert cli.main(["find-empty", "--samples", "30", "--seed", "6",
                     "--max-examples", "1"]) == 0
    out = capsys.readouterr().out
    assert "empty right-polarity images:" in out


def test_bigfive_formula(capsys):
    assert cli.main(["bigfive", "HighAnxiety", "7"]) == 0
    assert capsys.readouterr().out.startswith("(or (atom d -)")


def test_bigfive_reversal_exit_1(capsys):
    assert cli.main(["bigfive", "Extraversion", "10"]) == 1
    assert cli.main(["bigfive", "Extraversion", "10", "--corrected-reversal"]) == 0


def test_write_failure_exits_3(tmp_path, capsys):
    in_path = write_doc(tmp_path, "spp.json", NORM_DOC)
    assert cli.main(["left", "--in", in_path,
                     "--out", "/nonexistent/dir/out.json"]) == 3
