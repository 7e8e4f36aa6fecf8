"""Command-line behaviour: output formats, exit codes, witness round trips."""

import json

import pytest

from rankarg.catalog import example1, figure2
from rankarg.cli import main, ranking_text
from rankarg.framework import serialize_apx
from rankarg.semantics import SemanticsRef


@pytest.fixture
def ex1_path(tmp_path):
    path = tmp_path / "example1.apx"
    path.write_text(serialize_apx(example1()))
    return str(path)


@pytest.fixture
def fig2_path(tmp_path):
    path = tmp_path / "figure2.apx"
    path.write_text(serialize_apx(figure2()))
    return str(path)


def test_rank_cat_text(ex1_path, capsys):
    assert main(["rank", ex1_path, "cat"]) == 0
    assert capsys.readouterr().out.strip() == "b > d > e > c > a"


def test_rank_mt_text(ex1_path, capsys):
    assert main(["rank", ex1_path, "mt"]) == 0
    assert capsys.readouterr().out.strip() == "b > e > d > c > a"


def test_rank_tuples_on_cycle_exits_3(ex1_path, capsys):
    assert main(["rank", ex1_path, "tuples"]) == 3
    assert "acyclic" in capsys.readouterr().err


def test_rank_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.apx"
    bad.write_text("arg(a). att(a,b).")
    assert main(["rank", str(bad), "cat"]) == 2
    assert "undeclared" in capsys.readouterr().err


def test_rank_missing_file_exits_2(tmp_path):
    assert main(["rank", str(tmp_path / "nope.apx"), "cat"]) == 2


def test_rank_json_round_trip(ex1_path, capsys):
    assert main(["rank", ex1_path, "cat", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["semantics"] == "cat"
    assert record["classes"] == [["b"], ["d"], ["e"], ["c"], ["a"]]
    assert record["incomparable"] == []
    assert record["scores"]["b"] == 1.0
    assert record["config"]["epsilon"] == 0.1
    # classes rebuild the same ranking the engine produces
    from rankarg.orders import Ranking

    rebuilt = Ranking.from_classes(record["classes"])
    engine = SemanticsRef("cat").ranking(example1())
    assert all(rebuilt.geq(a, b) == engine.geq(a, b)
               for a in rebuilt.arguments for b in rebuilt.arguments)


def test_rank_epsilon_flag_changes_scores(ex1_path, capsys):
    assert main(["rank", ex1_path, "saf", "--format", "json", "--epsilon", "0.5"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["scores"]["b"] == pytest.approx(1 / 1.5, abs=1e-9)


def test_survey_contains_all_rows(ex1_path, capsys):
    assert main(["survey", ex1_path]) == 0
    out = capsys.readouterr().out
    lines = {line.split()[0]: line for line in out.strip().splitlines()}
    assert set(lines) == {"cat", "saf", "dbs", "bbs", "tuples", "mt", "grounded"}
    assert "b > d > e > c > a" in lines["cat"]
    assert "b > e > d > c > a" in lines["saf"]
    assert "b > d > c > e > a" in lines["dbs"]
    assert "b > d > c > e > a" in lines["bbs"]
    assert "not applicable" in lines["tuples"]


def test_survey_on_acyclic_input_includes_tuples_ranking(fig2_path, capsys):
    assert main(["survey", fig2_path]) == 0
    out = capsys.readouterr().out
    tuples_row = next(line for line in out.splitlines() if line.startswith("tuples"))
    assert "not applicable" not in tuples_row
    assert ">" in tuples_row


def test_check_violated_prints_witness(fig2_path, capsys):
    assert main(["check", fig2_path, "AvsFD", "cat"]) == 1
    out = capsys.readouterr().out
    assert "Violated" in out and "arg(" in out
    assert "a should be above" in out


def test_check_holds_exits_0(ex1_path, capsys):
    assert main(["check", ex1_path, "Tot", "saf"]) == 0
    assert "Holds" in capsys.readouterr().out


def test_check_not_applicable_exits_0(ex1_path, capsys):
    assert main(["check", ex1_path, "SC", "cat"]) == 0
    assert "NotApplicable" in capsys.readouterr().out


def test_check_inconclusive_exits_3(fig2_path, capsys):
    assert main(["check", fig2_path, "VP", "mt", "--mt-cap", "4"]) == 3


def test_check_unknown_property_exits_2(ex1_path):
    assert main(["check", ex1_path, "XYZ", "cat"]) == 2


def test_partial_ranking_text_shows_incomparable_pairs(tmp_path, capsys):
    apx = tmp_path / "partial.apx"
    from rankarg.catalog import bundled

    apx.write_text(serialize_apx(bundled()["tuples_incomparable"]))
    assert main(["rank", str(apx), "tuples"]) == 0
    out = capsys.readouterr().out
    assert "?" in out  # at least one incomparable pair is listed


def test_fuzz_writes_reports_and_witness_replays(tmp_path, capsys):
    out_dir = tmp_path / "report"
    code = main(["fuzz", "--out", str(out_dir), "--trials", "30", "--mt-trials", "6",
                 "--semantics", "cat", "--properties", "VP,CP,AvsFD", "--seed", "7"])
    assert code == 0
    matrix = (out_dir / "matrix.txt").read_text()
    assert "CP" in matrix
    records = [json.loads(line) for line in (out_dir / "records.jsonl").read_text().splitlines()]
    assert {r["property"] for r in records} == {"VP", "CP", "AvsFD"}
    cp = next(r for r in records if r["property"] == "CP")
    assert cp["violations"] > 0
    witness_files = sorted((out_dir / "witnesses").glob("*.json"))
    assert witness_files
    capsys.readouterr()
    assert main(["witness", str(witness_files[0])]) == 0
    assert "confirmed" in capsys.readouterr().out


def test_witness_rejects_garbage(tmp_path):
    bad = tmp_path / "w.json"
    bad.write_text("{}")
    assert main(["witness", str(bad)]) == 2


def test_witness_not_reproduced(tmp_path, capsys):
    good = tmp_path / "w.json"
    good.write_text(json.dumps({
        "property": "VP",
        "semantics": "cat",
        "apx": serialize_apx(example1()),
    }))
    assert main(["witness", str(good)]) == 1
    assert "NOT reproduced" in capsys.readouterr().out


def test_ranking_text_total_single_line():
    text = ranking_text(SemanticsRef("grounded").ranking(example1()))
    assert text == "b = e > a = c = d"
