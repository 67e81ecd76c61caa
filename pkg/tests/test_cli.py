from __future__ import annotations

import json
import shutil

import pytest

from grantrec.cli import main
from grantrec.recommend import parse_report_json

from conftest import FIXTURES


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli")
    shutil.copytree(FIXTURES / "demo_root", path / "root")
    shutil.copy(FIXTURES / "keywords.tsv", path / "keywords.tsv")
    return path


def run(*argv) -> int:
    return main([str(a) for a in argv])


@pytest.fixture(scope="module")
def pipeline_outputs(workdir):
    corpus = workdir / "corpus.json"
    surface = workdir / "surface.json"
    rules = workdir / "rules.json"
    historical = workdir / "historical.json"
    table = workdir / "keywords.tsv"

    assert run("ingest", "--root", workdir / "root", "--out", corpus, "--table", table) == 0
    assert run("score", "surface", "--grant", "infotech", "--corpus", corpus,
               "--table", table, "--out", surface) == 0
    assert run("mine", "--corpus", corpus, "--grant", "infotech",
               "--min-support", "0.1", "--min-confidence", "0.6",
               "--out", rules) == 0
    assert run("score", "historical", "--grant", "infotech", "--corpus", corpus,
               "--rules", rules, "--out", historical) == 0
    return {"corpus": corpus, "surface": surface, "rules": rules,
            "historical": historical, "table": table}


def test_ingest_writes_a_corpus_bundle(pipeline_outputs):
    data = json.loads(pipeline_outputs["corpus"].read_text("utf-8"))
    assert data["document_count"] == len(data["documents"])
    assert {r["id"] for r in data["researchers"]} == {
        "1-A", "1-B", "1-C", "1-D", "1-E", "1-F",
    }


def test_taxonomy_stats_prints_counts(workdir, capsys):
    assert run("taxonomy", "stats", "--table", workdir / "keywords.tsv") == 0
    out = capsys.readouterr().out
    assert "categories:    4" in out
    assert "keywords:      28" in out


def test_surface_scores_match_expected_candidates(pipeline_outputs):
    data = json.loads(pipeline_outputs["surface"].read_text("utf-8"))
    assert data["channel"] == "surface"
    by_id = {m["researcher_id"]: m for m in data["matches"]}
    assert set(by_id) == {"1-A", "1-B", "1-C", "1-D", "1-E"}  # 1-F changed fields
    assert by_id["1-C"]["matched_keywords"] == ["Machine Learning", "Neural Network"]
    for match in data["matches"]:
        assert 0.0 <= match["normalized_score"] <= 1.0


def test_mined_rules_have_metrics(pipeline_outputs):
    data = json.loads(pipeline_outputs["rules"].read_text("utf-8"))
    assert data["grant_id"] == "infotech"
    assert data["rules"], "mining the fixture should find rules"
    for rule in data["rules"]:
        assert rule["support"] <= rule["confidence"]
        assert not set(rule["antecedent"]) & set(rule["consequent"])


def test_historical_scores_include_rule_matched_researchers(pipeline_outputs):
    data = json.loads(pipeline_outputs["historical"].read_text("utf-8"))
    ids = {m["researcher_id"] for m in data["matches"]}
    assert "1-C" in ids
    assert "1-F" in ids  # matched through paper items despite changed keywords


def test_recommend_table_report(pipeline_outputs, workdir, capsys):
    assert run("recommend", "--grant", "infotech", "--alpha", "0.5",
               "--threshold", "0.4",
               "--surface", pipeline_outputs["surface"],
               "--historical", pipeline_outputs["historical"],
               "--format", "table") == 0
    out = capsys.readouterr().out
    assert "researcher" in out
    assert "1-C" in out


def test_recommend_json_report_round_trips(pipeline_outputs, workdir):
    out_path = workdir / "report.json"
    assert run("recommend", "--grant", "infotech", "--alpha", "0.5",
               "--surface", pipeline_outputs["surface"],
               "--historical", pipeline_outputs["historical"],
               "--format", "json", "--out", out_path) == 0
    report = parse_report_json(out_path.read_text("utf-8"))
    assert report.grant_id == "infotech"
    assert report.params.alpha == 0.5
    assert [e.researcher_id for e in report.entries]


def test_recommend_rejects_mismatched_grant(pipeline_outputs, capsys):
    code = run("recommend", "--grant", "other", "--alpha", "0.5",
               "--surface", pipeline_outputs["surface"],
               "--historical", pipeline_outputs["historical"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_mine_rejects_bad_corpus_grant_pair(pipeline_outputs, workdir, capsys):
    rules = workdir / "rules-other.json"
    assert run("mine", "--corpus", pipeline_outputs["corpus"], "--grant", "ghost",
               "--out", rules) == 0
    data = json.loads(rules.read_text("utf-8"))
    # unknown grant has no historical docs: researcher-side rules only
    assert data["grant_id"] == "ghost"


def test_score_historical_rejects_mismatched_rules_file(pipeline_outputs, workdir, capsys):
    code = run("score", "historical", "--grant", "agrifood",
               "--corpus", pipeline_outputs["corpus"],
               "--rules", pipeline_outputs["rules"],
               "--out", workdir / "never.json")
    assert code == 2
    assert "error:" in capsys.readouterr().err
