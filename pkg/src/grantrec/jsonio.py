"""JSON schemas for the channel score files and mined-rule files.

All writers sort keys and collections so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from .assoc import AssociationRule, HistoricalMatch, MiningParams, rule_from_dict, rule_to_dict
from .relevance import SurfaceMatch


def dump_json(data, path: str | Path) -> None:
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    Path(path).write_text(text + "\n", "utf-8")


def load_json(path: str | Path):
    return json.loads(Path(path).read_text("utf-8"))


def surface_match_to_dict(match: SurfaceMatch) -> dict:
    return {
        "researcher_id": match.researcher_id,
        "grant_id": match.grant_id,
        "matched_keywords": sorted(match.matched_keywords),
        "raw_score": match.raw_score,
        "normalized_score": match.normalized_score,
    }


def surface_match_from_dict(data: dict) -> SurfaceMatch:
    return SurfaceMatch(
        data["researcher_id"],
        data["grant_id"],
        frozenset(data["matched_keywords"]),
        data["raw_score"],
        data["normalized_score"],
    )


def historical_match_to_dict(match: HistoricalMatch) -> dict:
    return {
        "researcher_id": match.researcher_id,
        "grant_id": match.grant_id,
        "matched_rules": [rule_to_dict(r) for r in match.matched_rules],
        "raw_score": match.raw_score,
        "normalized_score": match.normalized_score,
    }


def historical_match_from_dict(data: dict) -> HistoricalMatch:
    return HistoricalMatch(
        data["researcher_id"],
        data["grant_id"],
        tuple(rule_from_dict(r) for r in data["matched_rules"]),
        data["raw_score"],
        data["normalized_score"],
    )


def surface_file_dict(grant_id: str, matches: Iterable[SurfaceMatch]) -> dict:
    return {
        "channel": "surface",
        "grant_id": grant_id,
        "matches": [surface_match_to_dict(m) for m in matches],
    }


def historical_file_dict(grant_id: str, matches: Iterable[HistoricalMatch]) -> dict:
    return {
        "channel": "historical",
        "grant_id": grant_id,
        "matches": [historical_match_to_dict(m) for m in matches],
    }


def rules_file_dict(grant_id: str, params: MiningParams, rules: Iterable[AssociationRule]) -> dict:
    ordered = sorted(rules, key=AssociationRule.sort_key)
    return {
        "grant_id": grant_id,
        "min_support": params.min_support,
        "min_confidence": params.min_confidence,
        "max_itemset_width": params.max_itemset_width,
        "rules": [rule_to_dict(r) for r in ordered],
    }


def rules_from_file_dict(data: dict) -> list[AssociationRule]:
    return [rule_from_dict(r) for r in data["rules"]]
