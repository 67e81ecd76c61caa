"""Loaded data and per-grant precomputed channel scores.

Channel scores are computed once per load; each request only re-runs the
weighted fusion and thresholding. Reload builds a fresh snapshot and swaps
the reference, so in-flight requests keep reading the snapshot they started
with.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..assoc import AssociationRule, HistoricalMatch, MiningParams
from ..dataset import Dataset, load_root
from ..jsonio import (
    historical_match_from_dict,
    load_json,
    surface_match_from_dict,
)
from ..pipeline import historical_channel, mine_grant_rules, surface_channel
from ..relevance import SurfaceMatch
from ..taxonomy import KeywordTable, load_keyword_table
from .config import ServiceConfig


@dataclass
class GrantChannels:
    surface: list[SurfaceMatch]
    historical: list[HistoricalMatch]
    rules: tuple[AssociationRule, ...]


@dataclass
class Snapshot:
    dataset: Dataset
    table: KeywordTable
    channels: dict[str, GrantChannels]

    def grant_ids(self) -> list[str]:
        return sorted(self.channels)


def _apply_overrides(channels: dict[str, GrantChannels], path: str) -> None:
    overrides = load_json(path)
    for grant_id, data in overrides.items():
        current = channels.get(grant_id) or GrantChannels([], [], ())
        if "surface" in data:
            current.surface = [surface_match_from_dict(m) for m in data["surface"]]
        if "historical" in data:
            current.historical = [
                historical_match_from_dict(m) for m in data["historical"]
            ]
        channels[grant_id] = current


def load_snapshot(config: ServiceConfig) -> Snapshot:
    table = load_keyword_table(config.table)
    dataset = load_root(
        config.root,
        table=table,
        stopwords_path=config.stopwords,
        lexicon_path=config.lexicon,
    )
    mining = MiningParams(
        config.min_support, config.min_confidence, config.max_itemset_width
    )
    channels: dict[str, GrantChannels] = {}
    for grant_id in dataset.grant_ids():
        rules = mine_grant_rules(dataset, grant_id, mining)
        channels[grant_id] = GrantChannels(
            surface_channel(dataset, table, grant_id),
            historical_channel(dataset, grant_id, rules),
            tuple(sorted(rules, key=AssociationRule.sort_key)),
        )
    if config.score_overrides:
        _apply_overrides(channels, config.score_overrides)
    return Snapshot(dataset, table, channels)


class StateHolder:
    """Holds the current snapshot; reload swaps it atomically."""

    def __init__(self, config: ServiceConfig):
        self._config = config
        self._snapshot = load_snapshot(config)

    @property
    def snapshot(self) -> Snapshot:
        return self._snapshot

    def reload(self) -> Snapshot:
        self._snapshot = load_snapshot(self._config)
        return self._snapshot
