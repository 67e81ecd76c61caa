"""End-to-end orchestration shared by the CLI and the HTTP service."""

from __future__ import annotations

from .assoc import (
    AssociationRule,
    HistoricalMatch,
    MiningParams,
    TransactionDB,
    build_transactions,
    historical_score,
    merge_dbs,
    mine_rules,
    owned_by,
)
from .corpus import OwnerRole
from .dataset import Dataset
from .recommend import (
    RecommendationList,
    WeightParams,
    rank_candidates,
)
from .relevance import SurfaceMatch, surface_rankings
from .taxonomy import KeywordTable


def surface_channel(dataset: Dataset, table: KeywordTable, grant_id: str) -> list[SurfaceMatch]:
    return surface_rankings(
        grant_id, dataset.researchers.values(), dataset.corpus, table
    )


def grant_rule_db(dataset: Dataset, grant_id: str) -> TransactionDB:
    """Merged transaction db: researcher-side documents plus the grant's
    historical documents."""
    researcher_db = build_transactions(
        dataset.corpus, owned_by(OwnerRole.RESEARCHER), dataset.profile
    )
    historical_db = build_transactions(
        dataset.corpus, owned_by(OwnerRole.HISTORICAL, grant_id), dataset.profile
    )
    return merge_dbs(researcher_db, historical_db)


def mine_grant_rules(
    dataset: Dataset, grant_id: str, params: MiningParams
) -> set[AssociationRule]:
    db = grant_rule_db(dataset, grant_id)
    if db.transaction_count == 0:
        return set()
    return mine_rules(db, params)


def historical_channel(
    dataset: Dataset, grant_id: str, rules
) -> list[HistoricalMatch]:
    """Per-researcher rule matches, best score first; zero-match researchers omitted."""
    matches = [
        historical_score(r, grant_id, rules, dataset.corpus, dataset.profile)
        for _, r in sorted(dataset.researchers.items())
    ]
    ranked = [m for m in matches if m.matched_rules]
    ranked.sort(key=lambda m: (-m.normalized_score, m.researcher_id))
    return ranked


def recommendation_for_grant(
    dataset: Dataset,
    table: KeywordTable,
    grant_id: str,
    params: WeightParams,
    threshold: float,
    mining: MiningParams = MiningParams(),
) -> RecommendationList:
    surface = surface_channel(dataset, table, grant_id)
    rules = mine_grant_rules(dataset, grant_id, mining)
    historical = historical_channel(dataset, grant_id, rules)
    return rank_candidates(grant_id, surface, historical, params, threshold)
