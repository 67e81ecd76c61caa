"""Grant-to-researcher recommendation engine.

Two score channels are fused per researcher and grant: a TF-IDF weighted
keyword-match score over the grant's public call documents, and an
association-rule lift score mined from historical abstracts. The weighted
total is thresholded into a shortlist.
"""

from .assoc import (
    AssociationRule,
    HistoricalMatch,
    MiningParams,
    Transaction,
    TransactionDB,
    build_transactions,
    historical_score,
    match_rules_to_researcher,
    merge_dbs,
    mine_rules,
    rule_metrics,
)
from .corpus import (
    CleanDocument,
    Corpus,
    DocKind,
    DocOwner,
    OwnerRole,
    RawDocument,
    fetch_remote,
    ingest_corpus,
    segment_sentences,
    strip_html,
)
from .dataset import Dataset, load_dataset, load_root, save_dataset
from .recommend import (
    RecommendationEntry,
    RecommendationList,
    Researcher,
    WeightParams,
    apply_threshold,
    rank_candidates,
    render_report,
    total_score,
)
from .relevance import SurfaceMatch, TermWeight, surface_rankings, surface_score, tfidf
from .taxonomy import KeywordEntry, KeywordTable, load_keyword_table, match_keywords_in_text
from .tokenizer import TokenizerProfile, default_profile, extract_nouns, tokenize

__version__ = "0.1.0"
