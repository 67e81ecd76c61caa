"""TF-IDF weighting and the keyword-match score channel.

tf(t, d) = n(t, d) / sum_k n(k, d); idf(t) = ln(|D| / df(t)). Natural log:
the base only rescales every weight uniformly and cannot change a ranking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .corpus import Corpus, OwnerRole
from .errors import DocumentNotFoundError, EmptyGrantError, UndefinedTermFrequencyError
from .taxonomy import KeywordTable, match_keywords_in_text
from .tokenizer import canonical

if TYPE_CHECKING:
    from .recommend import Researcher


@dataclass(frozen=True)
class TermWeight:
    term: str
    document_id: str
    tf: float
    idf: float
    tfidf: float


@dataclass(frozen=True)
class SurfaceMatch:
    researcher_id: str
    grant_id: str
    matched_keywords: frozenset[str]
    raw_score: float
    normalized_score: float


def tfidf(term: str, document_id: str, corpus: Corpus) -> TermWeight:
    """Weight of one term in one document.

    A term absent from every document gets idf = ln(|D| / 1) and tf = 0, so
    its weight is zero rather than an error.
    """
    if document_id not in corpus.documents:
        raise DocumentNotFoundError(f"unknown document id: {document_id}")
    counts = corpus.term_counts[document_id]
    total = sum(counts.values())
    if total == 0:
        raise UndefinedTermFrequencyError(
            f"document {document_id} has no tokens; tf is undefined"
        )
    folded = canonical(term)
    occurrences = counts.get(folded, 0)
    document_frequency = len(corpus.term_document_index.get(folded, ())) or 1
    tf = occurrences / total
    idf = math.log(corpus.document_count / document_frequency)
    return TermWeight(folded, document_id, tf, idf, tf * idf)


def grant_surface_documents(corpus: Corpus, grant_id: str):
    docs = corpus.owned_by(OwnerRole.GRANT, grant_id)
    if not docs:
        raise EmptyGrantError(f"grant {grant_id} has no surface documents")
    return docs


def _max_tfidf(keyword: str, doc_ids: list[str], corpus: Corpus) -> float:
    best = 0.0
    for doc_id in doc_ids:
        if sum(corpus.term_counts[doc_id].values()) == 0:
            continue  # empty documents cannot contribute weight
        best = max(best, tfidf(keyword, doc_id, corpus).tfidf)
    return best


def surface_score(
    researcher: "Researcher", grant_id: str, corpus: Corpus, table: KeywordTable
) -> SurfaceMatch:
    """Keyword-match score of one researcher against one grant.

    raw = sum over the researcher's matched keywords of that keyword's best
    TF-IDF across the grant's surface documents; normalized by the same sum
    taken over every table keyword present in those documents.
    """
    docs = grant_surface_documents(corpus, grant_id)
    doc_ids = [d.id for d in docs]

    present: set[str] = set()
    for doc in docs:
        present |= match_keywords_in_text(table, doc.text)

    researcher_folded = {canonical(k) for k in researcher.kaken_keywords}
    matched = {k for k in present if canonical(k) in researcher_folded}

    weights = {k: _max_tfidf(k, doc_ids, corpus) for k in present}
    raw = sum(weights[k] for k in matched)
    denominator = sum(weights.values())
    normalized = 0.0 if raw == 0.0 or denominator == 0.0 else min(raw / denominator, 1.0)
    return SurfaceMatch(researcher.id, grant_id, frozenset(matched), raw, normalized)


def surface_rankings(
    grant_id: str,
    researchers: Iterable["Researcher"],
    corpus: Corpus,
    table: KeywordTable,
) -> list[SurfaceMatch]:
    """Per-researcher matches, best score first; zero-match researchers omitted."""
    matches = [
        surface_score(r, grant_id, corpus, table)
        for r in sorted(researchers, key=lambda r: r.id)
    ]
    ranked = [m for m in matches if m.matched_keywords]
    ranked.sort(key=lambda m: (-m.normalized_score, m.researcher_id))
    return ranked
