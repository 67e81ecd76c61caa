"""Transaction building, Apriori rule mining, and the rule-match score channel.

Each sentence of an abstract becomes one transaction whose items are the
extracted nouns. Rule strength uses the standard triple: support, confidence,
and lift (confidence over the consequent's expected rate).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterable

from .corpus import Corpus, DocOwner
from .errors import EmptyDatabaseError, InvalidRuleError, UndefinedMetricError
from .tokenizer import TokenizerProfile, canonical, extract_nouns

if TYPE_CHECKING:
    from .recommend import Researcher

Itemset = frozenset[str]


@dataclass(frozen=True)
class Transaction:
    id: str
    items: Itemset
    source: str


@dataclass(frozen=True)
class TransactionDB:
    transactions: tuple[Transaction, ...]
    item_universe: Itemset

    @property
    def transaction_count(self) -> int:
        return len(self.transactions)


@dataclass(frozen=True)
class AssociationRule:
    antecedent: Itemset
    consequent: Itemset
    support: float
    confidence: float
    lift: float

    def sort_key(self):
        return (-self.lift, tuple(sorted(self.antecedent)), tuple(sorted(self.consequent)))


@dataclass(frozen=True)
class MiningParams:
    min_support: float = 0.05
    min_confidence: float = 0.5
    max_itemset_width: int = 3

    def __post_init__(self):
        if not 0.0 <= self.min_support <= 1.0:
            raise ValueError(f"min_support out of range: {self.min_support}")
        if not 0.0 <= self.min_confidence <= 1.0:
            raise ValueError(f"min_confidence out of range: {self.min_confidence}")
        if self.max_itemset_width < 2:
            raise ValueError("max_itemset_width must be at least 2")


@dataclass(frozen=True)
class HistoricalMatch:
    researcher_id: str
    grant_id: str
    matched_rules: tuple[AssociationRule, ...]
    raw_score: float
    normalized_score: float


def build_transactions(
    corpus: Corpus,
    owner_filter: Callable[[DocOwner], bool],
    profile: TokenizerProfile,
) -> TransactionDB:
    """One transaction per sentence with a non-empty noun itemset."""
    transactions: list[Transaction] = []
    universe: set[str] = set()
    for doc_id, doc in sorted(corpus.documents.items()):
        if not owner_filter(doc.owner):
            continue
        for index, sentence in enumerate(doc.sentences):
            items = extract_nouns(profile, sentence)
            if not items:
                continue
            transactions.append(Transaction(f"{doc_id}#{index}", items, doc_id))
            universe |= items
    return TransactionDB(tuple(transactions), frozenset(universe))


def owned_by(role, ref: str | None = None) -> Callable[[DocOwner], bool]:
    """Owner predicate for build_transactions."""
    return lambda owner: owner.role is role and (ref is None or owner.ref == ref)


def merge_dbs(a: TransactionDB, b: TransactionDB) -> TransactionDB:
    """Concatenate transaction lists (ids re-namespaced) and union the universes."""
    merged = tuple(
        itertools.chain(
            (Transaction(f"a:{t.id}", t.items, t.source) for t in a.transactions),
            (Transaction(f"b:{t.id}", t.items, t.source) for t in b.transactions),
        )
    )
    return TransactionDB(merged, a.item_universe | b.item_universe)


def support_count(db: TransactionDB, itemset: Itemset) -> int:
    """Number of transactions containing the itemset."""
    return sum(1 for t in db.transactions if itemset <= t.items)


def rule_metrics(db: TransactionDB, antecedent: Itemset, consequent: Itemset):
    """(support, confidence, lift) for one candidate rule."""
    if not antecedent or not consequent:
        raise InvalidRuleError("rule sides must be non-empty")
    if antecedent & consequent:
        raise InvalidRuleError(
            f"rule sides overlap: {sorted(antecedent & consequent)}"
        )
    n = db.transaction_count
    if n == 0:
        raise EmptyDatabaseError("transaction database is empty")
    sigma_x = support_count(db, antecedent)
    sigma_y = support_count(db, consequent)
    if sigma_x == 0 or sigma_y == 0:
        raise UndefinedMetricError("a rule side never occurs; metrics undefined")
    sigma_xy = support_count(db, antecedent | consequent)
    support = sigma_xy / n
    confidence = sigma_xy / sigma_x
    lift = confidence / (sigma_y / n)
    return support, confidence, lift


def _frequent_itemsets(db: TransactionDB, params: MiningParams) -> dict[Itemset, int]:
    """Level-wise itemset counting; keeps every itemset meeting min_support."""
    n = db.transaction_count
    frequent: dict[Itemset, int] = {}

    def keep(count: int) -> bool:
        return count / n >= params.min_support

    level = {}
    for item in db.item_universe:
        itemset = frozenset((item,))
        count = support_count(db, itemset)
        if keep(count):
            level[itemset] = count
    frequent.update(level)

    width = 2
    while level and width <= params.max_itemset_width:
        seeds = sorted(tuple(sorted(s)) for s in level)
        candidates = set()
        for left, right in itertools.combinations(seeds, 2):
            if left[:-1] == right[:-1]:
                candidate = frozenset(left) | frozenset(right)
                # prune: all (width-1)-subsets must already be frequent
                if all(
                    frozenset(sub) in level
                    for sub in itertools.combinations(sorted(candidate), width - 1)
                ):
                    candidates.add(candidate)
        level = {}
        for candidate in candidates:
            count = support_count(db, candidate)
            if keep(count):
                level[candidate] = count
        frequent.update(level)
        width += 1
    return frequent


def mine_rules(db: TransactionDB, params: MiningParams) -> set[AssociationRule]:
    """All rules meeting the thresholds, with exact metrics attached.

    Rules whose metrics would be undefined (a side never occurs) are skipped.
    """
    n = db.transaction_count
    if n == 0:
        raise EmptyDatabaseError("transaction database is empty")
    frequent = _frequent_itemsets(db, params)
    rules: set[AssociationRule] = set()
    for itemset, sigma_xy in frequent.items():
        if len(itemset) < 2:
            continue
        members = sorted(itemset)
        for size in range(1, len(members)):
            for left in itertools.combinations(members, size):
                antecedent = frozenset(left)
                consequent = itemset - antecedent
                sigma_x = frequent[antecedent]
                sigma_y = frequent[consequent]
                if sigma_x == 0 or sigma_y == 0:
                    continue
                confidence = sigma_xy / sigma_x
                if confidence < params.min_confidence:
                    continue
                support = sigma_xy / n
                lift = confidence / (sigma_y / n)
                rules.add(
                    AssociationRule(antecedent, consequent, support, confidence, lift)
                )
    return rules


def rule_to_dict(rule: AssociationRule) -> dict:
    return {
        "antecedent": sorted(rule.antecedent),
        "consequent": sorted(rule.consequent),
        "support": rule.support,
        "confidence": rule.confidence,
        "lift": rule.lift,
    }


def rule_from_dict(data: dict) -> AssociationRule:
    return AssociationRule(
        frozenset(data["antecedent"]),
        frozenset(data["consequent"]),
        data["support"],
        data["confidence"],
        data["lift"],
    )


def researcher_item_set(
    researcher: "Researcher", corpus: Corpus, profile: TokenizerProfile
) -> frozenset[str]:
    """Case-folded KAKEN keywords plus noun items from the researcher's papers."""
    items = {canonical(k) for k in researcher.kaken_keywords}
    for doc_id in sorted(researcher.paper_document_ids):
        doc = corpus.documents.get(doc_id)
        if doc is None:
            continue
        for sentence in doc.sentences:
            items |= extract_nouns(profile, sentence)
    return frozenset(items)


def match_rules_to_researcher(
    rules: Iterable[AssociationRule],
    researcher: "Researcher",
    corpus: Corpus,
    profile: TokenizerProfile,
) -> list[AssociationRule]:
    """Rules whose whole consequent lies in the researcher's item set, lift-first."""
    items = researcher_item_set(researcher, corpus, profile)
    matched = [r for r in rules if r.consequent <= items]
    matched.sort(key=AssociationRule.sort_key)
    return matched


def historical_score(
    researcher: "Researcher",
    grant_id: str,
    rules: Iterable[AssociationRule],
    corpus: Corpus,
    profile: TokenizerProfile,
) -> HistoricalMatch:
    """Sum of lift over matched rules, normalized by the grant's total lift mass."""
    all_rules = list(rules)
    matched = match_rules_to_researcher(all_rules, researcher, corpus, profile)
    raw = sum(r.lift for r in matched)
    denominator = sum(r.lift for r in all_rules)
    normalized = 0.0 if raw == 0.0 or denominator == 0.0 else min(raw / denominator, 1.0)
    return HistoricalMatch(researcher.id, grant_id, tuple(matched), raw, normalized)
