"""Channel fusion, threshold selection, and report rendering.

total = alpha * surface + beta * historical, with alpha + beta = 1. The
research administrator tunes alpha and the threshold interactively; a list
that keeps two or fewer researchers above the threshold is considered well
tuned, which the reports surface as an annotation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .assoc import AssociationRule, HistoricalMatch, rule_from_dict, rule_to_dict
from .errors import InvalidWeightsError, UnsupportedFormatError
from .relevance import SurfaceMatch

_WEIGHT_TOLERANCE = 1e-9

DEFAULT_THRESHOLD = 0.4


@dataclass(frozen=True)
class Researcher:
    id: str
    display_name: str
    kaken_keywords: frozenset[str]
    paper_document_ids: frozenset[str] = frozenset()
    past_kaken_document_ids: frozenset[str] = frozenset()


@dataclass(frozen=True)
class WeightParams:
    alpha: float
    beta: float

    @classmethod
    def from_alpha(cls, alpha: float) -> "WeightParams":
        if not 0.0 <= alpha <= 1.0:
            raise InvalidWeightsError(f"alpha out of range: {alpha}")
        return cls(alpha, 1.0 - alpha)

    def validate(self) -> None:
        if not 0.0 <= self.alpha <= 1.0 or not 0.0 <= self.beta <= 1.0:
            raise InvalidWeightsError(
                f"weights out of range: alpha={self.alpha}, beta={self.beta}"
            )
        if abs(self.alpha + self.beta - 1.0) > _WEIGHT_TOLERANCE:
            raise InvalidWeightsError(
                f"alpha + beta must equal 1.0, got {self.alpha + self.beta}"
            )


@dataclass(frozen=True)
class RecommendationEntry:
    researcher_id: str
    surface: float
    historical: float
    total: float
    matched_keywords: tuple[str, ...] = ()
    matched_rules: tuple[AssociationRule, ...] = ()


@dataclass(frozen=True)
class RecommendationList:
    grant_id: str
    params: WeightParams
    threshold: float
    entries: tuple[RecommendationEntry, ...]

    @property
    def selected(self) -> tuple[RecommendationEntry, ...]:
        return tuple(e for e in self.entries if e.total >= self.threshold)

    @property
    def note(self) -> str:
        count = len(self.selected)
        verdict = "within" if count <= 2 else "beyond"
        return (
            f"{count} researcher(s) at or above threshold {self.threshold:g}; "
            f"{verdict} the shortlist target of at most 2"
        )


def total_score(surface: float, historical: float, params: WeightParams) -> float:
    params.validate()
    return params.alpha * surface + params.beta * historical


def rank_candidates(
    grant_id: str,
    surface_matches: Iterable[SurfaceMatch],
    historical_matches: Iterable[HistoricalMatch],
    params: WeightParams,
    threshold: float = DEFAULT_THRESHOLD,
) -> RecommendationList:
    """Fuse the two channels; a researcher missing from a channel scores 0 there."""
    params.validate()
    surface = {m.researcher_id: m for m in surface_matches}
    historical = {m.researcher_id: m for m in historical_matches}
    entries = []
    for researcher_id in sorted(surface.keys() | historical.keys()):
        s = surface.get(researcher_id)
        h = historical.get(researcher_id)
        s_score = s.normalized_score if s else 0.0
        h_score = h.normalized_score if h else 0.0
        entries.append(
            RecommendationEntry(
                researcher_id,
                s_score,
                h_score,
                total_score(s_score, h_score, params),
                tuple(sorted(s.matched_keywords)) if s else (),
                h.matched_rules if h else (),
            )
        )
    entries.sort(key=lambda e: (-e.total, e.researcher_id))
    return RecommendationList(grant_id, params, threshold, tuple(entries))


def apply_threshold(
    recommendations: RecommendationList, threshold: float
) -> tuple[RecommendationEntry, ...]:
    """Entries with total >= threshold, in ranking order."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold out of range: {threshold}")
    return tuple(e for e in recommendations.entries if e.total >= threshold)


def _rule_text(rule: AssociationRule) -> str:
    left = ", ".join(sorted(rule.antecedent))
    right = ", ".join(sorted(rule.consequent))
    return f"{{{left}}} -> {{{right}}} (lift {rule.lift:.4f})"


def recommendation_list_to_dict(recommendations: RecommendationList) -> dict:
    return {
        "grant_id": recommendations.grant_id,
        "alpha": recommendations.params.alpha,
        "beta": recommendations.params.beta,
        "threshold": recommendations.threshold,
        "entries": [
            {
                "researcher_id": e.researcher_id,
                "surface": e.surface,
                "historical": e.historical,
                "total": e.total,
                "selected": e.total >= recommendations.threshold,
                "matched_keywords": list(e.matched_keywords),
                "matched_rules": [rule_to_dict(r) for r in e.matched_rules],
            }
            for e in recommendations.entries
        ],
        "selected": [e.researcher_id for e in recommendations.selected],
        "note": recommendations.note,
    }


def recommendation_list_from_dict(data: dict) -> RecommendationList:
    entries = tuple(
        RecommendationEntry(
            e["researcher_id"],
            e["surface"],
            e["historical"],
            e["total"],
            tuple(e.get("matched_keywords", ())),
            tuple(rule_from_dict(r) for r in e.get("matched_rules", ())),
        )
        for e in data["entries"]
    )
    return RecommendationList(
        data["grant_id"],
        WeightParams(data["alpha"], data["beta"]),
        data["threshold"],
        entries,
    )


def render_report(recommendations: RecommendationList, format: str = "table") -> str:
    """Deterministic report; "table" for humans, "json" for machines."""
    if format == "json":
        return json.dumps(
            recommendation_list_to_dict(recommendations), indent=2, sort_keys=True,
            ensure_ascii=False,
        )
    if format != "table":
        raise UnsupportedFormatError(f"unknown report format: {format!r}")

    header = (
        f"grant: {recommendations.grant_id}  "
        f"alpha={recommendations.params.alpha:.2f} beta={recommendations.params.beta:.2f} "
        f"threshold={recommendations.threshold:.2f}"
    )
    columns = ["researcher", "surface", "historical", "total", "selected",
               "matched keywords", "matched rules"]
    rows = []
    for e in recommendations.entries:
        rows.append([
            e.researcher_id,
            f"{e.surface:.3f}",
            f"{e.historical:.3f}",
            f"{e.total:.3f}",
            "yes" if e.total >= recommendations.threshold else "no",
            ", ".join(e.matched_keywords) or "-",
            "; ".join(_rule_text(r) for r in e.matched_rules) or "-",
        ])
    widths = [max(len(columns[i]), *(len(r[i]) for r in rows)) if rows else len(columns[i])
              for i in range(len(columns))]
    lines = [header, ""]
    lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(columns)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    lines.append("")
    lines.append(f"note: {recommendations.note}")
    return "\n".join(lines) + "\n"


def parse_report_json(text: str) -> RecommendationList:
    return recommendation_list_from_dict(json.loads(text))


def render_comparison(lists: Iterable[RecommendationList]) -> str:
    """One row per researcher, one total column per weight setting.

    Selected totals are marked with ``*``. Row order follows the first list's
    ranking; researchers missing there are appended id-sorted.
    """
    lists = list(lists)
    if not lists:
        return "no recommendation lists\n"
    order: list[str] = []
    for ranked in lists:
        for entry in ranked.entries:
            if entry.researcher_id not in order:
                order.append(entry.researcher_id)

    labels = [
        f"alpha={l.params.alpha:.2f} beta={l.params.beta:.2f}" for l in lists
    ]
    by_id = [
        {e.researcher_id: e for e in ranked.entries} for ranked in lists
    ]
    rows = []
    for researcher_id in order:
        cells = [researcher_id]
        for ranked, entries in zip(lists, by_id):
            entry = entries.get(researcher_id)
            if entry is None:
                cells.append("-")
            else:
                mark = "*" if entry.total >= ranked.threshold else " "
                cells.append(f"{entry.total:.3f}{mark}")
        rows.append(cells)

    columns = ["researcher", *labels]
    widths = [
        max(len(columns[i]), *(len(r[i]) for r in rows)) if rows else len(columns[i])
        for i in range(len(columns))
    ]
    lines = ["  ".join(c.ljust(widths[i]) for i, c in enumerate(columns)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"
