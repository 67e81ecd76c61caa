"""Request/response models for the HTTP API."""

from __future__ import annotations

from pydantic import BaseModel


class RecommendationQuery(BaseModel):
    """One interactive what-if query; beta is implied as 1 - alpha."""

    grant_id: str
    alpha: float = 0.5
    threshold: float = 0.4


class RuleModel(BaseModel):
    antecedent: list[str]
    consequent: list[str]
    support: float
    confidence: float
    lift: float


class EntryModel(BaseModel):
    researcher_id: str
    surface: float
    historical: float
    total: float
    selected: bool
    matched_keywords: list[str]
    matched_rules: list[RuleModel]


class RecommendationResponse(BaseModel):
    grant_id: str
    alpha: float
    beta: float
    threshold: float
    entries: list[EntryModel]
    selected: list[str]
    note: str


class GrantSummary(BaseModel):
    grant_id: str
    title: str
    surface_documents: int
    historical_documents: int


class ResearcherResponse(BaseModel):
    researcher_id: str
    display_name: str
    kaken_keywords: list[str]
    paper_document_ids: list[str]
    past_kaken_document_ids: list[str]


class ReloadResponse(BaseModel):
    grants: int
    researchers: int
    documents: int


class ErrorResponse(BaseModel):
    error: str
    field: str | None = None
