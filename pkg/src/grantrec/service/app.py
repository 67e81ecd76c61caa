"""HTTP API over the precomputed recommendation pipeline.

Read endpoints are pure views of the loaded snapshot: the same query always
returns the same response until a reload swaps the data.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..corpus import OwnerRole
from ..errors import GrantRecError
from ..recommend import WeightParams, rank_candidates, recommendation_list_to_dict
from .config import ServiceConfig
from .schemas import (
    ErrorResponse,
    GrantSummary,
    RecommendationQuery,
    RecommendationResponse,
    ReloadResponse,
    ResearcherResponse,
)
from .state import StateHolder


def _error(status: int, message: str, field: str | None = None) -> JSONResponse:
    payload = {"error": message}
    if field is not None:
        payload["field"] = field
    return JSONResponse(status_code=status, content=payload)


def create_app(
    config: ServiceConfig | None = None, *, state: StateHolder | None = None
) -> FastAPI:
    if state is None:
        if config is None:
            raise ValueError("either a config or a prebuilt state is required")
        state = StateHolder(config)

    app = FastAPI(title="grantrec", version="0.1.0")
    app.state.holder = state
    # the browser workbench is served from a different origin
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        errors = exc.errors()
        field = str(errors[0]["loc"][-1]) if errors else None
        return _error(400, "invalid parameter value", field)

    @app.exception_handler(GrantRecError)
    async def domain_handler(request: Request, exc: GrantRecError):
        return _error(400, str(exc))

    @app.get("/grants", response_model=list[GrantSummary])
    def list_grants():
        snapshot = state.snapshot
        corpus = snapshot.dataset.corpus
        return [
            GrantSummary(
                grant_id=grant_id,
                title=grant_id,
                surface_documents=len(corpus.owned_by(OwnerRole.GRANT, grant_id)),
                historical_documents=len(
                    corpus.owned_by(OwnerRole.HISTORICAL, grant_id)
                ),
            )
            for grant_id in snapshot.grant_ids()
        ]

    @app.get(
        "/grants/{grant_id}/recommendations",
        response_model=RecommendationResponse,
        responses={400: {"model": ErrorResponse}, 404: {"model": ErrorResponse}},
    )
    def recommendations(
        grant_id: str,
        alpha: float = Query(0.5),
        threshold: float = Query(0.4),
    ):
        if not 0.0 <= alpha <= 1.0:
            return _error(400, f"alpha must be within [0, 1], got {alpha}", "alpha")
        if not 0.0 <= threshold <= 1.0:
            return _error(
                400, f"threshold must be within [0, 1], got {threshold}", "threshold"
            )
        query = RecommendationQuery(grant_id=grant_id, alpha=alpha, threshold=threshold)
        snapshot = state.snapshot
        channels = snapshot.channels.get(query.grant_id)
        if channels is None:
            return _error(404, f"unknown grant: {query.grant_id}", "grant_id")
        ranked = rank_candidates(
            query.grant_id,
            channels.surface,
            channels.historical,
            WeightParams.from_alpha(query.alpha),
            query.threshold,
        )
        return recommendation_list_to_dict(ranked)

    @app.get(
        "/researchers/{researcher_id}",
        response_model=ResearcherResponse,
        responses={404: {"model": ErrorResponse}},
    )
    def researcher_profile(researcher_id: str):
        researcher = state.snapshot.dataset.researchers.get(researcher_id)
        if researcher is None:
            return _error(404, f"unknown researcher: {researcher_id}", "researcher_id")
        return ResearcherResponse(
            researcher_id=researcher.id,
            display_name=researcher.display_name,
            kaken_keywords=sorted(researcher.kaken_keywords),
            paper_document_ids=sorted(researcher.paper_document_ids),
            past_kaken_document_ids=sorted(researcher.past_kaken_document_ids),
        )

    @app.post("/reload", response_model=ReloadResponse)
    def reload():
        snapshot = state.reload()
        return ReloadResponse(
            grants=len(snapshot.channels),
            researchers=len(snapshot.dataset.researchers),
            documents=snapshot.dataset.corpus.document_count,
        )

    return app
