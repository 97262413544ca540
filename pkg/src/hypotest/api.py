"""HTTP service: ingestion, hypothesis testing, network retrieval, entity lookup.

Every error response is JSON with a stable ``code`` field. Test and
network endpoints are read-only; document ingestion is the single
mutating route.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .corpus import CorpusError
from .engine import Engine, UnknownEntityError
from .hypothesis import (AmbiguousHypothesisError, HypothesisError,
                         UnrecognizedEntityError)

__all__ = ["create_app"]


class TextHypothesisRequest(BaseModel):
    text: str
    expected: float
    alpha: Optional[float] = None
    mode: Optional[str] = None
    match_predicate: bool = False


class GraphHypothesisRequest(BaseModel):
    subject: str
    object: str
    predicate: str
    negated: bool = False
    expected: float
    alpha: Optional[float] = None
    mode: Optional[str] = None
    match_predicate: bool = False


def _error(status: int, code: str, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"code": code, "message": message, **extra})


def create_app(engine: Engine, *, alpha: float = 0.05, max_hops: int = 2,
               static_dir: str | Path | None = None) -> FastAPI:
    """Build the FastAPI app around one engine instance."""
    app = FastAPI(title="hypotest", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        return _error(400, "invalid_request", "request body failed validation",
                      detail=json.loads(json.dumps(exc.errors(), default=str)))

    @app.exception_handler(StarletteHTTPException)
    async def _http_handler(request: Request, exc: StarletteHTTPException):
        code = "not_found" if exc.status_code == 404 else "http_error"
        return _error(exc.status_code, code, str(exc.detail))

    @app.exception_handler(UnrecognizedEntityError)
    async def _unrecognized_handler(request: Request, exc: UnrecognizedEntityError):
        return _error(400, "unrecognized_entity", str(exc),
                      entities_found=list(exc.matched), entities_required=2)

    @app.exception_handler(AmbiguousHypothesisError)
    async def _ambiguous_handler(request: Request, exc: AmbiguousHypothesisError):
        return _error(422, "ambiguous_hypothesis", str(exc),
                      entities_found=list(exc.matched))

    @app.exception_handler(UnknownEntityError)
    async def _unknown_entity_handler(request: Request, exc: UnknownEntityError):
        return _error(404, "unknown_entity", f"unknown entity {exc.name!r}")

    @app.exception_handler(CorpusError)
    async def _corpus_handler(request: Request, exc: CorpusError):
        return _error(400, "malformed_record", str(exc))

    def _run_text_test(body: TextHypothesisRequest):
        result = engine.test(
            body.text, body.expected,
            alpha=body.alpha if body.alpha is not None else alpha,
            mode=body.mode or "strict",
            match_predicate=body.match_predicate)
        network = engine.network_for(result.hypothesis, max_hops=max_hops)
        return result, network

    @app.post("/api/hypothesis")
    async def post_hypothesis(body: TextHypothesisRequest):
        if body.expected <= 0:
            return _error(400, "invalid_expected",
                          "expected frequency must be positive")
        try:
            result, network = _run_text_test(body)
        except HypothesisError:
            raise
        except ValueError as exc:
            return _error(400, "invalid_request", str(exc))
        return {"result": result.to_json(), "network": network.to_json()}

    @app.post("/api/hypothesis/graph")
    async def post_hypothesis_graph(body: GraphHypothesisRequest):
        if body.expected <= 0:
            return _error(400, "invalid_expected",
                          "expected frequency must be positive")
        subject_id = engine.lexicon.resolve(body.subject)
        if subject_id is not None and subject_id == engine.lexicon.resolve(body.object):
            return _error(400, "same_entity",
                          "selection must name two different entities")
        try:
            result, rendered = engine.test_selection(
                body.subject, body.object, body.predicate, body.negated,
                body.expected,
                alpha=body.alpha if body.alpha is not None else alpha,
                mode=body.mode or "strict",
                match_predicate=body.match_predicate)
        except ValueError as exc:
            return _error(400, "invalid_request", str(exc))
        network = engine.network_for(result.hypothesis, max_hops=max_hops)
        return {"result": result.to_json(), "network": network.to_json(),
                "rendered_text": rendered}

    @app.post("/api/corpus/documents")
    async def post_documents(request: Request):
        raw = (await request.body()).decode("utf-8")
        stripped = raw.strip()
        if not stripped:
            return {"ingested": 0, "relations_added": 0}
        if stripped.startswith("["):
            try:
                records = json.loads(stripped)
            except json.JSONDecodeError as exc:
                return _error(400, "malformed_record", f"invalid JSON array: {exc.msg}")
            if not isinstance(records, list) or \
                    not all(isinstance(r, dict) for r in records):
                return _error(400, "malformed_record",
                              "body must be a JSON array of objects or JSONL")
        else:
            records = []
            for line_no, line in enumerate(stripped.splitlines(), start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    return _error(400, "malformed_record",
                                  f"line {line_no}: invalid JSON ({exc.msg})",
                                  index=line_no - 1)
                records.append(record)
        summary = engine.ingest_records(records)
        return summary.to_json()

    @app.get("/api/network")
    async def get_network(entity: list[str] = Query(...),
                          max_hops_param: Optional[int] = Query(None, alias="max_hops"),
                          positive_only: bool = False):
        hops = max_hops_param if max_hops_param is not None else max_hops
        network = engine.network(entity, max_hops=hops,
                                 positive_only=positive_only)
        return network.to_json()

    @app.get("/api/evidence")
    async def get_evidence(entity: list[str] = Query(...)):
        if len(entity) != 2:
            return _error(400, "invalid_request",
                          "exactly two entity parameters are required")
        return engine.evidence_for_pair(entity[0], entity[1])

    @app.get("/api/entities")
    async def get_entities(q: str = ""):
        return [
            {
                "id": e.entity_id,
                "name": e.canonical_name,
                "type": e.entity_type,
                "aliases": list(e.aliases),
            }
            for e in engine.lexicon.search(q)
        ]

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True),
                  name="ui")

    return app
