"""HTTP facade over the store: GET /search with date/category/keyword
filters and format negotiation (xml | json | n3), plus /healthz.

/search.php is served as a compatibility alias. The service adds no
filtering of its own: the response set is exactly store.query's result.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .dates import DateError, parse_date_param
from .export import LodeMapping, to_json, to_n3, to_xml
from .store import DEFAULT_LIMIT, HARD_LIMIT, EventQuery, EventStore

_CONTENT_TYPES = {
    "xml": "application/xml",
    "json": "application/json",
    "n3": "text/n3",
}


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status)


def create_app(store: EventStore, mapping: LodeMapping | None = None) -> FastAPI:
    app = FastAPI(title="historical-events")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )
    mapping = mapping or LodeMapping()

    def search(
        request: Request,
        begin_date: str | None = Query(None),
        end_date: str | None = Query(None),
        category: str | None = Query(None),
        language: str | None = Query(None),
        query: str | None = Query(None),
        html: bool = Query(False),
        links: bool = Query(False),
        limit: int = Query(DEFAULT_LIMIT, ge=1, le=HARD_LIMIT),
        order: str = Query("asc"),
        format: str = Query("xml"),
        offset: int = Query(0, ge=0),
    ):
        if format not in _CONTENT_TYPES:
            return _error(400, f"unknown format {format!r} (want xml, json or n3)")
        if order not in ("asc", "desc"):
            return _error(400, f"order must be asc or desc, got {order!r}")
        try:
            begin = parse_date_param(begin_date) if begin_date else None
            end = parse_date_param(end_date) if end_date else None
            q = EventQuery(begin_date=begin, end_date=end, lang=language,
                           category=category, keyword=query, limit=limit,
                           order=order, offset=offset)
        except (DateError, ValueError) as exc:
            return _error(400, str(exc))
        try:
            events = store.query(q)
        except Exception as exc:  # storage trouble surfaces as 500
            return _error(500, f"store failure: {exc}")
        if format == "json":
            body = to_json(events, include_links=links, html_desc=html)
        elif format == "n3":
            body = to_n3(events, mapping)
        else:
            body = to_xml(events, include_links=links, html_desc=html)
        return Response(body, media_type=_CONTENT_TYPES[format])

    app.get("/search")(search)
    app.get("/search.php")(search)

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "events": store.count()}

    return app
