"""HTTP JSON API exposing all three analysis levels plus history.

One /search round trip returns the macro timeline, suggested sub-periods,
and the first result page, so a level transition in a client is a single
interaction. Read endpoints are stateless; only /search with record=true
and /refine append to the session log.
"""

from __future__ import annotations

import datetime
import json
import logging
from functools import lru_cache
from typing import Any

from fastapi import Body, FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import timeline as timeline_mod
from . import wordcloud as wordcloud_mod
from .config import Config, split_listen
from .corpus import Corpus, load_corpus
from .errors import BadFilterError, LevexError
from .index import GRANULARITIES, Index, build_index
from .query import Filters, evaluate, matched_terms, parse_query, render_query
from .reader import (
    ORDERS,
    build_page,
    fetch_document,
    match_spans,
    order_results,
    snippet_spans,
)
from .session import SessionEntry, SessionStore

logger = logging.getLogger(__name__)

API_PREFIX = "/api/v1"

_STATUS = {
    "empty_query": 400,
    "syntax_error": 400,
    "illegal_character": 400,
    "wildcard_too_broad": 400,
    "invalid_term": 400,
    "bad_filter": 400,
    "invalid_param": 400,
    "no_such_entry": 404,
    "no_such_document": 404,
    "no_results_in_period": 404,
    "no_background": 404,
}


class InvalidParamError(LevexError):
    code = "invalid_param"


def parse_date_param(raw: str, end: bool = False) -> datetime.date:
    """ISO date, or a bare year expanded to Jan 1 / Dec 31."""
    raw = raw.strip()
    try:
        if len(raw) == 4 and raw.isdigit():
            year = int(raw)
            return datetime.date(year, 12, 31) if end else datetime.date(year, 1, 1)
        return datetime.date.fromisoformat(raw)
    except ValueError:
        raise BadFilterError(f"bad date {raw!r} (expected YYYY-MM-DD or YYYY)") from None


def _check_granularity(granularity: str) -> str:
    if granularity not in GRANULARITIES:
        raise InvalidParamError(f"granularity must be one of {GRANULARITIES}")
    return granularity


def _check_order(order: str) -> str:
    if order not in ORDERS:
        raise InvalidParamError(f"order must be one of {ORDERS}")
    return order


def _int_param(params, name: str, default: int) -> int:
    raw = params.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidParamError(f"{name} must be an integer") from None


def entry_json(entry: SessionEntry) -> dict[str, Any]:
    return entry.to_json()


def create_app(
    corpus: Corpus,
    index: Index,
    store: SessionStore,
    config: Config | None = None,
) -> FastAPI:
    config = config or Config()
    if config.stoplist_path:
        stoplist = wordcloud_mod.load_stoplist(config.stoplist_path)
    else:
        stoplist = wordcloud_mod.default_stoplist()

    app = FastAPI(title="levex", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"http://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(LevexError)
    async def levex_error_handler(request: Request, exc: LevexError):
        status = _STATUS.get(exc.code, 500)
        return JSONResponse(status_code=status, content={"code": exc.code, "message": str(exc)})

    # The corpus and index are frozen for the app's lifetime, so a search
    # response (minus the history entry id) is a pure function of its
    # parameters; memoizing it makes repeated reads — reruns, level
    # switches, back-navigation — cost one cache hit. Cached payloads are
    # shared between responses and must never be mutated.
    @lru_cache(maxsize=256)
    def computed_payload(
        query_text: str,
        date_from_iso: str,
        date_to_iso: str,
        granularity: str,
        order: str,
        offset: int,
        limit: int,
    ) -> dict[str, Any]:
        filters = Filters(
            datetime.date.fromisoformat(date_from_iso),
            datetime.date.fromisoformat(date_to_iso),
        )
        ast = parse_query(query_text)
        cap = config.expansion_cap
        terms = matched_terms(ast, index, cap)
        doc_ids = evaluate(ast, index, filters, cap)
        series = timeline_mod.compute_timeline(ast, index, filters, granularity)
        subperiods = timeline_mod.detect_subperiods(series)
        ordered = order_results(doc_ids, corpus, terms, order)
        page = build_page(ordered, corpus, terms, offset=offset, limit=limit, order=order)
        items = []
        for item in page.items:
            text, spans = snippet_spans(item.snippet)
            items.append(
                {
                    "doc_id": item.doc_id,
                    "date": item.date.isoformat(),
                    "title": item.title,
                    "source": item.source,
                    "snippet": {
                        "text": text,
                        "spans": [list(s) for s in spans],
                        "span_count": item.snippet.span_count,
                    },
                }
            )
        return {
            "query": render_query(ast),
            "from": filters.date_from.isoformat(),
            "to": filters.date_to.isoformat(),
            "granularity": granularity,
            "timeline": {
                "granularity": series.granularity,
                "buckets": [
                    {
                        "label": b.label,
                        "match_count": b.match_count,
                        "total_count": b.total_count,
                        "rel_freq": b.rel_freq,
                    }
                    for b in series.buckets
                ],
            },
            "subperiods": [
                {
                    "start": sp.start.isoformat(),
                    "end": sp.end.isoformat(),
                    "peak_label": sp.peak_label,
                    "peak_rel_freq": sp.peak_rel_freq,
                }
                for sp in subperiods
            ],
            "results": {
                "total": page.total,
                "offset": page.offset,
                "order": page.order,
                "items": items,
            },
        }

    def search_payload(
        query_text: str,
        filters: Filters,
        granularity: str,
        order: str,
        offset: int,
        limit: int,
        entry_id: str | None,
    ) -> dict[str, Any]:
        core = computed_payload(
            query_text,
            filters.date_from.isoformat(),
            filters.date_to.isoformat(),
            granularity,
            order,
            offset,
            limit,
        )
        return {"entry_id": entry_id, **core}

    # Unrecorded searches have no per-request state at all, so their full
    # response body is cached as serialized bytes (same wire format as
    # JSONResponse produces).
    @lru_cache(maxsize=256)
    def search_bytes(
        query_text: str,
        date_from_iso: str,
        date_to_iso: str,
        granularity: str,
        order: str,
        offset: int,
        limit: int,
    ) -> bytes:
        payload = {
            "entry_id": None,
            **computed_payload(
                query_text, date_from_iso, date_to_iso, granularity, order,
                offset, limit,
            ),
        }
        return json.dumps(
            payload, ensure_ascii=False, allow_nan=False, separators=(",", ":")
        ).encode("utf-8")

    # Handlers are declared async and return JSONResponse directly: the work
    # is CPU-bound and sub-millisecond, so a threadpool hop buys nothing, and
    # the payloads are built JSON-native so re-encoding them is pure overhead.

    stats = corpus.stats()  # corpus is frozen; stats never change
    health_payload = {
        "status": "ok",
        "doc_count": stats.doc_count,
        "date_min": stats.date_min.isoformat() if stats.date_min else None,
        "date_max": stats.date_max.isoformat() if stats.date_max else None,
        "token_count": stats.token_count,
    }

    @app.get(API_PREFIX + "/health")
    async def health():
        return JSONResponse(health_payload)

    # /search is the hot path: parameters are read straight off the query
    # string (declarative parsing costs more per request than the search
    # itself once payloads are cached, and its failures would surface as
    # framework 422s instead of the invalid_param contract).
    @app.get(API_PREFIX + "/search")
    async def search(request: Request):
        params = request.query_params
        q = params.get("q")
        date_from = params.get("from")
        date_to = params.get("to")
        if q is None or date_from is None or date_to is None:
            raise InvalidParamError("q, from, and to are required")
        filters = Filters(parse_date_param(date_from), parse_date_param(date_to, end=True))
        gran = _check_granularity(params.get("granularity") or config.granularity)
        order = _check_order(params.get("order", "date_asc"))
        offset = _int_param(params, "offset", 0)
        limit = _int_param(params, "limit", config.page_size)
        record = params.get("record", "").lower() in ("1", "true", "yes", "on")

        if not record:
            body = search_bytes(
                q, filters.date_from.isoformat(), filters.date_to.isoformat(),
                gran, order, offset, limit,
            )
            return Response(content=body, media_type="application/json")

        entry = store.record(q, filters, gran, parent_id=params.get("parent_id"))
        return JSONResponse(search_payload(
            q, filters, gran, order, offset, limit, entry.entry_id
        ))

    @app.get(API_PREFIX + "/wordcloud")
    async def wordcloud(
        q: str,
        period_from: str,
        period_to: str,
        bg_from: str | None = None,
        bg_to: str | None = None,
        k: int | None = None,
    ):
        period = Filters(parse_date_param(period_from), parse_date_param(period_to, end=True))
        background = None
        if bg_from is not None or bg_to is not None:
            if bg_from is None or bg_to is None:
                raise InvalidParamError("bg_from and bg_to must be given together")
            background = Filters(parse_date_param(bg_from), parse_date_param(bg_to, end=True))
        ast = parse_query(q)
        cloud = wordcloud_mod.compute_wordcloud(
            ast,
            index,
            corpus,
            period,
            background=background,
            k=k if k is not None else config.cloud_k,
            stoplist=stoplist,
            cap=config.expansion_cap,
        )
        return JSONResponse({
            "query": cloud.query,
            "period_from": cloud.period.date_from.isoformat(),
            "period_to": cloud.period.date_to.isoformat(),
            "entries": [
                {"term": e.term, "score": e.score, "doc_freq_fg": e.doc_freq_fg}
                for e in cloud.entries
            ],
        })

    @app.post(API_PREFIX + "/refine")
    async def refine(entry_id: str = Body(embed=True), term: str = Body(embed=True)):
        parent = store.get(entry_id)
        child = store.refine_and_record(parent, term)
        payload = search_payload(
            child.query_text,
            child.filters,
            child.granularity,
            order="date_asc",
            offset=0,
            limit=config.page_size,
            entry_id=child.entry_id,
        )
        return JSONResponse({"entry": entry_json(child), "response": payload})

    @app.get(API_PREFIX + "/history")
    async def history(limit: int | None = None, label: str | None = None):
        return JSONResponse(
            [entry_json(e) for e in store.history(limit=limit, filter_by_label=label)]
        )

    @app.get(API_PREFIX + "/rerun")
    async def rerun(entry_id: str):
        entry = store.get(entry_id)
        return JSONResponse(search_payload(
            entry.query_text,
            entry.filters,
            entry.granularity,
            order="date_asc",
            offset=0,
            limit=config.page_size,
            entry_id=entry.entry_id,
        ))

    @app.get(API_PREFIX + "/document/{doc_id}")
    async def document(doc_id: str, q: str | None = None):
        doc = fetch_document(corpus, doc_id)
        body_spans: list[list[int]] = []
        title_spans: list[list[int]] = []
        if q:
            terms = matched_terms(parse_query(q), index, config.expansion_cap)
            body_spans = [list(s) for s in match_spans(doc.body, terms)]
            title_spans = [list(s) for s in match_spans(doc.title, terms)]
        return JSONResponse({
            "id": doc.id,
            "date": doc.date.isoformat(),
            "title": doc.title,
            "source": doc.source,
            "body": doc.body,
            "body_spans": body_spans,
            "title_spans": title_spans,
        })

    if config.ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app


def build_app_from_config(config: Config) -> FastAPI:
    if not config.corpus_path:
        raise FileNotFoundError("no corpus configured (corpus_path)")
    corpus, report = load_corpus(config.corpus_path)
    if report.rejected:
        logger.warning("corpus load: %d records rejected", report.rejected)
    logger.info("corpus loaded: %d documents; building index", len(corpus))
    index = build_index(corpus)
    store = SessionStore(config.session_dir)
    return create_app(corpus, index, store, config)


def serve(config: Config) -> None:
    """Run the service until interrupted; in-flight requests finish first."""
    import uvicorn

    app = build_app_from_config(config)
    host, port = split_listen(config.listen)
    uvicorn.run(app, host=host, port=port, log_level="info")
