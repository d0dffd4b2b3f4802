"""Command-line driver: ingestion, batch queries, exports, service launch.

Subcommands mirror the analysis levels (timeline / cloud / search) plus
plumbing (ingest, history, serve, fixtures). Exit codes: 0 success, 1 user
error (message on stderr), 2 internal error.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from pathlib import Path

from . import fixtures as fixtures_mod
from .config import Config, load_config
from .corpus import load_corpus
from .errors import LevexError
from .index import build_index
from .query import Filters, evaluate, matched_terms, parse_query
from .reader import build_page, order_results
from .service import parse_date_param, serve
from .session import SessionStore
from .timeline import (
    PeakParams,
    compute_timeline,
    detect_subperiods,
    subperiods_to_csv,
    timeline_to_csv,
)
from .wordcloud import cloud_to_csv, compute_wordcloud, default_stoplist, load_stoplist


class _ArgumentParser(argparse.ArgumentParser):
    """argparse variant that exits 1 (not 2) on usage errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file (same file the service uses)")
    parser.add_argument("--corpus", help="corpus JSONL path")
    parser.add_argument("--session-dir", help="session directory")
    parser.add_argument("--stoplist", help="stoplist file path")


def _add_range(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--from", dest="date_from", required=True, metavar="DATE",
                        help="range start (YYYY-MM-DD or YYYY)")
    parser.add_argument("--to", dest="date_to", required=True, metavar="DATE",
                        help="range end (YYYY-MM-DD or YYYY)")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="levex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="validate and normalize a JSONL corpus")
    p.add_argument("jsonl", help="input JSONL file")
    p.add_argument("--out", required=True, help="normalized corpus output path")

    p = sub.add_parser("search", help="run a query and print a result table")
    p.add_argument("query")
    _add_range(p)
    p.add_argument("--order", default="date_asc",
                   choices=("date_asc", "date_desc", "relevance"))
    p.add_argument("--limit", type=int, default=20)
    p.add_argument("--offset", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("timeline", help="per-bucket match frequencies")
    p.add_argument("query")
    _add_range(p)
    p.add_argument("--granularity", choices=("year", "month"), default=None)
    p.add_argument("--csv", help="write CSV here instead of printing a table")
    _add_common(p)

    p = sub.add_parser("subperiods", help="suggest sub-period boundaries")
    p.add_argument("query")
    _add_range(p)
    p.add_argument("--granularity", choices=("year", "month"), default=None)
    p.add_argument("--window", type=int, default=3, help="smoothing window (odd)")
    p.add_argument("--prominence", type=float, default=None,
                   help="min peak prominence (default: 0.5 x std of smoothed series)")
    p.add_argument("--csv", help="write CSV here instead of printing a table")
    _add_common(p)

    p = sub.add_parser("cloud", help="association word cloud for a period")
    p.add_argument("query")
    _add_range(p)
    p.add_argument("--k", type=int, default=None, help="cloud size")
    p.add_argument("--bg-from", dest="bg_from", metavar="DATE",
                   help="background range start (default: whole corpus)")
    p.add_argument("--bg-to", dest="bg_to", metavar="DATE",
                   help="background range end")
    p.add_argument("--csv", help="write CSV here instead of printing a table")
    _add_common(p)

    p = sub.add_parser("history", help="list recorded searches, newest first")
    p.add_argument("--limit", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--listen", help="host:port (default 127.0.0.1:8040)")
    p.add_argument("--ui-dir", help="static UI directory to serve at /")
    _add_common(p)

    p = sub.add_parser("fixtures", help="synthetic corpus tools")
    fsub = p.add_subparsers(dest="fixtures_command", required=True)
    g = fsub.add_parser("generate", help="write a deterministic synthetic corpus")
    g.add_argument("--seed", type=int, default=None,
                   help=f"RNG seed (default {fixtures_mod.DEFAULT_SEED})")
    g.add_argument("--out", required=True, help="output JSONL path")
    g.add_argument("--config", help="generator spec overrides (JSON)")

    return parser


def _load_engine(args) -> tuple:
    cfg = load_config(
        path=args.config if getattr(args, "config", None) else None,
        corpus_path=getattr(args, "corpus", None),
        session_dir=getattr(args, "session_dir", None),
        stoplist_path=getattr(args, "stoplist", None),
    )
    if not cfg.corpus_path:
        raise LevexError("no corpus given (use --corpus, LEVEX_CORPUS, or a config file)")
    corpus, report = load_corpus(cfg.corpus_path)
    if report.rejected:
        print(f"warning: {report.rejected} records rejected while loading corpus",
              file=sys.stderr)
    return cfg, corpus, build_index(corpus)


def _filters(args) -> Filters:
    return Filters(parse_date_param(args.date_from), parse_date_param(args.date_to, end=True))


def _emit(text: str, csv_path: str | None) -> None:
    if csv_path:
        Path(csv_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _run(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "ingest":
        corpus, report = load_corpus(args.jsonl)
        corpus.to_jsonl(args.out)
        print(f"accepted: {report.accepted}")
        print(f"rejected: {report.rejected}")
        for line_no, reason in report.rejections:
            print(f"  line {line_no}: {reason}")
        return 0

    if args.command == "fixtures":
        spec = (
            fixtures_mod.spec_from_file(args.config)
            if args.config
            else fixtures_mod.GeneratorSpec()
        )
        if args.seed is not None:
            spec = fixtures_mod.GeneratorSpec(**{**spec.__dict__, "seed": args.seed})
        records = fixtures_mod.generate(spec)
        fixtures_mod.write_jsonl(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
        return 0

    if args.command == "history":
        cfg = load_config(
            path=args.config if args.config else None,
            session_dir=getattr(args, "session_dir", None),
        )
        store = SessionStore(cfg.session_dir)
        for entry in store.history(limit=args.limit):
            print(
                f"{entry.created_at}  {entry.entry_id}  "
                f"[{entry.filters.date_from}..{entry.filters.date_to}] "
                f"({entry.granularity})  {entry.query_text}"
            )
        return 0

    if args.command == "serve":
        cfg = load_config(
            path=args.config if args.config else None,
            listen=args.listen,
            corpus_path=args.corpus,
            session_dir=args.session_dir,
            stoplist_path=args.stoplist,
            ui_dir=args.ui_dir,
        )
        serve(cfg)
        return 0

    cfg, corpus, index = _load_engine(args)
    filters = _filters(args)
    ast = parse_query(args.query)

    if args.command == "search":
        doc_ids = evaluate(ast, index, filters, cfg.expansion_cap)
        terms = matched_terms(ast, index, cfg.expansion_cap)
        ordered = order_results(doc_ids, corpus, terms, args.order)
        page = build_page(ordered, corpus, terms,
                          offset=args.offset, limit=args.limit, order=args.order)
        print(f"total: {page.total}")
        for item in page.items:
            print(f"{item.doc_id}\t{item.date.isoformat()}\t{item.source}\t{item.title}")
        return 0

    granularity = getattr(args, "granularity", None) or cfg.granularity

    if args.command == "timeline":
        series = compute_timeline(ast, index, filters, granularity)
        _emit(timeline_to_csv(series), args.csv)
        return 0

    if args.command == "subperiods":
        series = compute_timeline(ast, index, filters, granularity)
        params = PeakParams(smoothing_window=args.window, min_prominence=args.prominence)
        _emit(subperiods_to_csv(detect_subperiods(series, params)), args.csv)
        return 0

    if args.command == "cloud":
        background = None
        if args.bg_from or args.bg_to:
            if not (args.bg_from and args.bg_to):
                raise LevexError("--bg-from and --bg-to must be given together")
            background = Filters(
                parse_date_param(args.bg_from), parse_date_param(args.bg_to, end=True)
            )
        stoplist = load_stoplist(cfg.stoplist_path) if cfg.stoplist_path else default_stoplist()
        cloud = compute_wordcloud(
            ast, index, corpus, filters,
            background=background,
            k=args.k if args.k is not None else cfg.cloud_k,
            stoplist=stoplist,
            cap=cfg.expansion_cap,
        )
        _emit(cloud_to_csv(cloud), args.csv)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    try:
        return _run(sys.argv[1:] if argv is None else argv)
    except LevexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
