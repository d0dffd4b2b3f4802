"""Leveled exploration of text corpora: timelines, association clouds, reading.

The package is organized around three zoom levels. ``timeline`` charts how
often a query matches per year or month, ``wordcloud`` surfaces the terms
that distinguish a sub-period, and ``reader`` serves the underlying
documents with match highlighting. ``session`` keeps a durable trail of the
searches that led anywhere, and ``service``/``cli`` expose the whole thing
over HTTP and the shell.
"""

from .corpus import Corpus, Document, IngestReport, ingest, load_corpus, tokenize
from .errors import (
    BadFilterError,
    DegenerateContingencyError,
    EmptyQueryError,
    IllegalCharacterError,
    InvalidTermError,
    LevexError,
    NoBackgroundError,
    NoResultsInPeriodError,
    NoSuchDocumentError,
    NoSuchEntryError,
    QuerySyntaxError,
    WildcardTooBroadError,
)
from .index import Index, build_index
from .query import (
    And,
    Filters,
    Or,
    TermPattern,
    canonical_query,
    evaluate,
    matched_terms,
    parse_query,
    refine_conjunctive,
    render_query,
)
from .reader import build_page, fetch_document, make_snippet, order_results
from .session import SessionEntry, SessionStore
from .timeline import (
    Bucket,
    PeakParams,
    SubPeriod,
    TimelineSeries,
    compute_timeline,
    detect_subperiods,
)
from .wordcloud import CloudEntry, WordCloud, compute_wordcloud, g2_score

__version__ = "0.1.0"

__all__ = [
    "And",
    "BadFilterError",
    "Bucket",
    "CloudEntry",
    "Corpus",
    "DegenerateContingencyError",
    "Document",
    "EmptyQueryError",
    "Filters",
    "IllegalCharacterError",
    "Index",
    "IngestReport",
    "InvalidTermError",
    "LevexError",
    "NoBackgroundError",
    "NoResultsInPeriodError",
    "NoSuchDocumentError",
    "NoSuchEntryError",
    "Or",
    "PeakParams",
    "QuerySyntaxError",
    "SessionEntry",
    "SessionStore",
    "SubPeriod",
    "TermPattern",
    "TimelineSeries",
    "WildcardTooBroadError",
    "WordCloud",
    "__version__",
    "build_index",
    "build_page",
    "canonical_query",
    "compute_timeline",
    "compute_wordcloud",
    "detect_subperiods",
    "evaluate",
    "fetch_document",
    "g2_score",
    "ingest",
    "load_corpus",
    "make_snippet",
    "matched_terms",
    "order_results",
    "parse_query",
    "refine_conjunctive",
    "render_query",
    "tokenize",
]
