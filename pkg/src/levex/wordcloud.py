"""Meso level: association word clouds via the log-likelihood ratio.

For each candidate term the 2x2 document-count contingency table (result
set vs background) is scored with Dunning's G2; terms over-represented in
the foreground bubble up. Counting is document-level throughout: a term
occurring ten times in one article counts once.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .corpus import Corpus, tokenize
from .errors import DegenerateContingencyError, NoBackgroundError, NoResultsInPeriodError
from .index import DEFAULT_EXPANSION_CAP, Index
from .query import Filters, Node, evaluate, iter_patterns, render_query

DEFAULT_CLOUD_SIZE = 50
DEFAULT_MIN_FG_DOCS = 2


@dataclass(frozen=True)
class ContingencyCounts:
    """Document counts: foreground with/without term, background with/without."""

    k11: int
    k12: int
    k21: int
    k22: int

    def __post_init__(self):
        if min(self.k11, self.k12, self.k21, self.k22) < 0:
            raise ValueError("contingency counts must be non-negative")


@dataclass(frozen=True)
class CloudEntry:
    term: str
    score: float
    doc_freq_fg: int


@dataclass(frozen=True)
class WordCloud:
    entries: tuple[CloudEntry, ...]
    period: Filters
    query: str


def g2_score(c: ContingencyCounts) -> float:
    """Signed log-likelihood ratio G2 = 2 * sum(O * ln(O/E)).

    Expected counts come from the row/column marginals; empty observed
    cells contribute zero (the 0*ln(0) limit). The sign is negative when
    the foreground rate is below the background rate.
    """
    row1 = c.k11 + c.k12
    row2 = c.k21 + c.k22
    if row1 == 0 or row2 == 0:
        raise DegenerateContingencyError("degenerate contingency: empty row")
    n = row1 + row2
    col1 = c.k11 + c.k21
    col2 = c.k12 + c.k22
    total = 0.0
    for observed, row, col in (
        (c.k11, row1, col1),
        (c.k12, row1, col2),
        (c.k21, row2, col1),
        (c.k22, row2, col2),
    ):
        if observed > 0:
            expected = row * col / n
            total += observed * math.log(observed / expected)
    g2 = max(2.0 * total, 0.0)
    if c.k11 / row1 < c.k21 / row2:
        return -g2
    return g2


def is_digit_only(term: str) -> bool:
    stripped = term.replace("-", "")
    return stripped.isdigit()


def compute_wordcloud(
    ast: Node,
    index: Index,
    corpus: Corpus,
    period: Filters,
    background: Filters | None = None,
    k: int = DEFAULT_CLOUD_SIZE,
    stoplist: frozenset[str] = frozenset(),
    min_fg_docs: int = DEFAULT_MIN_FG_DOCS,
    cap: int = DEFAULT_EXPANSION_CAP,
) -> WordCloud:
    """Top-k terms most associated with the query's results in a period.

    Foreground: documents matching the query inside `period`. Background:
    every document in the `background` range (the whole corpus span when
    None) minus the foreground, so the cloud answers what sets these
    results apart from the archive at large. Query-derived terms (after
    wildcard expansion), stoplist terms, digit-only terms, and terms in
    fewer than min_fg_docs foreground documents are excluded; only
    positive scores survive. Ordering: score descending, then term.
    """
    fg_ids = evaluate(ast, index, period, cap)
    if not fg_ids:
        raise NoResultsInPeriodError(
            f"no results in period {period.date_from} to {period.date_to}"
        )
    if background is None:
        bg_pool = [doc.id for doc in corpus]
    else:
        bg_pool = index.doc_ids_in_range(background.date_from, background.date_to)
    fg_set = set(fg_ids)
    bg_set = {doc_id for doc_id in bg_pool if doc_id not in fg_set}
    if not bg_set:
        raise NoBackgroundError("no background documents outside the result set")

    fg_size = len(fg_set)
    bg_size = len(bg_set)
    fg_counts: dict[str, int] = {}
    for doc_id in fg_ids:
        doc = corpus.get(doc_id)
        seen = set(tokenize(doc.title))
        seen.update(tokenize(doc.body))
        for term in seen:
            fg_counts[term] = fg_counts.get(term, 0) + 1

    excluded: set[str] = set()
    for pattern in iter_patterns(ast):
        excluded.update(index.expand_wildcard(pattern, cap))

    scored: list[CloudEntry] = []
    for term, fg_with in fg_counts.items():
        if fg_with < min_fg_docs:
            continue
        if term in stoplist or term in excluded or is_digit_only(term):
            continue
        bg_with = sum(1 for doc_id in index.postings(term).doc_ids if doc_id in bg_set)
        score = g2_score(
            ContingencyCounts(
                k11=fg_with, k12=fg_size - fg_with, k21=bg_with, k22=bg_size - bg_with
            )
        )
        if score > 0:
            scored.append(CloudEntry(term=term, score=score, doc_freq_fg=fg_with))

    scored.sort(key=lambda e: (-e.score, e.term))
    return WordCloud(entries=tuple(scored[:k]), period=period, query=render_query(ast))


def load_stoplist(path: str | Path) -> frozenset[str]:
    """Read a stoplist file: UTF-8, one term per line, `#` comments."""
    terms = set()
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                terms.add(line.lower())
    return frozenset(terms)


def default_stoplist() -> frozenset[str]:
    """The bundled Dutch stoplist."""
    text = resources.files("levex").joinpath("data/stoplist_nl.txt").read_text("utf-8")
    terms = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            terms.add(line.lower())
    return frozenset(terms)


def cloud_to_csv(cloud: WordCloud) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["term", "score", "doc_freq_fg"])
    for e in cloud.entries:
        writer.writerow([e.term, repr(e.score), e.doc_freq_fg])
    return buf.getvalue()
