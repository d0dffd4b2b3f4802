"""Micro level: result ordering, snippets, and full-document fetch.

Snippets mark matched terms with paired sentinel characters in the data
model; transport layers convert them to explicit character offsets so no
markup ever travels inside document text.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass

from .corpus import Corpus, Document, _TOKEN_RE
from .errors import NoSuchDocumentError

SPAN_OPEN = "⟦"   # ⟦
SPAN_CLOSE = "⟧"  # ⟧

ORDERS = ("date_asc", "date_desc", "relevance")
DEFAULT_PAGE_SIZE = 20
MAX_PAGE_SIZE = 200


@dataclass(frozen=True)
class Snippet:
    text: str
    span_count: int


@dataclass(frozen=True)
class ResultItem:
    doc_id: str
    date: datetime.date
    title: str
    source: str
    snippet: Snippet


@dataclass(frozen=True)
class ResultPage:
    items: tuple[ResultItem, ...]
    total: int
    offset: int
    order: str


def order_results(
    doc_ids: list[str], corpus: Corpus, matched_terms: set[str], order: str = "date_asc"
) -> list[str]:
    """Order a result set for reading.

    Date orders break ties by id; relevance counts total occurrences of the
    matched terms in title+body, descending, then date ascending, then id.
    """
    if order == "date_asc":
        return sorted(doc_ids, key=lambda i: (corpus.get(i).date, i))
    if order == "date_desc":
        return sorted(doc_ids, key=lambda i: (-corpus.get(i).date.toordinal(), i))
    if order == "relevance":

        def occurrences(doc_id: str) -> int:
            counts = corpus.token_counts(doc_id)
            return sum(counts[term] for term in matched_terms)

        return sorted(doc_ids, key=lambda i: (-occurrences(i), corpus.get(i).date, i))
    raise ValueError(f"unknown order {order!r}")


def _token_spans(text: str) -> list[tuple[str, int, int]]:
    """(lowercased token, start, end) character spans over original text."""
    return [(m.group(0).lower(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def make_snippet(
    doc: Document,
    matched_terms: set[str],
    window: int = 5,
    max_fragments: int = 3,
) -> Snippet:
    """Short body excerpt with every matched term occurrence marked.

    Picks up to max_fragments non-overlapping windows of `window` tokens on
    each side of a match, leftmost first, joined by an ellipsis. Matches
    that fall inside a kept window are marked even when their own window
    was not kept. No match: empty snippet, caller shows the title.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    spans = _token_spans(doc.body)
    hits = [i for i, (tok, _, _) in enumerate(spans) if tok in matched_terms]
    if not hits:
        return Snippet(text="", span_count=0)

    fragments: list[tuple[int, int]] = []
    for hit in hits:
        if len(fragments) >= max_fragments:
            break
        lo = max(0, hit - window)
        hi = min(len(spans) - 1, hit + window)
        if fragments and lo <= fragments[-1][1]:
            continue
        fragments.append((lo, hi))

    hit_set = set(hits)
    pieces = []
    span_count = 0
    for lo, hi in fragments:
        start_char = spans[lo][1]
        end_char = spans[hi][2]
        out = []
        cursor = start_char
        for i in range(lo, hi + 1):
            _, tok_start, tok_end = spans[i]
            out.append(doc.body[cursor:tok_start])
            word = doc.body[tok_start:tok_end]
            if i in hit_set:
                out.append(SPAN_OPEN + word + SPAN_CLOSE)
                span_count += 1
            else:
                out.append(word)
            cursor = tok_end
        out.append(doc.body[cursor:end_char])
        pieces.append("".join(out))
    return Snippet(text=" … ".join(pieces), span_count=span_count)


def snippet_spans(snippet: Snippet) -> tuple[str, list[tuple[int, int]]]:
    """Strip sentinels, returning plain text plus (start, end) offsets."""
    plain = []
    offsets = []
    pos = 0
    i = 0
    text = snippet.text
    while i < len(text):
        ch = text[i]
        if ch == SPAN_OPEN:
            close = text.index(SPAN_CLOSE, i + 1)
            word = text[i + 1 : close]
            offsets.append((pos, pos + len(word)))
            plain.append(word)
            pos += len(word)
            i = close + 1
        else:
            plain.append(ch)
            pos += 1
            i += 1
    return "".join(plain), offsets


def match_spans(text: str, matched_terms: set[str]) -> list[tuple[int, int]]:
    """Character offsets of every matched-term occurrence in raw text."""
    return [
        (start, end)
        for tok, start, end in _token_spans(text)
        if tok in matched_terms
    ]


def fetch_document(corpus: Corpus, doc_id: str) -> Document:
    doc = corpus.get(doc_id)
    if doc is None:
        raise NoSuchDocumentError(f"no such document {doc_id!r}")
    return doc


def build_page(
    ordered_ids: list[str],
    corpus: Corpus,
    matched_terms: set[str],
    offset: int = 0,
    limit: int = DEFAULT_PAGE_SIZE,
    order: str = "date_asc",
    window: int = 5,
    max_fragments: int = 3,
) -> ResultPage:
    """One page of an ordered result set with snippets."""
    if offset < 0:
        raise ValueError("offset must be >= 0")
    limit = max(1, min(limit, MAX_PAGE_SIZE))
    items = []
    for doc_id in ordered_ids[offset : offset + limit]:
        doc = corpus.get(doc_id)
        items.append(
            ResultItem(
                doc_id=doc.id,
                date=doc.date,
                title=doc.title,
                source=doc.source,
                snippet=make_snippet(doc, matched_terms, window, max_fragments),
            )
        )
    return ResultPage(items=tuple(items), total=len(ordered_ids), offset=offset, order=order)
