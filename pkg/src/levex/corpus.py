"""Document model and JSONL corpus ingestion.

A corpus is an immutable, ordered collection of dated text records. Records
arrive as JSON Lines; ingestion validates them, reports rejects with reasons,
and freezes the result for concurrent readers.
"""

from __future__ import annotations

import datetime
import io
import json
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

# A token is one or more letter/digit runs joined by single interior hyphens.
# Unicode letters (diacritics included) count; underscore does not.
_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*")

_YEAR_RE = re.compile(r"^\d{4}$")


def tokenize(text: str) -> list[str]:
    """Split text into lowercase tokens.

    Splits on every character that is not a letter, digit, or hyphen. A
    hyphen survives only between two alphanumerics ("neo-pharmedrine" stays
    whole, "--amfetamine--" is trimmed, "a--b" splits). Fragments made of
    punctuation alone are dropped.
    """
    return _TOKEN_RE.findall(text.lower())


def is_token(text: str) -> bool:
    """True when text is a single well-formed lowercase token."""
    return bool(text) and text == text.lower() and _TOKEN_RE.fullmatch(text) is not None


def parse_record_date(raw: str) -> datetime.date:
    """Parse an ISO date or a bare year (mapped to July 1 of that year)."""
    if _YEAR_RE.match(raw):
        return datetime.date(int(raw), 7, 1)
    return datetime.date.fromisoformat(raw)


@dataclass(frozen=True)
class Document:
    id: str
    date: datetime.date
    title: str
    body: str
    source: str


@dataclass(frozen=True)
class CorpusStats:
    doc_count: int
    date_min: datetime.date | None
    date_max: datetime.date | None
    token_count: int


@dataclass
class IngestReport:
    accepted: int = 0
    rejected: int = 0
    rejections: list[tuple[int, str]] = field(default_factory=list)
    """(1-based line number, reason) for every rejected record."""

    def reject(self, line_no: int, reason: str) -> None:
        self.rejected += 1
        self.rejections.append((line_no, reason))


class Corpus:
    """Frozen collection of documents, ordered by ingestion."""

    def __init__(self, documents: Iterable[Document]):
        self._docs: dict[str, Document] = {}
        self._token_counts: dict[str, Counter[str]] = {}
        for doc in documents:
            if doc.id in self._docs:
                raise ValueError(f"duplicate document id {doc.id!r}")
            self._docs[doc.id] = doc

    def __len__(self) -> int:
        return len(self._docs)

    def __iter__(self) -> Iterator[Document]:
        return iter(self._docs.values())

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._docs

    def get(self, doc_id: str) -> Document | None:
        return self._docs.get(doc_id)

    def token_counts(self, doc_id: str) -> Counter[str]:
        """Occurrence counts over title and body tokens, cached per document.

        Documents are frozen so entries never invalidate; a racing duplicate
        computation is harmless. The cache grows to one Counter per document
        actually scored, which is what relevance ordering needs repeatedly.
        """
        counts = self._token_counts.get(doc_id)
        if counts is None:
            doc = self._docs[doc_id]
            counts = Counter(tokenize(doc.title))
            counts.update(tokenize(doc.body))
            self._token_counts[doc_id] = counts
        return counts

    def stats(self) -> CorpusStats:
        dates = [d.date for d in self._docs.values()]
        tokens = 0
        for d in self._docs.values():
            tokens += len(tokenize(d.title)) + len(tokenize(d.body))
        return CorpusStats(
            doc_count=len(self._docs),
            date_min=min(dates) if dates else None,
            date_max=max(dates) if dates else None,
            token_count=tokens,
        )

    def to_jsonl(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for line in self.iter_jsonl():
                fh.write(line + "\n")

    def iter_jsonl(self) -> Iterator[str]:
        for d in self._docs.values():
            yield json.dumps(
                {
                    "id": d.id,
                    "date": d.date.isoformat(),
                    "title": d.title,
                    "body": d.body,
                    "source": d.source,
                },
                ensure_ascii=False,
            )


def ingest(lines: Iterable[str]) -> tuple[Corpus, IngestReport]:
    """Ingest JSONL records into a corpus.

    One JSON object per line with fields id, date, title, body, source;
    date is "YYYY-MM-DD" or "YYYY" (bare years land on July 1). Invalid
    records are skipped and reported, never fatal. Deterministic given
    input order.
    """
    report = IngestReport()
    docs: dict[str, Document] = {}
    for line_no, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError:
            report.reject(line_no, "bad json")
            continue
        if not isinstance(raw, dict):
            report.reject(line_no, "bad record")
            continue
        doc_id = raw.get("id")
        if not isinstance(doc_id, str) or not doc_id:
            report.reject(line_no, "bad id")
            continue
        if doc_id in docs:
            report.reject(line_no, "duplicate id")
            continue
        raw_date = raw.get("date")
        if not isinstance(raw_date, str):
            report.reject(line_no, "bad date")
            continue
        try:
            date = parse_record_date(raw_date)
        except ValueError:
            report.reject(line_no, "bad date")
            continue
        body = raw.get("body")
        if not isinstance(body, str) or not body.strip():
            report.reject(line_no, "empty body")
            continue
        title = raw.get("title") if isinstance(raw.get("title"), str) else ""
        source = raw.get("source") if isinstance(raw.get("source"), str) else ""
        docs[doc_id] = Document(id=doc_id, date=date, title=title, body=body, source=source)
        report.accepted += 1
    return Corpus(docs.values()), report


def load_corpus(path: str | Path) -> tuple[Corpus, IngestReport]:
    with open(path, "r", encoding="utf-8") as fh:
        return ingest(fh)


def ingest_text(text: str) -> tuple[Corpus, IngestReport]:
    return ingest(io.StringIO(text))
