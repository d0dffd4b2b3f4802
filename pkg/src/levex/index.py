"""Immutable inverted index with wildcard term expansion.

Postings map terms to sorted document id lists (ids only, no positions).
The term dictionary is a sorted list scanned with a compiled glob for
wildcard expansion, with a prefix shortcut when the pattern starts with a
literal; that is exact and fast enough at desk scale. Per-date-bucket
document totals are kept for timeline normalization.
"""

from __future__ import annotations

import bisect
import datetime
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .corpus import Corpus, tokenize
from .errors import WildcardTooBroadError

SNAPSHOT_MAGIC = "LEVEX1"
DEFAULT_EXPANSION_CAP = 1000

GRANULARITIES = ("year", "month")

# Wildcard patterns allow token characters plus `*` (zero or more chars).
_PATTERN_RE = re.compile(r"(?:[^\W_]|\*)+(?:-(?:[^\W_]|\*)+)*")


def is_pattern(text: str) -> bool:
    return bool(text) and _PATTERN_RE.fullmatch(text) is not None


def compile_glob(pattern: str) -> re.Pattern[str]:
    """Translate a `*`-glob into an anchored regex."""
    parts = pattern.split("*")
    return re.compile("".join(re.escape(p) + (".*" if i < len(parts) - 1 else "")
                              for i, p in enumerate(parts)) + r"\Z")


def bucket_label(date: datetime.date, granularity: str) -> str:
    if granularity == "year":
        return f"{date.year:04d}"
    if granularity == "month":
        return f"{date.year:04d}-{date.month:02d}"
    raise ValueError(f"unknown granularity {granularity!r}")


@dataclass(frozen=True)
class Postings:
    term: str
    doc_ids: tuple[str, ...]

    @property
    def doc_freq(self) -> int:
        return len(self.doc_ids)


class Index:
    """Read-only inverted index over a frozen corpus."""

    def __init__(
        self,
        postings: dict[str, tuple[str, ...]],
        doc_dates: dict[str, datetime.date],
        totals: dict[str, dict[str, int]],
    ):
        self._postings = postings
        self._terms: list[str] = sorted(postings)
        self._doc_dates = doc_dates
        self._totals = totals
        # (date, id) pairs sorted for date-range slicing
        self._by_date: list[tuple[datetime.date, str]] = sorted(
            (d, i) for i, d in doc_dates.items()
        )
        self._expansion_cache: dict[tuple[str, int], tuple[str, ...]] = {}

    # -- dictionary ---------------------------------------------------------

    @property
    def terms(self) -> list[str]:
        return self._terms

    @property
    def doc_count(self) -> int:
        return len(self._doc_dates)

    def doc_date(self, doc_id: str) -> datetime.date | None:
        return self._doc_dates.get(doc_id)

    def postings(self, term: str) -> Postings:
        """Stored postings for an exact term; unknown terms are empty."""
        return Postings(term=term, doc_ids=self._postings.get(term, ()))

    def doc_ids_in_range(self, date_from: datetime.date, date_to: datetime.date) -> list[str]:
        lo = bisect.bisect_left(self._by_date, (date_from, ""))
        hi = bisect.bisect_right(self._by_date, (date_to, "\U0010ffff"))
        return [doc_id for _, doc_id in self._by_date[lo:hi]]

    def bucket_totals(self, granularity: str) -> dict[str, int]:
        """Document counts per bucket label; empty buckets are omitted."""
        if granularity not in GRANULARITIES:
            raise ValueError(f"unknown granularity {granularity!r}")
        return dict(self._totals[granularity])

    # -- wildcard expansion -------------------------------------------------

    def expand_wildcard(self, pattern: str, cap: int = DEFAULT_EXPANSION_CAP) -> list[str]:
        """All dictionary terms matched by the glob, ascending.

        `*` matches zero or more characters anywhere; a pattern without `*`
        is an exact-match lookup. Raises WildcardTooBroadError when more
        than `cap` terms match (a bare `*` hits this on any real corpus).
        """
        if not is_pattern(pattern):
            raise ValueError(f"malformed wildcard pattern {pattern!r}")
        key = (pattern, cap)
        cached = self._expansion_cache.get(key)
        if cached is not None:
            return list(cached)
        matches = self._scan(pattern, cap)
        self._expansion_cache[key] = tuple(matches)
        return matches

    def _scan(self, pattern: str, cap: int) -> list[str]:
        if "*" not in pattern:
            i = bisect.bisect_left(self._terms, pattern)
            if i < len(self._terms) and self._terms[i] == pattern:
                return [pattern]
            return []
        rx = compile_glob(pattern)
        prefix = pattern.split("*", 1)[0]
        start = bisect.bisect_left(self._terms, prefix) if prefix else 0
        matches: list[str] = []
        for term in self._terms[start:]:
            if prefix and not term.startswith(prefix):
                break
            if rx.match(term):
                matches.append(term)
                if len(matches) > cap:
                    raise WildcardTooBroadError(pattern, cap)
        return matches

    # -- snapshot -----------------------------------------------------------

    def save(self, path: str | Path) -> None:
        """Write a deterministic snapshot (stable bytes for equal indexes)."""
        payload = {
            "doc_dates": {i: d.isoformat() for i, d in self._doc_dates.items()},
            "postings": {t: list(ids) for t, ids in self._postings.items()},
            "totals": self._totals,
        }
        body = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(SNAPSHOT_MAGIC + "\n")
            fh.write(body)
            fh.write("\n")

    @classmethod
    def load(cls, path: str | Path) -> "Index":
        with open(path, "r", encoding="utf-8") as fh:
            magic = fh.readline().rstrip("\n")
            if magic != SNAPSHOT_MAGIC:
                raise ValueError(f"not an index snapshot (bad magic {magic!r})")
            payload = json.loads(fh.read())
        return cls(
            postings={t: tuple(ids) for t, ids in payload["postings"].items()},
            doc_dates={
                i: datetime.date.fromisoformat(d) for i, d in payload["doc_dates"].items()
            },
            totals=payload["totals"],
        )

    def same_contents(self, other: "Index") -> bool:
        return (
            self._postings == other._postings
            and self._doc_dates == other._doc_dates
            and self._totals == other._totals
        )


def build_index(corpus: Corpus) -> Index:
    """Index every distinct token of each document's title and body.

    Deterministic: two builds over the same corpus produce identical
    snapshots byte for byte.
    """
    raw: dict[str, list[str]] = {}
    doc_dates: dict[str, datetime.date] = {}
    totals: dict[str, dict[str, int]] = {g: {} for g in GRANULARITIES}
    for doc in corpus:
        doc_dates[doc.id] = doc.date
        for g in GRANULARITIES:
            label = bucket_label(doc.date, g)
            totals[g][label] = totals[g].get(label, 0) + 1
        seen = set(tokenize(doc.title))
        seen.update(tokenize(doc.body))
        for term in seen:
            raw.setdefault(term, []).append(doc.id)
    postings = {term: tuple(sorted(ids)) for term, ids in raw.items()}
    return Index(postings=postings, doc_dates=doc_dates, totals=totals)


def union_postings(index: Index, terms: Iterable[str]) -> set[str]:
    """Union of posting lists for several exact terms."""
    out: set[str] = set()
    for term in terms:
        out.update(index.postings(term).doc_ids)
    return out
