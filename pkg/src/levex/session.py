"""Persistent search history with stable filters across refinements.

The store is one append-only JSONL file (`session.jsonl`) per session
directory. Every append is flushed and fsynced before the entry is
acknowledged, so the on-disk log after a crash is always a clean prefix of
the acknowledged records. Refinement copies the parent's filters and
granularity verbatim: adding a term never resets a slider.
"""

from __future__ import annotations

import datetime
import json
import os
import threading
import uuid
from dataclasses import dataclass
from pathlib import Path

from .errors import NoSuchEntryError
from .index import Index
from .query import Filters, canonical_query, evaluate, parse_query, refine_conjunctive, render_query
from .timeline import TimelineSeries, compute_timeline

SESSION_FILENAME = "session.jsonl"


@dataclass(frozen=True)
class SessionEntry:
    entry_id: str
    query_text: str
    filters: Filters
    granularity: str
    parent_id: str | None
    created_at: str
    label: str | None = None

    def to_json(self) -> dict:
        return {
            "entry_id": self.entry_id,
            "query_text": self.query_text,
            "date_from": self.filters.date_from.isoformat(),
            "date_to": self.filters.date_to.isoformat(),
            "granularity": self.granularity,
            "parent_id": self.parent_id,
            "created_at": self.created_at,
            "label": self.label,
        }

    @classmethod
    def from_json(cls, raw: dict) -> "SessionEntry":
        return cls(
            entry_id=raw["entry_id"],
            query_text=raw["query_text"],
            filters=Filters(
                date_from=datetime.date.fromisoformat(raw["date_from"]),
                date_to=datetime.date.fromisoformat(raw["date_to"]),
            ),
            granularity=raw["granularity"],
            parent_id=raw.get("parent_id"),
            created_at=raw["created_at"],
            label=raw.get("label"),
        )


class SessionStore:
    """Append-only search history backed by a JSONL file.

    Single writer (appends serialized by a lock); any number of readers.
    Opening replays the existing log; a torn trailing line from a crash is
    ignored.
    """

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.path = self.directory / SESSION_FILENAME
        self._entries: list[SessionEntry] = []
        self._by_id: dict[str, SessionEntry] = {}
        self._lock = threading.Lock()
        self._replay()
        self._fh = open(self.path, "a", encoding="utf-8")

    def _replay(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = SessionEntry.from_json(json.loads(line))
                except (json.JSONDecodeError, KeyError):
                    break  # torn tail from an interrupted write
                self._entries.append(entry)
                self._by_id[entry.entry_id] = entry

    def close(self) -> None:
        self._fh.close()

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, entry_id: str) -> SessionEntry:
        entry = self._by_id.get(entry_id)
        if entry is None:
            raise NoSuchEntryError(f"no such entry {entry_id!r}")
        return entry

    # -- writes ---------------------------------------------------------------

    def record(
        self,
        query_text: str,
        filters: Filters,
        granularity: str,
        parent_id: str | None = None,
        label: str | None = None,
    ) -> SessionEntry:
        """Append a search to the history; durable before return.

        The stored text is the canonical rendering, so replay and equality
        are structural. Re-recording the latest (query, filters,
        granularity) is a no-op returning the existing entry.
        """
        canonical = canonical_query(query_text)
        with self._lock:
            if parent_id is not None and parent_id not in self._by_id:
                raise NoSuchEntryError(f"no such entry {parent_id!r}")
            last = self._entries[-1] if self._entries else None
            if (
                last is not None
                and last.query_text == canonical
                and last.filters == filters
                and last.granularity == granularity
            ):
                return last
            entry = SessionEntry(
                entry_id=uuid.uuid4().hex,
                query_text=canonical,
                filters=filters,
                granularity=granularity,
                parent_id=parent_id,
                created_at=datetime.datetime.now(datetime.timezone.utc).isoformat(
                    timespec="seconds"
                ),
                label=label,
            )
            self._fh.write(json.dumps(entry.to_json(), ensure_ascii=False) + "\n")
            self._fh.flush()
            os.fsync(self._fh.fileno())
            self._entries.append(entry)
            self._by_id[entry.entry_id] = entry
            return entry

    def refine_and_record(self, parent: SessionEntry | str, term: str) -> SessionEntry:
        """Record the parent's query conjoined with one more term.

        Filters and granularity are copied from the parent exactly; only
        the query text changes.
        """
        if isinstance(parent, str):
            parent = self.get(parent)
        elif parent.entry_id not in self._by_id:
            raise NoSuchEntryError(f"no such entry {parent.entry_id!r}")
        refined = refine_conjunctive(parse_query(parent.query_text), term)
        return self.record(
            query_text=render_query(refined),
            filters=parent.filters,
            granularity=parent.granularity,
            parent_id=parent.entry_id,
        )

    # -- reads ----------------------------------------------------------------

    def rerun(self, entry_id: str, index: Index) -> tuple[TimelineSeries, list[str]]:
        """Recompute an old search with its stored filters, verbatim."""
        entry = self.get(entry_id)
        ast = parse_query(entry.query_text)
        series = compute_timeline(ast, index, entry.filters, entry.granularity)
        doc_ids = evaluate(ast, index, entry.filters)
        return series, doc_ids

    def history(
        self, limit: int | None = None, filter_by_label: str | None = None
    ) -> list[SessionEntry]:
        """Entries newest first, optionally limited / filtered by label."""
        entries = list(reversed(self._entries))
        if filter_by_label is not None:
            needle = filter_by_label.lower()
            entries = [e for e in entries if e.label and needle in e.label.lower()]
        if limit is not None:
            entries = entries[:limit]
        return entries
