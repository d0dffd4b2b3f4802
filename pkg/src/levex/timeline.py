"""Macro level: per-bucket match frequencies and sub-period demarcation.

The timeline counts query matches per year or month bucket, normalized by
the bucket's total document count so archive-size drift does not read as a
trend. Sub-periods are suggested by splitting the range at the valleys
between prominent peaks of the smoothed relative-frequency series; the
suggestion is advisory and fully parameterized.
"""

from __future__ import annotations

import calendar
import csv
import datetime
import io
import statistics
from dataclasses import dataclass

from .index import Index, bucket_label
from .query import Filters, Node, evaluate


@dataclass(frozen=True)
class Bucket:
    label: str
    match_count: int
    total_count: int
    rel_freq: float


@dataclass(frozen=True)
class TimelineSeries:
    granularity: str
    filters: Filters
    buckets: tuple[Bucket, ...]


@dataclass(frozen=True)
class SubPeriod:
    start: datetime.date
    end: datetime.date
    peak_label: str
    peak_rel_freq: float


@dataclass(frozen=True)
class PeakParams:
    """Knobs for sub-period suggestion.

    min_prominence of None means 0.5 times the standard deviation of the
    smoothed series, which makes segment boundaries invariant under
    positive scaling of the data.
    """

    smoothing_window: int = 3
    min_prominence: float | None = None

    def __post_init__(self):
        if self.smoothing_window < 1 or self.smoothing_window % 2 == 0:
            raise ValueError("smoothing_window must be odd and >= 1")
        if self.min_prominence is not None and not self.min_prominence >= 0:
            raise ValueError("min_prominence must be finite and >= 0")


def _bucket_range(filters: Filters, granularity: str) -> list[str]:
    """Contiguous bucket labels covering the filter range."""
    labels = []
    if granularity == "year":
        for year in range(filters.date_from.year, filters.date_to.year + 1):
            labels.append(f"{year:04d}")
        return labels
    y, m = filters.date_from.year, filters.date_from.month
    while (y, m) <= (filters.date_to.year, filters.date_to.month):
        labels.append(f"{y:04d}-{m:02d}")
        y, m = (y + 1, 1) if m == 12 else (y, m + 1)
    return labels


def _bucket_span(label: str) -> tuple[datetime.date, datetime.date]:
    if "-" in label:
        y, m = (int(p) for p in label.split("-"))
        return datetime.date(y, m, 1), datetime.date(y, m, calendar.monthrange(y, m)[1])
    y = int(label)
    return datetime.date(y, 1, 1), datetime.date(y, 12, 31)


def compute_timeline(
    ast: Node, index: Index, filters: Filters, granularity: str = "year"
) -> TimelineSeries:
    """Match counts per bucket, zero-filled across the whole filter range."""
    doc_ids = evaluate(ast, index, filters)
    counts: dict[str, int] = {}
    for doc_id in doc_ids:
        label = bucket_label(index.doc_date(doc_id), granularity)
        counts[label] = counts.get(label, 0) + 1
    totals = index.bucket_totals(granularity)
    buckets = []
    for label in _bucket_range(filters, granularity):
        match = counts.get(label, 0)
        total = totals.get(label, 0)
        buckets.append(
            Bucket(
                label=label,
                match_count=match,
                total_count=total,
                rel_freq=match / total if total > 0 else 0.0,
            )
        )
    return TimelineSeries(granularity=granularity, filters=filters, buckets=tuple(buckets))


# -- sub-period detection -----------------------------------------------------


def _smooth(values: list[float], window: int) -> list[float]:
    # statistics.mean is exact (single rounding), so a flat stretch of equal
    # values stays exactly flat and downstream tie rules behave as stated
    half = (window - 1) // 2
    n = len(values)
    out = []
    for i in range(n):
        lo, hi = max(0, i - half), min(n - 1, i + half)
        out.append(statistics.mean(values[lo : hi + 1]))
    return out


def _candidate_peaks(smoothed: list[float], totals: list[int]) -> list[int]:
    """Strict local maxima; endpoints qualify against their single neighbor.

    Buckets holding no documents at all are never peak candidates.
    """
    n = len(smoothed)
    if n < 2:
        return []
    cands = []
    for i in range(n):
        if totals[i] == 0:
            continue
        if i == 0:
            ok = smoothed[0] > smoothed[1]
        elif i == n - 1:
            ok = smoothed[-1] > smoothed[-2]
        else:
            ok = smoothed[i] > smoothed[i - 1] and smoothed[i] > smoothed[i + 1]
        if ok:
            cands.append(i)
    return cands


def _prominence(smoothed: list[float], peak: int, kept: list[int]) -> float:
    """Peak height over the higher flanking minimum.

    Flanks run from the peak toward the adjacent already-kept peak on each
    side, or to the range end where none exists; an endpoint peak has only
    one flank.
    """
    n = len(smoothed)
    left_bound = max((k for k in kept if k < peak), default=None)
    right_bound = min((k for k in kept if k > peak), default=None)
    left = smoothed[(left_bound + 1 if left_bound is not None else 0) : peak]
    right = smoothed[peak + 1 : (right_bound if right_bound is not None else n)]
    flanks = [min(side) for side in (left, right) if side]
    if not flanks:
        return float("inf")
    return smoothed[peak] - max(flanks)


def detect_subperiods(series: TimelineSeries, params: PeakParams = PeakParams()) -> list[SubPeriod]:
    """Demarcate the filter range at the valleys between prominent peaks.

    Steps: smooth rel_freq with a centered moving average (shrinking at the
    edges); find strict local maxima; keep them highest-first while their
    prominence (toward adjacent kept peaks or range ends) clears the
    threshold; split at the minimum between adjacent kept peaks (leftmost on
    ties). Segments cover the filter range exactly: [start..v1], (v1..v2],
    ..., (vk..end]. With no qualifying peak the whole range is one
    sub-period peaking at the global maximum.
    """
    if not series.buckets:
        raise ValueError("series has no buckets")
    values = [b.rel_freq for b in series.buckets]
    totals = [b.total_count for b in series.buckets]
    n = len(values)
    smoothed = _smooth(values, params.smoothing_window)
    threshold = params.min_prominence
    if threshold is None:
        threshold = 0.5 * statistics.pstdev(smoothed) if n > 1 else 0.0

    kept: list[int] = []
    for cand in sorted(_candidate_peaks(smoothed, totals), key=lambda i: (-smoothed[i], i)):
        if _prominence(smoothed, cand, kept) >= threshold:
            kept.append(cand)
            kept.sort()

    def make(seg_start: int, seg_end: int, peak: int) -> SubPeriod:
        start = max(_bucket_span(series.buckets[seg_start].label)[0], series.filters.date_from)
        end = min(_bucket_span(series.buckets[seg_end].label)[1], series.filters.date_to)
        return SubPeriod(
            start=start,
            end=end,
            peak_label=series.buckets[peak].label,
            peak_rel_freq=series.buckets[peak].rel_freq,
        )

    if not kept:
        peak = max(range(n), key=lambda i: (smoothed[i], -i))
        return [make(0, n - 1, peak)]

    valleys = [
        min(range(a + 1, b), key=lambda i: (smoothed[i], i)) for a, b in zip(kept, kept[1:])
    ]
    starts = [0] + [v + 1 for v in valleys]
    ends = valleys + [n - 1]
    out = []
    for seg_start, seg_end in zip(starts, ends):
        peak = next(p for p in kept if seg_start <= p <= seg_end)
        out.append(make(seg_start, seg_end, peak))
    return out


# -- CSV export ----------------------------------------------------------------


def timeline_to_csv(series: TimelineSeries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["label", "match_count", "total_count", "rel_freq"])
    for b in series.buckets:
        writer.writerow([b.label, b.match_count, b.total_count, repr(b.rel_freq)])
    return buf.getvalue()


def subperiods_to_csv(subperiods: list[SubPeriod]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["start", "end", "peak_label", "peak_rel_freq"])
    for sp in subperiods:
        writer.writerow([sp.start.isoformat(), sp.end.isoformat(), sp.peak_label, repr(sp.peak_rel_freq)])
    return buf.getvalue()
