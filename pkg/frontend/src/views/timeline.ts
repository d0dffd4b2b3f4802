/**
 * Macro zone: relative-frequency bars per bucket with the suggested
 * sub-period boundaries underneath. Every bar is a click target that opens
 * the word cloud for exactly the span it covers; clicks anywhere else in
 * the chart do nothing.
 */

import { barHeightPct } from "../scale.js";
import type { SearchResponse } from "../types.js";

export interface TimelineHandlers {
  onBarClick(label: string): void;
  onSubPeriodClick(start: string, end: string): void;
}

export function renderTimeline(
  container: HTMLElement,
  search: SearchResponse | null,
  loading: boolean,
  handlers: TimelineHandlers,
): void {
  const doc = container.ownerDocument;
  container.textContent = "";

  if (loading) {
    const status = doc.createElement("div");
    status.className = "zone-loading";
    status.textContent = "searching…";
    container.appendChild(status);
    return;
  }
  if (search === null) {
    return;
  }

  const maxRelFreq = Math.max(...search.timeline.buckets.map((b) => b.rel_freq), 0);

  const chart = doc.createElement("div");
  chart.id = "timeline-chart";
  for (const bucket of search.timeline.buckets) {
    const slot = doc.createElement("div");
    slot.className = "bar-slot";

    const bar = doc.createElement("button");
    bar.type = "button";
    bar.className = "timeline-bar";
    bar.dataset.label = bucket.label;
    bar.dataset.matchCount = String(bucket.match_count);
    bar.dataset.totalCount = String(bucket.total_count);
    bar.dataset.relFreq = String(bucket.rel_freq);
    bar.style.height = `${barHeightPct(bucket.rel_freq, maxRelFreq)}%`;
    bar.title = `${bucket.label}: ${bucket.match_count}/${bucket.total_count} (${bucket.rel_freq})`;
    bar.addEventListener("click", () => handlers.onBarClick(bucket.label));
    slot.appendChild(bar);

    const label = doc.createElement("span");
    label.className = "bar-label";
    label.textContent = bucket.label;
    slot.appendChild(label);

    chart.appendChild(slot);
  }
  container.appendChild(chart);

  const strip = doc.createElement("div");
  strip.id = "subperiod-strip";
  for (const sp of search.subperiods) {
    const chip = doc.createElement("button");
    chip.type = "button";
    chip.className = "subperiod-chip";
    chip.dataset.start = sp.start;
    chip.dataset.end = sp.end;
    chip.textContent = `${sp.start} – ${sp.end} (peak ${sp.peak_label})`;
    chip.addEventListener("click", () => handlers.onSubPeriodClick(sp.start, sp.end));
    strip.appendChild(chip);
  }
  container.appendChild(strip);
}
