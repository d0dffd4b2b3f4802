/**
 * Meso zone: the word cloud for the clicked span, rendered as a list of
 * weighted terms. Font size is linear in score, so display order and size
 * never disagree with the service's ranking. Each term is a click target
 * that refines the current query with that term.
 */

import { fontSizeForScore } from "../scale.js";
import type { CloudPanelState } from "../store.js";

export interface CloudHandlers {
  onTermClick(term: string): void;
}

export function renderCloud(container: HTMLElement, state: CloudPanelState, handlers: CloudHandlers): void {
  const doc = container.ownerDocument;
  container.textContent = "";

  const status = doc.createElement("div");
  status.id = "cloud-status";
  container.appendChild(status);

  switch (state.status) {
    case "idle":
      status.textContent = "Click a timeline bar to see the period's word cloud.";
      return;
    case "loading":
      status.textContent = `loading cloud for ${state.periodFrom} – ${state.periodTo}…`;
      return;
    case "empty":
    case "error":
      status.className = state.status === "error" ? "inline-message" : "empty-state";
      status.textContent = state.message ?? "";
      return;
  }

  const cloud = state.cloud;
  if (cloud === null) {
    return;
  }
  status.textContent = `${cloud.period_from} – ${cloud.period_to}`;

  const list = doc.createElement("ul");
  list.id = "cloud-terms";
  const scores = cloud.entries.map((e) => e.score);
  const minScore = Math.min(...scores);
  const maxScore = Math.max(...scores);
  for (const entry of cloud.entries) {
    const item = doc.createElement("li");
    const term = doc.createElement("button");
    term.type = "button";
    term.className = "cloud-term";
    term.dataset.term = entry.term;
    term.dataset.score = String(entry.score);
    term.style.fontSize = `${fontSizeForScore(entry.score, minScore, maxScore)}px`;
    term.textContent = entry.term;
    term.title = `${entry.term}: score ${entry.score}, in ${entry.doc_freq_fg} matching documents`;
    term.addEventListener("click", () => handlers.onTermClick(entry.term));
    item.appendChild(term);
    list.appendChild(item);
  }
  container.appendChild(list);
}
