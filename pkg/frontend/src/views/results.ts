/**
 * Micro zone: one page of results with highlighted snippets. Clicking a
 * title opens the reading pane; page turns re-read the same search at a new
 * offset without recording anything.
 */

import { renderHighlighted } from "../highlight.js";
import type { SearchResponse } from "../types.js";

export const PAGE_SIZE = 20;

export interface ResultsHandlers {
  onResultClick(docId: string): void;
  onPage(delta: number): void;
}

export function renderResults(
  container: HTMLElement,
  search: SearchResponse | null,
  handlers: ResultsHandlers,
): void {
  const doc = container.ownerDocument;
  container.textContent = "";
  if (search === null) {
    return;
  }

  const page = search.results;
  const meta = doc.createElement("div");
  meta.id = "results-meta";
  const first = page.total === 0 ? 0 : page.offset + 1;
  const last = page.offset + page.items.length;
  meta.textContent = `${page.total} results — showing ${first}–${last} (${page.order})`;
  container.appendChild(meta);

  const list = doc.createElement("ul");
  list.id = "result-list";
  for (const item of page.items) {
    const entry = doc.createElement("li");
    entry.className = "result-item";

    const link = doc.createElement("button");
    link.type = "button";
    link.className = "result-link";
    link.dataset.docId = item.doc_id;
    link.textContent = item.title || item.doc_id;
    link.addEventListener("click", () => handlers.onResultClick(item.doc_id));
    entry.appendChild(link);

    const line = doc.createElement("div");
    line.className = "result-meta";
    line.textContent = `${item.date} · ${item.source}`;
    entry.appendChild(line);

    const snippet = doc.createElement("p");
    snippet.className = "snippet";
    renderHighlighted(snippet, item.snippet.text, item.snippet.spans);
    entry.appendChild(snippet);

    list.appendChild(entry);
  }
  container.appendChild(list);

  const pager = doc.createElement("div");
  pager.id = "results-pager";
  const prev = doc.createElement("button");
  prev.type = "button";
  prev.id = "prev-page";
  prev.textContent = "previous";
  prev.disabled = page.offset === 0;
  prev.addEventListener("click", () => handlers.onPage(-1));
  const next = doc.createElement("button");
  next.type = "button";
  next.id = "next-page";
  next.textContent = "next";
  next.disabled = page.offset + page.items.length >= page.total;
  next.addEventListener("click", () => handlers.onPage(1));
  pager.appendChild(prev);
  pager.appendChild(next);
  container.appendChild(pager);
}
