/**
 * History panel: recorded searches newest first. Clicking an entry reruns
 * it and restores the query box, sliders, and granularity from the stored
 * entry — never from anything the UI remembers on its own.
 */

import type { SessionEntry } from "../types.js";

export interface HistoryHandlers {
  onRerun(entryId: string): void;
}

export function renderHistory(
  container: HTMLElement,
  history: SessionEntry[],
  currentEntryId: string | null,
  message: string | null,
  handlers: HistoryHandlers,
): void {
  const doc = container.ownerDocument;
  container.textContent = "";

  const heading = doc.createElement("h2");
  heading.textContent = "History";
  container.appendChild(heading);

  if (message !== null) {
    const error = doc.createElement("div");
    error.id = "history-message";
    error.className = "inline-message";
    error.textContent = message;
    container.appendChild(error);
  }

  if (history.length === 0) {
    const empty = doc.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No recorded searches yet.";
    container.appendChild(empty);
    return;
  }

  const list = doc.createElement("ul");
  list.id = "history-list";
  for (const entry of history) {
    const item = doc.createElement("li");
    item.className = "history-entry";
    item.dataset.entryId = entry.entry_id;
    if (entry.entry_id === currentEntryId) {
      item.classList.add("current");
    }

    const link = doc.createElement("button");
    link.type = "button";
    link.className = "rerun-link";
    link.textContent = entry.query_text;
    link.addEventListener("click", () => handlers.onRerun(entry.entry_id));
    item.appendChild(link);

    const meta = doc.createElement("div");
    meta.className = "history-meta";
    meta.textContent = `[${entry.date_from}..${entry.date_to}] ${entry.granularity} · ${entry.created_at}`;
    item.appendChild(meta);

    list.appendChild(item);
  }
  container.appendChild(list);
}
