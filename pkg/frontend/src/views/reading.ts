/**
 * Reading pane: the full document as an overlay, with the service's match
 * offsets wrapped in <mark>. An overlay leaves the result list untouched
 * underneath, so closing it restores the exact list state.
 */

import { renderHighlighted } from "../highlight.js";
import type { ReadingPaneState } from "../store.js";

export interface ReadingHandlers {
  onClose(): void;
}

export function renderReading(overlay: HTMLElement, state: ReadingPaneState, handlers: ReadingHandlers): void {
  const doc = overlay.ownerDocument;
  overlay.textContent = "";
  overlay.hidden = !state.open;
  if (!state.open) {
    return;
  }

  const pane = doc.createElement("div");
  pane.className = "reading-card";

  const close = doc.createElement("button");
  close.type = "button";
  close.id = "close-reading";
  close.textContent = "close";
  close.addEventListener("click", () => handlers.onClose());
  pane.appendChild(close);

  if (state.loading) {
    const status = doc.createElement("div");
    status.className = "zone-loading";
    status.textContent = "loading document…";
    pane.appendChild(status);
  } else if (state.message !== null) {
    const error = doc.createElement("div");
    error.id = "reading-message";
    error.className = "inline-message";
    error.textContent = state.message;
    pane.appendChild(error);
  } else if (state.doc !== null) {
    const title = doc.createElement("h2");
    title.id = "reading-title";
    renderHighlighted(title, state.doc.title, state.doc.title_spans);
    pane.appendChild(title);

    const meta = doc.createElement("div");
    meta.id = "reading-meta";
    meta.textContent = `${state.doc.date} · ${state.doc.source} · ${state.doc.id}`;
    pane.appendChild(meta);

    const body = doc.createElement("div");
    body.id = "reading-body";
    renderHighlighted(body, state.doc.body, state.doc.body_spans);
    pane.appendChild(body);
  }

  overlay.appendChild(pane);
}
