/**
 * Split text into plain and highlighted segments from service span offsets.
 *
 * The service sends half-open [start, end) character offsets; rendering
 * wraps exactly those slices in <mark> so the highlights correspond 1:1 to
 * what the engine matched. No re-tokenization happens client-side.
 */

import type { Span } from "./types.js";

export interface Segment {
  text: string;
  highlighted: boolean;
}

export function segments(text: string, spans: Span[]): Segment[] {
  const parts: Segment[] = [];
  let cursor = 0;
  for (const [start, end] of spans) {
    if (start > cursor) {
      parts.push({ text: text.slice(cursor, start), highlighted: false });
    }
    parts.push({ text: text.slice(start, end), highlighted: true });
    cursor = end;
  }
  if (cursor < text.length) {
    parts.push({ text: text.slice(cursor), highlighted: false });
  }
  return parts;
}

/** Render text into a container, wrapping each span slice in <mark>. */
export function renderHighlighted(container: HTMLElement, text: string, spans: Span[]): void {
  container.textContent = "";
  for (const segment of segments(text, spans)) {
    if (segment.highlighted) {
      const mark = container.ownerDocument.createElement("mark");
      mark.textContent = segment.text;
      container.appendChild(mark);
    } else {
      container.appendChild(container.ownerDocument.createTextNode(segment.text));
    }
  }
}
