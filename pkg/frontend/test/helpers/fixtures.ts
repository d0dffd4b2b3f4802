/**
 * Hand-built service payloads and a tiny route-based fetch stub for
 * controller tests that must not touch the network.
 */

import type { FetchLike } from "../../src/api.js";
import type { SearchResponse, SessionEntry, TimelineBucket, WordCloudResponse } from "../../src/types.js";

export const HEALTH = {
  status: "ok",
  doc_count: 200,
  date_min: "1945-01-01",
  date_max: "1969-12-31",
  token_count: 9000,
};

export function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export function bucket(label: string, matchCount: number, totalCount = 100): TimelineBucket {
  return {
    label,
    match_count: matchCount,
    total_count: totalCount,
    rel_freq: matchCount / totalCount,
  };
}

export function makeSearchResponse(overrides: Partial<SearchResponse> = {}): SearchResponse {
  return {
    entry_id: "e1",
    query: "benzedri*",
    from: "1945-01-01",
    to: "1969-12-31",
    granularity: "year",
    timeline: { granularity: "year", buckets: [bucket("1945", 3), bucket("1946", 17)] },
    subperiods: [
      { start: "1945-01-01", end: "1969-12-31", peak_label: "1946", peak_rel_freq: 0.17 },
    ],
    results: {
      total: 1,
      offset: 0,
      order: "date_asc",
      items: [
        {
          doc_id: "doc-1",
          date: "1945-02-03",
          title: "Nieuws over benzedrine",
          source: "De Dagbode",
          snippet: { text: "de benzedrine was nieuw", spans: [[3, 13]], span_count: 1 },
        },
      ],
    },
    ...overrides,
  };
}

export function makeCloud(overrides: Partial<WordCloudResponse> = {}): WordCloudResponse {
  return {
    query: "benzedri*",
    period_from: "1967-01-01",
    period_to: "1967-12-31",
    entries: [
      { term: "verslaving", score: 42.5, doc_freq_fg: 12 },
      { term: "overdosis", score: 17.25, doc_freq_fg: 8 },
    ],
    ...overrides,
  };
}

export function makeEntry(id: string, overrides: Partial<SessionEntry> = {}): SessionEntry {
  return {
    entry_id: id,
    query_text: "benzedri*",
    date_from: "1945-01-01",
    date_to: "1969-12-31",
    granularity: "year",
    parent_id: null,
    created_at: "1970-01-01T00:00:00+00:00",
    label: null,
    ...overrides,
  };
}

export type Responder = (url: URL, init?: RequestInit) => unknown | Promise<unknown>;

/**
 * Route table keyed by path under /api/v1. A responder may return a
 * Response (for errors) or a plain body (wrapped as 200 JSON).
 */
export function stubBackend(routes: Record<string, Responder>): FetchLike {
  return async (urlStr, init) => {
    const url = new URL(urlStr);
    const path = url.pathname.replace(/^.*\/api\/v1/, "");
    for (const [prefix, responder] of Object.entries(routes)) {
      if (path === prefix || path.startsWith(`${prefix}/`)) {
        const result = await responder(url, init);
        return result instanceof Response ? result : json(result);
      }
    }
    throw new Error(`no stub responder for ${path}`);
  };
}

export interface PendingRequest {
  url: URL;
  signal: AbortSignal | undefined;
  respond(body: unknown): void;
}

/** Responder whose answers are released by the test, abort-aware. */
export function manualResponder(): { pending: PendingRequest[]; responder: Responder } {
  const pending: PendingRequest[] = [];
  const responder: Responder = (url, init) =>
    new Promise<Response>((resolve, reject) => {
      const signal = init?.signal ?? undefined;
      signal?.addEventListener("abort", () => {
        reject(new DOMException("aborted", "AbortError"));
      });
      pending.push({ url, signal, respond: (body) => resolve(json(body)) });
    });
  return { pending, responder };
}
