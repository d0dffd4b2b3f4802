/**
 * Typed client for the levex /api/v1 endpoints.
 *
 * The fetch implementation is injected so tests can count or stub requests;
 * the browser entry point passes the real window fetch. Every method accepts
 * an AbortSignal so a zone can cancel its in-flight request when a newer
 * gesture supersedes it.
 */

import type {
  DocumentView,
  Granularity,
  Health,
  RefineResponse,
  ResultOrder,
  SearchResponse,
  SessionEntry,
  WordCloudResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.name = "ApiError";
    this.code = code;
    this.status = status;
  }
}

export interface SearchParams {
  q: string;
  from: string;
  to: string;
  granularity?: Granularity;
  order?: ResultOrder;
  offset?: number;
  limit?: number;
  record?: boolean;
  parent_id?: string;
}

export interface WordCloudParams {
  q: string;
  period_from: string;
  period_to: string;
  bg_from?: string;
  bg_to?: string;
  k?: number;
}

async function parseError(response: Response): Promise<ApiError> {
  try {
    const body = (await response.json()) as { code?: string; message?: string };
    if (typeof body.code === "string" && typeof body.message === "string") {
      return new ApiError(body.code, body.message, response.status);
    }
  } catch {
    // fall through to the generic error below
  }
  return new ApiError("unknown_error", `request failed with status ${response.status}`, response.status);
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async get<T>(path: string, params: Record<string, string>, signal?: AbortSignal): Promise<T> {
    const search = new URLSearchParams(params).toString();
    const url = `${this.baseUrl}${path}${search ? `?${search}` : ""}`;
    const response = await this.fetchImpl(url, { signal });
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  health(signal?: AbortSignal): Promise<Health> {
    return this.get("/health", {}, signal);
  }

  search(params: SearchParams, signal?: AbortSignal): Promise<SearchResponse> {
    const query: Record<string, string> = {
      q: params.q,
      from: params.from,
      to: params.to,
    };
    if (params.granularity !== undefined) query.granularity = params.granularity;
    if (params.order !== undefined) query.order = params.order;
    if (params.offset !== undefined) query.offset = String(params.offset);
    if (params.limit !== undefined) query.limit = String(params.limit);
    if (params.record) query.record = "true";
    if (params.parent_id !== undefined) query.parent_id = params.parent_id;
    return this.get("/search", query, signal);
  }

  wordcloud(params: WordCloudParams, signal?: AbortSignal): Promise<WordCloudResponse> {
    const query: Record<string, string> = {
      q: params.q,
      period_from: params.period_from,
      period_to: params.period_to,
    };
    if (params.bg_from !== undefined) query.bg_from = params.bg_from;
    if (params.bg_to !== undefined) query.bg_to = params.bg_to;
    if (params.k !== undefined) query.k = String(params.k);
    return this.get("/wordcloud", query, signal);
  }

  async refine(entryId: string, term: string, signal?: AbortSignal): Promise<RefineResponse> {
    const response = await this.fetchImpl(`${this.baseUrl}/refine`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ entry_id: entryId, term }),
      signal,
    });
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as RefineResponse;
  }

  history(limit?: number, signal?: AbortSignal): Promise<SessionEntry[]> {
    const params: Record<string, string> = {};
    if (limit !== undefined) params.limit = String(limit);
    return this.get("/history", params, signal);
  }

  rerun(entryId: string, signal?: AbortSignal): Promise<SearchResponse> {
    return this.get("/rerun", { entry_id: entryId }, signal);
  }

  document(docId: string, q?: string, signal?: AbortSignal): Promise<DocumentView> {
    const params: Record<string, string> = {};
    if (q !== undefined) params.q = q;
    return this.get(`/document/${encodeURIComponent(docId)}`, params, signal);
  }
}
