/**
 * JSON shapes returned by the levex service under /api/v1.
 *
 * These mirror the wire format exactly; the UI displays these values
 * verbatim and never recomputes them.
 */

export type Granularity = "year" | "month";

export type ResultOrder = "date_asc" | "date_desc" | "relevance";

/** [start, end) character offsets into the text they accompany. */
export type Span = [number, number];

export interface TimelineBucket {
  label: string;
  match_count: number;
  total_count: number;
  rel_freq: number;
}

export interface Timeline {
  granularity: Granularity;
  buckets: TimelineBucket[];
}

export interface SubPeriod {
  start: string;
  end: string;
  peak_label: string;
  peak_rel_freq: number;
}

export interface Snippet {
  text: string;
  spans: Span[];
  span_count: number;
}

export interface ResultItem {
  doc_id: string;
  date: string;
  title: string;
  source: string;
  snippet: Snippet;
}

export interface ResultsPage {
  total: number;
  offset: number;
  order: ResultOrder;
  items: ResultItem[];
}

export interface SearchResponse {
  /** Set when the search was recorded (or rerun); null for plain reads. */
  entry_id: string | null;
  /** Canonical rendering of the parsed query. */
  query: string;
  from: string;
  to: string;
  granularity: Granularity;
  timeline: Timeline;
  subperiods: SubPeriod[];
  results: ResultsPage;
}

export interface CloudEntry {
  term: string;
  score: number;
  doc_freq_fg: number;
}

export interface WordCloudResponse {
  query: string;
  period_from: string;
  period_to: string;
  entries: CloudEntry[];
}

export interface SessionEntry {
  entry_id: string;
  query_text: string;
  date_from: string;
  date_to: string;
  granularity: Granularity;
  parent_id: string | null;
  created_at: string;
  label: string | null;
}

export interface RefineResponse {
  entry: SessionEntry;
  response: SearchResponse;
}

export interface DocumentView {
  id: string;
  date: string;
  title: string;
  source: string;
  body: string;
  body_spans: Span[];
  title_spans: Span[];
}

export interface Health {
  status: string;
  doc_count: number;
  date_min: string | null;
  date_max: string | null;
  token_count: number;
}

export interface ErrorBody {
  code: string;
  message: string;
}
