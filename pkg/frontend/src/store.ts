/**
 * Single UI state container.
 *
 * The filter controls (date sliders, granularity) are pure reflections of
 * this state, and the state is only ever written from service responses —
 * a search or rerun applies the entry's stored filters, and a refinement
 * applies the child entry, which carries the parent's filters unchanged.
 * No view keeps filter state of its own.
 */

import type {
  DocumentView,
  Granularity,
  SearchResponse,
  SessionEntry,
  WordCloudResponse,
} from "./types.js";

export interface CloudPanelState {
  status: "idle" | "loading" | "loaded" | "empty" | "error";
  periodFrom: string | null;
  periodTo: string | null;
  cloud: WordCloudResponse | null;
  message: string | null;
}

export interface ReadingPaneState {
  open: boolean;
  loading: boolean;
  doc: DocumentView | null;
  message: string | null;
}

export interface UiState {
  queryText: string;
  dateFrom: string;
  dateTo: string;
  granularity: Granularity;
  /** History entry the displayed search belongs to. */
  entryId: string | null;
  search: SearchResponse | null;
  searchLoading: boolean;
  /** Inline message for the query form. */
  searchMessage: string | null;
  cloud: CloudPanelState;
  reading: ReadingPaneState;
  history: SessionEntry[];
  /** Inline message for the history panel (stale entry, rerun failures). */
  historyMessage: string | null;
}

export const IDLE_CLOUD: CloudPanelState = {
  status: "idle",
  periodFrom: null,
  periodTo: null,
  cloud: null,
  message: null,
};

export const CLOSED_READING: ReadingPaneState = {
  open: false,
  loading: false,
  doc: null,
  message: null,
};

export function initialState(dateFrom = "", dateTo = ""): UiState {
  return {
    queryText: "",
    dateFrom,
    dateTo,
    granularity: "year",
    entryId: null,
    search: null,
    searchLoading: false,
    searchMessage: null,
    cloud: IDLE_CLOUD,
    reading: CLOSED_READING,
    history: [],
    historyMessage: null,
  };
}

export type Listener = (state: UiState, previous: UiState) => void;

export class Store {
  private state: UiState;
  private listeners: Listener[] = [];

  constructor(state: UiState) {
    this.state = state;
  }

  get(): UiState {
    return this.state;
  }

  set(partial: Partial<UiState>): void {
    const previous = this.state;
    this.state = { ...previous, ...partial };
    for (const listener of this.listeners) {
      listener(this.state, previous);
    }
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }
}

/**
 * State after a search, refinement, or rerun: the query box, both sliders,
 * and the granularity select all come from the response as one unit.
 * Opening a new level resets the cloud panel and closes the reading pane.
 */
export function searchApplied(response: SearchResponse, entryId: string | null): Partial<UiState> {
  return {
    queryText: response.query,
    dateFrom: response.from,
    dateTo: response.to,
    granularity: response.granularity,
    entryId,
    search: response,
    searchLoading: false,
    searchMessage: null,
    cloud: IDLE_CLOUD,
    reading: CLOSED_READING,
  };
}

/** State after a page turn: only the result page changes. */
export function pageApplied(current: SearchResponse, response: SearchResponse): Partial<UiState> {
  return {
    search: { ...current, results: response.results },
  };
}

/** History with an entry added in front, unless it is already the newest. */
export function withEntry(history: SessionEntry[], entry: SessionEntry): SessionEntry[] {
  if (history.length > 0 && history[0].entry_id === entry.entry_id) {
    return history;
  }
  return [entry, ...history];
}
