/**
 * Controller wiring the gesture contract:
 *
 *   submit        → one /search (recorded) + a /history read for the panel
 *   bar click     → exactly one /wordcloud for the bar's span
 *   term click    → exactly one /refine; the child entry from the response
 *                   updates the query box and grows the panel — no extra
 *                   request, and the filter controls keep their values
 *   rerun click   → exactly one /rerun; stored filters restore the sliders
 *   result click  → one /document with the current query for highlighting
 *   page turn     → one unrecorded /search at a new offset
 *
 * Refine is the only write a gesture can trigger. Each zone keeps one
 * in-flight request; a newer gesture in the same zone aborts the older one.
 */

import { ApiClient, ApiError } from "./api.js";
import { daysBetween, isoToOffset, offsetToIso, periodForBucket } from "./dates.js";
import {
  initialState,
  searchApplied,
  pageApplied,
  withEntry,
  Store,
} from "./store.js";
import type { Granularity, SearchResponse } from "./types.js";
import { renderCloud } from "./views/cloud.js";
import { renderHistory } from "./views/history.js";
import { renderReading } from "./views/reading.js";
import { renderResults, PAGE_SIZE } from "./views/results.js";
import { renderTimeline } from "./views/timeline.js";

export interface AppHandles {
  store: Store;
  /** Resolves once the corpus bounds and persisted history are loaded. */
  ready: Promise<void>;
  destroy(): void;
}

const SHELL_HTML = `
  <header id="search-zone">
    <div class="query-row">
      <input id="query-input" type="text" placeholder="e.g. benzedri* OR wekami*" autocomplete="off" />
      <button id="search-button" type="button">search</button>
    </div>
    <div id="form-message"></div>
    <div class="filter-row">
      <label>from
        <input id="slider-from" type="range" min="0" max="0" value="0" disabled />
        <span id="readout-from" class="slider-readout"></span>
      </label>
      <label>to
        <input id="slider-to" type="range" min="0" max="0" value="0" disabled />
        <span id="readout-to" class="slider-readout"></span>
      </label>
      <label>granularity
        <select id="granularity">
          <option value="year">year</option>
          <option value="month">month</option>
        </select>
      </label>
    </div>
  </header>
  <main>
    <section id="timeline-zone" aria-label="timeline"></section>
    <div class="level-row">
      <section id="cloud-zone" aria-label="word cloud"></section>
      <section id="results-zone" aria-label="results"></section>
    </div>
  </main>
  <aside id="history-zone" aria-label="history"></aside>
  <div id="reading-pane" hidden></div>
`;

function isAbortError(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}

function errorText(err: unknown): string {
  if (err instanceof ApiError) {
    return err.message;
  }
  return err instanceof Error ? err.message : String(err);
}

export function createApp(root: HTMLElement, client: ApiClient): AppHandles {
  const doc = root.ownerDocument;
  root.innerHTML = SHELL_HTML;

  const byId = <T extends HTMLElement>(id: string): T => {
    const node = root.querySelector(`#${id}`);
    if (node === null) {
      throw new Error(`missing element #${id}`);
    }
    return node as T;
  };

  const queryInput = byId<HTMLInputElement>("query-input");
  const searchButton = byId<HTMLButtonElement>("search-button");
  const formMessage = byId<HTMLDivElement>("form-message");
  const sliderFrom = byId<HTMLInputElement>("slider-from");
  const sliderTo = byId<HTMLInputElement>("slider-to");
  const readoutFrom = byId<HTMLSpanElement>("readout-from");
  const readoutTo = byId<HTMLSpanElement>("readout-to");
  const granularitySelect = byId<HTMLSelectElement>("granularity");
  const timelineZone = byId<HTMLElement>("timeline-zone");
  const cloudZone = byId<HTMLElement>("cloud-zone");
  const resultsZone = byId<HTMLElement>("results-zone");
  const historyZone = byId<HTMLElement>("history-zone");
  const readingPane = byId<HTMLDivElement>("reading-pane");

  const store = new Store(initialState());

  // Earliest corpus date; slider values are day offsets from it.
  let corpusMin: string | null = null;

  let searchAbort: AbortController | null = null;
  let cloudAbort: AbortController | null = null;
  let readingAbort: AbortController | null = null;

  function nextSearchSignal(): AbortSignal {
    searchAbort?.abort();
    searchAbort = new AbortController();
    return searchAbort.signal;
  }

  // --- gestures ---------------------------------------------------------

  async function submit(): Promise<void> {
    const state = store.get();
    const q = state.queryText.trim();
    if (q === "") {
      store.set({ searchMessage: "empty query" });
      return;
    }
    const signal = nextSearchSignal();
    store.set({ searchLoading: true, searchMessage: null });
    try {
      const response = await client.search(
        {
          q,
          from: state.dateFrom,
          to: state.dateTo,
          granularity: state.granularity,
          limit: PAGE_SIZE,
          record: true,
        },
        signal,
      );
      store.set(searchApplied(response, response.entry_id));
      const history = await client.history(undefined, signal);
      store.set({ history });
    } catch (err) {
      if (isAbortError(err)) return;
      store.set({ searchLoading: false, searchMessage: errorText(err) });
    }
  }

  function openCloud(periodFrom: string, periodTo: string): void {
    const search = store.get().search;
    if (search === null) {
      return;
    }
    cloudAbort?.abort();
    cloudAbort = new AbortController();
    store.set({ cloud: { status: "loading", periodFrom, periodTo, cloud: null, message: null } });
    client
      .wordcloud({ q: search.query, period_from: periodFrom, period_to: periodTo }, cloudAbort.signal)
      .then((cloud) => {
        store.set({ cloud: { status: "loaded", periodFrom, periodTo, cloud, message: null } });
      })
      .catch((err: unknown) => {
        if (isAbortError(err)) return;
        const empty = err instanceof ApiError && err.code === "no_results_in_period";
        store.set({
          cloud: {
            status: empty ? "empty" : "error",
            periodFrom,
            periodTo,
            cloud: null,
            message: empty ? "no results in this period" : errorText(err),
          },
        });
      });
  }

  function onBarClick(label: string): void {
    const period = periodForBucket(label);
    openCloud(period.from, period.to);
  }

  function onSubPeriodClick(start: string, end: string): void {
    openCloud(start, end);
  }

  async function onTermClick(term: string): Promise<void> {
    const state = store.get();
    if (state.entryId === null) {
      return;
    }
    const signal = nextSearchSignal();
    try {
      const refined = await client.refine(state.entryId, term, signal);
      store.set({
        ...searchApplied(refined.response, refined.entry.entry_id),
        history: withEntry(store.get().history, refined.entry),
      });
    } catch (err) {
      if (isAbortError(err)) return;
      store.set({ cloud: { ...store.get().cloud, status: "error", message: errorText(err) } });
    }
  }

  async function onRerun(entryId: string): Promise<void> {
    const signal = nextSearchSignal();
    store.set({ searchLoading: true, historyMessage: null });
    try {
      const response = await client.rerun(entryId, signal);
      store.set(searchApplied(response, response.entry_id));
    } catch (err) {
      if (isAbortError(err)) return;
      store.set({ searchLoading: false, historyMessage: errorText(err) });
    }
  }

  async function onResultClick(docId: string): Promise<void> {
    const search = store.get().search;
    readingAbort?.abort();
    readingAbort = new AbortController();
    store.set({ reading: { open: true, loading: true, doc: null, message: null } });
    try {
      const document = await client.document(docId, search?.query, readingAbort.signal);
      store.set({ reading: { open: true, loading: false, doc: document, message: null } });
    } catch (err) {
      if (isAbortError(err)) return;
      store.set({ reading: { open: true, loading: false, doc: null, message: errorText(err) } });
    }
  }

  function onCloseReading(): void {
    store.set({ reading: { open: false, loading: false, doc: null, message: null } });
  }

  async function onPage(delta: number): Promise<void> {
    const search = store.get().search;
    if (search === null) {
      return;
    }
    const offset = Math.max(0, search.results.offset + delta * PAGE_SIZE);
    const signal = nextSearchSignal();
    try {
      const response = await client.search(
        {
          q: search.query,
          from: search.from,
          to: search.to,
          granularity: search.granularity,
          order: search.results.order,
          offset,
          limit: PAGE_SIZE,
          record: false,
        },
        signal,
      );
      store.set(pageApplied(search, response));
    } catch (err) {
      if (isAbortError(err)) return;
      store.set({ searchMessage: errorText(err) });
    }
  }

  // --- control events ---------------------------------------------------

  queryInput.addEventListener("input", () => {
    store.set({ queryText: queryInput.value });
  });
  queryInput.addEventListener("keydown", (event) => {
    if (event.key === "Enter") {
      void submit();
    }
  });
  searchButton.addEventListener("click", () => void submit());

  sliderFrom.addEventListener("input", () => {
    if (corpusMin === null) return;
    if (Number(sliderFrom.value) > Number(sliderTo.value)) {
      sliderFrom.value = sliderTo.value;
    }
    store.set({ dateFrom: offsetToIso(corpusMin, Number(sliderFrom.value)) });
  });
  sliderTo.addEventListener("input", () => {
    if (corpusMin === null) return;
    if (Number(sliderTo.value) < Number(sliderFrom.value)) {
      sliderTo.value = sliderFrom.value;
    }
    store.set({ dateTo: offsetToIso(corpusMin, Number(sliderTo.value)) });
  });
  granularitySelect.addEventListener("change", () => {
    store.set({ granularity: granularitySelect.value as Granularity });
  });

  // --- rendering --------------------------------------------------------

  const timelineHandlers = { onBarClick, onSubPeriodClick };
  const cloudHandlers = { onTermClick: (term: string) => void onTermClick(term) };
  const resultsHandlers = {
    onResultClick: (docId: string) => void onResultClick(docId),
    onPage: (delta: number) => void onPage(delta),
  };
  const readingHandlers = { onClose: onCloseReading };
  const historyHandlers = { onRerun: (entryId: string) => void onRerun(entryId) };

  function syncControls(): void {
    const state = store.get();
    if (queryInput.value !== state.queryText) {
      queryInput.value = state.queryText;
    }
    if (corpusMin !== null && state.dateFrom !== "" && state.dateTo !== "") {
      const fromOffset = String(isoToOffset(corpusMin, state.dateFrom));
      const toOffset = String(isoToOffset(corpusMin, state.dateTo));
      if (sliderFrom.value !== fromOffset) sliderFrom.value = fromOffset;
      if (sliderTo.value !== toOffset) sliderTo.value = toOffset;
    }
    readoutFrom.textContent = state.dateFrom;
    readoutTo.textContent = state.dateTo;
    if (granularitySelect.value !== state.granularity) {
      granularitySelect.value = state.granularity;
    }
  }

  function renderFormMessage(): void {
    const message = store.get().searchMessage;
    formMessage.textContent = "";
    if (message === null) {
      return;
    }
    const text = doc.createElement("span");
    text.textContent = message;
    formMessage.appendChild(text);
    const retry = doc.createElement("button");
    retry.type = "button";
    retry.id = "retry-search";
    retry.textContent = "retry";
    retry.addEventListener("click", () => void submit());
    formMessage.appendChild(retry);
  }

  const unsubscribe = store.subscribe((state, previous) => {
    if (
      state.queryText !== previous.queryText ||
      state.dateFrom !== previous.dateFrom ||
      state.dateTo !== previous.dateTo ||
      state.granularity !== previous.granularity
    ) {
      syncControls();
    }
    if (state.searchMessage !== previous.searchMessage) {
      renderFormMessage();
    }
    if (state.search !== previous.search || state.searchLoading !== previous.searchLoading) {
      renderTimeline(timelineZone, state.search, state.searchLoading, timelineHandlers);
      renderResults(resultsZone, state.search, resultsHandlers);
    }
    if (state.cloud !== previous.cloud) {
      renderCloud(cloudZone, state.cloud, cloudHandlers);
    }
    if (state.reading !== previous.reading) {
      renderReading(readingPane, state.reading, readingHandlers);
    }
    if (
      state.history !== previous.history ||
      state.historyMessage !== previous.historyMessage ||
      state.entryId !== previous.entryId
    ) {
      renderHistory(historyZone, state.history, state.entryId, state.historyMessage, historyHandlers);
    }
  });

  // Initial paint of the static zones.
  renderTimeline(timelineZone, null, false, timelineHandlers);
  renderCloud(cloudZone, store.get().cloud, cloudHandlers);
  renderResults(resultsZone, null, resultsHandlers);
  renderReading(readingPane, store.get().reading, readingHandlers);
  renderHistory(historyZone, [], null, null, historyHandlers);

  const ready = (async () => {
    try {
      const health = await client.health();
      if (health.date_min === null || health.date_max === null) {
        store.set({ searchMessage: "service corpus is empty" });
        return;
      }
      corpusMin = health.date_min;
      const span = daysBetween(health.date_min, health.date_max);
      sliderFrom.max = String(span);
      sliderTo.max = String(span);
      sliderFrom.disabled = false;
      sliderTo.disabled = false;
      store.set({ dateFrom: health.date_min, dateTo: health.date_max });
      const history = await client.history();
      store.set({ history });
    } catch (err) {
      store.set({ searchMessage: errorText(err) });
    }
  })();

  function destroy(): void {
    unsubscribe();
    searchAbort?.abort();
    cloudAbort?.abort();
    readingAbort?.abort();
    root.textContent = "";
  }

  return { store, ready, destroy };
}
