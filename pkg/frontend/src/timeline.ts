/** Headless timeline controller: viewport state, window fetching through
 * the cache, and keyword search. Rendering targets are HTML strings so the
 * controller is testable without a DOM; main.ts wires it to the page. */

import { ApiClient } from "./api.js";
import { WindowCache } from "./cache.js";
import { renderLane, renderRetryBanner } from "./render.js";
import type { ApiEvent } from "./types.js";
import {
  DateParts, ZoomLevel, dateSortKey, fetchSpan, shiftWindow, windowKey,
} from "./window.js";

export interface ViewportState {
  centerDate: DateParts;
  zoomLevel: ZoomLevel;
  lang: string;
  activeQuery?: string;
}

export interface LaneResult {
  html: string;
  events: ApiEvent[];
  error: string | null;
}

export class TimelineController {
  readonly cache = new WindowCache<ApiEvent[]>();
  state: ViewportState;

  constructor(private readonly api: ApiClient, initial: ViewportState) {
    this.state = { ...initial };
  }

  /** Fetch and render the lane for the current viewport (window plus one
   * window of margin each side). Failures keep the viewport and produce a
   * retry banner instead of a lane. */
  async fetchWindow(): Promise<LaneResult> {
    const span = fetchSpan(this.state.centerDate, this.state.zoomLevel);
    const key = windowKey(this.state.lang, this.state.zoomLevel, span);
    try {
      const events = await this.cache.get(key, async (signal) => {
        const resp = await this.api.searchWindow(this.state.lang, span, signal);
        return resp.events;
      });
      return { html: renderLane(events), events, error: null };
    } catch (err) {
      const message = err instanceof Error ? err.message : String(err);
      return { html: renderRetryBanner(message), events: [], error: message };
    }
  }

  /** Scroll by whole windows at the current zoom (negative = past). */
  scroll(count: number): Promise<LaneResult> {
    this.state.centerDate = shiftWindow(
      this.state.centerDate, this.state.zoomLevel, count);
    return this.fetchWindow();
  }

  setZoom(zoom: ZoomLevel): Promise<LaneResult> {
    this.state.zoomLevel = zoom;
    return this.fetchWindow();
  }

  setLanguage(lang: string): Promise<LaneResult> {
    this.state.lang = lang;
    return this.fetchWindow();
  }

  /** Keyword search: the viewport scrolls (re-centers) onto the first
   * matching event in chronological order; null when nothing matches, in
   * which case the viewport stays where it was. */
  async search(keyword: string): Promise<ApiEvent | null> {
    this.state.activeQuery = keyword;
    const resp = await this.api.search({
      query: keyword,
      language: this.state.lang,
      order: "asc",
      limit: 1,
    });
    const first = resp.events[0];
    if (!first) return null;
    this.state.centerDate = {
      year: first.date.year,
      month: first.date.month,
      day: first.date.day,
    };
    return first;
  }

  /** Sort key of the current viewport center (for scroll positioning). */
  centerKey(): number {
    return dateSortKey(this.state.centerDate);
  }
}
