/** Thin client for the query API. Only GET /search and GET /healthz are
 * used; responses are requested as JSON with html=true and links=true so
 * cards never have to touch raw wiki markup. */

import type { HealthResponse, SearchResponse } from "./types.js";
import type { DateWindow } from "./window.js";

export interface SearchParams {
  begin_date?: string;
  end_date?: string;
  language?: string;
  query?: string;
  category?: string;
  limit?: number;
  offset?: number;
  order?: "asc" | "desc";
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  searchUrl(params: SearchParams): string {
    const url = new URL("/search", this.baseUrl);
    url.searchParams.set("format", "json");
    url.searchParams.set("html", "true");
    url.searchParams.set("links", "true");
    for (const [key, value] of Object.entries(params)) {
      if (value !== undefined) url.searchParams.set(key, String(value));
    }
    return url.toString();
  }

  async search(params: SearchParams, signal?: AbortSignal): Promise<SearchResponse> {
    const resp = await this.fetchImpl(this.searchUrl(params), { signal });
    if (!resp.ok) {
      throw new ApiError(resp.status, `search failed: HTTP ${resp.status}`);
    }
    return (await resp.json()) as SearchResponse;
  }

  searchWindow(lang: string, win: DateWindow,
               signal?: AbortSignal): Promise<SearchResponse> {
    return this.search(
      { begin_date: win.begin, end_date: win.end, language: lang },
      signal,
    );
  }

  async health(): Promise<HealthResponse> {
    const resp = await this.fetchImpl(new URL("/healthz", this.baseUrl).toString());
    if (!resp.ok) {
      throw new ApiError(resp.status, `healthz failed: HTTP ${resp.status}`);
    }
    return (await resp.json()) as HealthResponse;
  }
}
