/** Client-side window cache.
 *
 * Keyed by (lang, zoom, window); a key's fetch starts at most once, and
 * while it is in flight all further requests for the key share the same
 * promise — scrolling never issues duplicate requests for a window that
 * is cached or loading. In-flight fetches are cancellable per key.
 */

export type WindowFetcher<T> = (signal: AbortSignal) => Promise<T>;

interface Entry<T> {
  promise: Promise<T>;
  controller: AbortController;
  settled: boolean;
}

export class WindowCache<T> {
  private readonly entries = new Map<string, Entry<T>>();
  /** number of fetcher invocations, observable for tests */
  fetchCount = 0;

  /** Resolve `key`, reusing a cached or in-flight result when present. */
  get(key: string, fetcher: WindowFetcher<T>): Promise<T> {
    const existing = this.entries.get(key);
    if (existing) return existing.promise;

    const controller = new AbortController();
    this.fetchCount += 1;
    const entry: Entry<T> = { controller, settled: false, promise: undefined! };
    entry.promise = fetcher(controller.signal).then(
      (value) => {
        entry.settled = true;
        return value;
      },
      (err) => {
        // a failed window must be retryable, so drop it from the cache
        this.entries.delete(key);
        throw err;
      },
    );
    this.entries.set(key, entry);
    return entry.promise;
  }

  has(key: string): boolean {
    return this.entries.has(key);
  }

  /** Abort the in-flight fetch for `key` (no-op if absent or settled). */
  cancel(key: string): void {
    const entry = this.entries.get(key);
    if (entry && !entry.settled) {
      entry.controller.abort();
      this.entries.delete(key);
    }
  }

  /** Abort every in-flight fetch and forget all windows. */
  clear(): void {
    for (const entry of this.entries.values()) {
      if (!entry.settled) entry.controller.abort();
    }
    this.entries.clear();
  }

  get size(): number {
    return this.entries.size;
  }
}
