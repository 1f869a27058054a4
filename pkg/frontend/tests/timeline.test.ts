import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { TimelineController } from "../src/timeline.js";
import { GoldServer, startGoldServer } from "./server.js";

let gold: GoldServer;

beforeAll(async () => {
  gold = await startGoldServer();
});

afterAll(async () => {
  await gold.close();
});

function controller(lang = "en") {
  return new TimelineController(new ApiClient(gold.baseUrl), {
    centerDate: { year: 2010, month: null, day: null },
    zoomLevel: "decade",
    lang,
  });
}

describe("ApiClient", () => {
  it("builds /search URLs with the json/html/links contract", () => {
    const url = new URL(new ApiClient("http://x").searchUrl({
      begin_date: "19400000", end_date: "19491231", language: "en",
    }));
    expect(url.pathname).toBe("/search");
    expect(url.searchParams.get("format")).toBe("json");
    expect(url.searchParams.get("html")).toBe("true");
    expect(url.searchParams.get("links")).toBe("true");
    expect(url.searchParams.get("begin_date")).toBe("19400000");
    expect(url.searchParams.get("end_date")).toBe("19491231");
  });

  it("reads /healthz", async () => {
    const health = await new ApiClient(gold.baseUrl).health();
    expect(health.status).toBe("ok");
    expect(health.events).toBeGreaterThanOrEqual(150);
  });
});

describe("fetch_window", () => {
  it("renders cards for the 2010s decade window", async () => {
    const c = controller();
    const lane = await c.fetchWindow();
    expect(lane.error).toBeNull();
    expect(lane.events.length).toBeGreaterThan(0);
    expect(lane.events.every((e) => e.lang === "en")).toBe(true);
    expect(lane.events.every((e) => e.date.year >= 2000 && e.date.year <= 2029))
      .toBe(true);
    expect(lane.html).toContain("event-card");
  });

  it("renders the empty marker for a window with no events", async () => {
    const c = controller();
    c.state.centerDate = { year: 1700, month: null, day: null };
    c.state.zoomLevel = "year";
    const lane = await c.fetchWindow();
    expect(lane.error).toBeNull();
    expect(lane.events).toHaveLength(0);
    expect(lane.html).toContain("no events");
  });

  it("caches windows: re-fetching the same viewport issues no new request",
     async () => {
    const c = controller();
    await c.fetchWindow();
    const before = c.cache.fetchCount;
    await c.fetchWindow();
    await c.fetchWindow();
    expect(c.cache.fetchCount).toBe(before);
  });

  it("scrolling to a new window fetches once per window key", async () => {
    const c = controller();
    await c.fetchWindow();
    const before = c.cache.fetchCount;
    await c.scroll(-1);
    expect(c.cache.fetchCount).toBe(before + 1);
    await c.scroll(+1); // back to the original, already cached
    expect(c.cache.fetchCount).toBe(before + 1);
  });

  it("API failure yields a retry banner and preserves the viewport", async () => {
    const c = new TimelineController(new ApiClient("http://127.0.0.1:1"), {
      centerDate: { year: 2010, month: null, day: null },
      zoomLevel: "decade",
      lang: "en",
    });
    const lane = await c.fetchWindow();
    expect(lane.error).not.toBeNull();
    expect(lane.html).toContain("retry-banner");
    expect(c.state.centerDate.year).toBe(2010);
  });

  it("no raw markup appears in any rendered lane across all gold windows",
     async () => {
    for (const lang of ["en", "de", "it"]) {
      const c = controller(lang);
      for (const year of [-44, 1945, 1950, 1961, 1969, 1989, 2009, 2010]) {
        c.state.centerDate = { year, month: null, day: null };
        const lane = await c.fetchWindow();
        expect(lane.error).toBeNull();
        expect(lane.html).not.toContain("[[");
        expect(lane.html).not.toContain("]]");
        expect(lane.html).not.toContain("{{");
      }
    }
  });
});

describe("keyword search", () => {
  it('"Egypt" scrolls the viewport to the first matching gold event', async () => {
    const c = controller();
    const hit = await c.search("Egypt");
    expect(hit).not.toBeNull();
    // chronologically first gold event mentioning Egypt: Feb 12, 1945
    expect(hit!.date).toMatchObject({ year: 1945, month: 2, day: 12 });
    expect(c.state.centerDate).toEqual({ year: 1945, month: 2, day: 12 });
    const lane = await c.fetchWindow();
    expect(lane.events.some((e) => e.id === hit!.id)).toBe(true);
    expect(lane.html).toContain(`data-event-id="${hit!.id}"`);
  });

  it("search is case-insensitive and language-scoped", async () => {
    const de = controller("de");
    const hit = await de.search("erdbeben");
    expect(hit).not.toBeNull();
    expect(hit!.lang).toBe("de");
  });

  it("no match leaves the viewport unchanged", async () => {
    const c = controller();
    const before = { ...c.state.centerDate };
    expect(await c.search("xyzzy-no-such-event")).toBeNull();
    expect(c.state.centerDate).toEqual(before);
  });
});
