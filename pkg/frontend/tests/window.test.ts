import { describe, expect, it } from "vitest";

import {
  daysInMonth, dateSortKey, fetchSpan, formatDateParam, parseDateParam,
  shiftWindow, windowFor, windowKey,
} from "../src/window.js";

describe("formatDateParam", () => {
  it("zero-pads to eight digits", () => {
    expect(formatDateParam(1945)).toBe("19450000");
    expect(formatDateParam(44, 3, 15)).toBe("00440315");
  });

  it("keeps the BCE sign", () => {
    expect(formatDateParam(-44, 3, 15)).toBe("-00440315");
  });

  it("rejects year 0", () => {
    expect(() => formatDateParam(0)).toThrow(RangeError);
  });

  it("round-trips through parseDateParam", () => {
    for (const [y, m, d] of [[2010, 1, 12], [-300, 0, 0], [1945, 2, 0]] as const) {
      const parts = parseDateParam(formatDateParam(y, m, d));
      expect(parts).toEqual({ year: y, month: m || null, day: d || null });
    }
  });
});

describe("windowFor", () => {
  it("decade zoom on the 1940s yields the documented parameters", () => {
    const win = windowFor({ year: 1944, month: 6, day: 6 }, "decade");
    expect(win).toEqual({ begin: "19400000", end: "19491231" });
  });

  it("aligns any year of the decade to the same window", () => {
    for (let year = 1940; year <= 1949; year++) {
      expect(windowFor({ year, month: null, day: null }, "decade"))
        .toEqual({ begin: "19400000", end: "19491231" });
    }
  });

  it("century zoom", () => {
    expect(windowFor({ year: 1944, month: null, day: null }, "century"))
      .toEqual({ begin: "19000000", end: "19991231" });
  });

  it("millennium zoom", () => {
    expect(windowFor({ year: 1944, month: null, day: null }, "millennium"))
      .toEqual({ begin: "10000000", end: "19991231" });
  });

  it("year zoom", () => {
    expect(windowFor({ year: 2010, month: 4, day: 1 }, "year"))
      .toEqual({ begin: "20100000", end: "20101231" });
  });

  it("month zoom covers month-granularity keys and the real month end", () => {
    expect(windowFor({ year: 2010, month: 2, day: 14 }, "month"))
      .toEqual({ begin: "20100200", end: "20100228" });
    expect(windowFor({ year: 2012, month: 2, day: 1 }, "month"))
      .toEqual({ begin: "20120200", end: "20120229" });
  });

  it("BCE decades align on the negative number line", () => {
    expect(windowFor({ year: -44, month: 3, day: 15 }, "decade"))
      .toEqual({ begin: "-00500000", end: "-00411231" });
  });

  it("never emits year 0", () => {
    const win = windowFor({ year: 5, month: null, day: null }, "decade");
    expect(win.begin).toBe("00010000");
    const bce = windowFor({ year: -5, month: null, day: null }, "decade");
    expect(bce).toEqual({ begin: "-00100000", end: "-00011231" });
  });
});

describe("shiftWindow and fetchSpan", () => {
  it("shifts by whole windows", () => {
    expect(shiftWindow({ year: 1944, month: null, day: null }, "decade", 1).year)
      .toBe(1954);
    expect(shiftWindow({ year: 1944, month: null, day: null }, "decade", -2).year)
      .toBe(1924);
  });

  it("month shift wraps across year boundaries", () => {
    expect(shiftWindow({ year: 2010, month: 12, day: null }, "month", 1))
      .toEqual({ year: 2011, month: 1, day: null });
    expect(shiftWindow({ year: 2010, month: 1, day: null }, "month", -1))
      .toEqual({ year: 2009, month: 12, day: null });
  });

  it("fetch span is the viewport window plus one window each side", () => {
    expect(fetchSpan({ year: 1944, month: null, day: null }, "decade"))
      .toEqual({ begin: "19300000", end: "19591231" });
  });
});

describe("windowKey", () => {
  it("is distinct per language, zoom and window", () => {
    const win = windowFor({ year: 1944, month: null, day: null }, "decade");
    const keys = new Set([
      windowKey("en", "decade", win),
      windowKey("de", "decade", win),
      windowKey("en", "century", windowFor({ year: 1944, month: null, day: null }, "century")),
    ]);
    expect(keys.size).toBe(3);
  });
});

describe("dateSortKey", () => {
  it("orders BCE correctly", () => {
    const feb = dateSortKey({ year: -44, month: 2, day: 14 });
    const mar = dateSortKey({ year: -44, month: 3, day: 15 });
    expect(feb).toBeLessThan(mar);
    expect(dateSortKey({ year: -300, month: null, day: null })).toBeLessThan(feb);
  });
});

describe("daysInMonth", () => {
  it("applies the Gregorian leap rule with the BCE offset", () => {
    expect(daysInMonth(2012, 2)).toBe(29);
    expect(daysInMonth(1900, 2)).toBe(28);
    expect(daysInMonth(-45, 2)).toBe(29); // astronomical -44, leap
    expect(daysInMonth(-44, 2)).toBe(28);
  });
});
