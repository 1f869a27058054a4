/** Viewport window arithmetic.
 *
 * Dates travel as zero-padded `[-]YYYYMMDD` strings (month/day `00` means
 * "whole year"/"whole month"). Years are signed, negative = BCE, and year
 * 0 does not exist; windows that would start or end on year 0 are clamped
 * to the nearest real year.
 */

export type ZoomLevel = "millennium" | "century" | "decade" | "year" | "month";

export const ZOOM_LEVELS: readonly ZoomLevel[] = [
  "millennium", "century", "decade", "year", "month",
];

/** Years spanned by one window at each year-quantized zoom level. */
const ZOOM_YEARS: Record<Exclude<ZoomLevel, "month">, number> = {
  millennium: 1000,
  century: 100,
  decade: 10,
  year: 1,
};

const DAYS_IN_MONTH = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31];

export interface DateParts {
  year: number;
  month: number | null;
  day: number | null;
}

export interface DateWindow {
  /** inclusive begin, `[-]YYYYMMDD` */
  begin: string;
  /** inclusive end, `[-]YYYYMMDD` */
  end: string;
}

export function isLeapYear(year: number): boolean {
  // proleptic Gregorian; historical year -1 is astronomical year 0
  const astro = year > 0 ? year : year + 1;
  return astro % 4 === 0 && (astro % 100 !== 0 || astro % 400 === 0);
}

export function daysInMonth(year: number, month: number): number {
  if (month === 2 && isLeapYear(year)) return 29;
  const days = DAYS_IN_MONTH[month - 1];
  if (days === undefined) throw new RangeError(`month ${month} out of range`);
  return days;
}

export function formatDateParam(year: number, month = 0, day = 0): string {
  if (year === 0) throw new RangeError("year 0 does not exist");
  const sign = year < 0 ? "-" : "";
  const y = String(Math.abs(year)).padStart(4, "0");
  const m = String(month).padStart(2, "0");
  const d = String(day).padStart(2, "0");
  return `${sign}${y}${m}${d}`;
}

export function parseDateParam(value: string): DateParts {
  const m = /^(-?)(\d{4})(\d{2})(\d{2})$/.exec(value);
  if (!m) throw new RangeError(`malformed date parameter: ${value}`);
  const year = Number(m[2]) * (m[1] === "-" ? -1 : 1);
  if (year === 0) throw new RangeError("year 0 does not exist");
  return {
    year,
    month: Number(m[3]) || null,
    day: Number(m[4]) || null,
  };
}

function clampYear(year: number): number {
  // windows computed on the number line may land on the nonexistent year 0
  return year === 0 ? 1 : year;
}

/** First year of the aligned block of `width` years containing `year`.
 * Alignment uses decimal blocks (1940s = 1940..1949); BCE years align the
 * same way on the negative number line (the 40s BC block is -49..-40).
 */
function alignYear(year: number, width: number): number {
  return Math.floor(year / width) * width;
}

/** The aligned window containing `center` at the given zoom. */
export function windowFor(center: DateParts, zoom: ZoomLevel): DateWindow {
  if (zoom === "month") {
    const month = center.month ?? 1;
    const year = clampYear(center.year);
    return {
      begin: formatDateParam(year, month, 0),
      end: formatDateParam(year, month, daysInMonth(year, month)),
    };
  }
  const width = ZOOM_YEARS[zoom];
  const first = alignYear(center.year, width);
  const last = first + width - 1;
  return {
    begin: formatDateParam(clampYear(first), 0, 0),
    end: formatDateParam(clampYear(last), 12, 31),
  };
}

/** Shift a window by `count` whole windows (negative = into the past). */
export function shiftWindow(center: DateParts, zoom: ZoomLevel,
                            count: number): DateParts {
  if (zoom === "month") {
    const month0 = (center.month ?? 1) - 1 + count;
    const yearShift = Math.floor(month0 / 12);
    return {
      year: clampYear(center.year + yearShift),
      month: ((month0 % 12) + 12) % 12 + 1,
      day: null,
    };
  }
  const width = ZOOM_YEARS[zoom];
  return { year: clampYear(center.year + count * width), month: null, day: null };
}

/** The span actually fetched for a viewport: the aligned window plus one
 * full window of margin on each side, so scrolling has content ready. */
export function fetchSpan(center: DateParts, zoom: ZoomLevel): DateWindow {
  const previous = windowFor(shiftWindow(center, zoom, -1), zoom);
  const next = windowFor(shiftWindow(center, zoom, +1), zoom);
  return { begin: previous.begin, end: next.end };
}

/** Stable cache key for one fetched window. */
export function windowKey(lang: string, zoom: ZoomLevel, win: DateWindow): string {
  return `${lang}|${zoom}|${win.begin}|${win.end}`;
}

/** Packed comparable key mirroring the server's sort order. */
export function dateSortKey(d: DateParts): number {
  return d.year * 10000 + (d.month ?? 0) * 100 + (d.day ?? 0);
}
