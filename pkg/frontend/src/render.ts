/** Event card rendering.
 *
 * Cards are plain HTML strings. The description comes from the API's
 * description_html field (requested with html=true), whose anchors already
 * point at the event's source-language Wikipedia; everything the client
 * adds itself is escaped, so raw wiki markup can never reach the DOM.
 */

import type { ApiDate, ApiEvent } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function pad2(n: number): string {
  return String(n).padStart(2, "0");
}

/** Human-readable label: "2010-01-12", "1945-02", "44 BCE", and ranged
 * forms like "2010-02-12 – 2010-02-28". */
export function formatDateLabel(date: ApiDate): string {
  const era = date.year < 0 ? " BCE" : "";
  const year = String(Math.abs(date.year));
  if (date.month === null) return `${year}${era}`;
  if (date.day === null) return `${year}-${pad2(date.month)}${era}`;
  const start = `${year}-${pad2(date.month)}-${pad2(date.day)}`;
  if (date.end_day === null) return `${start}${era}`;
  const endMonth = date.end_month ?? date.month;
  return `${start} – ${year}-${pad2(endMonth)}-${pad2(date.end_day)}${era}`;
}

function descriptionHtml(event: ApiEvent): string {
  // html=true is part of the fetch contract; if a response ever arrives
  // without it, fall back to the escaped plain text, never to raw markup.
  return event.description_html ?? escapeHtml(event.description_plain);
}

export function renderEventCard(event: ApiEvent): string {
  const parts: string[] = [];
  parts.push(`<article class="event-card" data-event-id="${escapeHtml(event.id)}">`);
  if (event.image) {
    parts.push(
      `<img class="event-thumb" src="${escapeHtml(event.image.thumb_url)}"` +
      ` width="${event.image.width_px}"` +
      ` alt="${escapeHtml(event.image.file_title)}">`,
    );
  }
  parts.push(`<time class="event-date">${escapeHtml(formatDateLabel(event.date))}</time>`);
  if (event.category_path.length > 0) {
    parts.push(
      `<nav class="event-categories">` +
      event.category_path.map((c) => `<span>${escapeHtml(c)}</span>`).join(" / ") +
      `</nav>`,
    );
  }
  parts.push(`<p class="event-description">${descriptionHtml(event)}</p>`);
  parts.push(`</article>`);
  return parts.join("");
}

/** The lane for one fetched window; empty windows get an explicit marker. */
export function renderLane(events: ApiEvent[]): string {
  if (events.length === 0) {
    return `<div class="event-lane event-lane-empty">no events</div>`;
  }
  return `<div class="event-lane">${events.map(renderEventCard).join("")}</div>`;
}

/** Inline banner shown when a window fetch fails; the viewport that was
 * being looked at stays as it is. */
export function renderRetryBanner(message: string): string {
  return (
    `<div class="retry-banner" role="alert">` +
    `<span>${escapeHtml(message)}</span>` +
    `<button class="retry-button" type="button">Retry</button>` +
    `</div>`
  );
}
