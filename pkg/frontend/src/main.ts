/** Browser entry point: wires the headless controller to the page.
 *
 * Only events for the visible window (plus margin) are ever mounted, so
 * the DOM stays small no matter how large the dataset is.
 */

import { ApiClient } from "./api.js";
import { TimelineController } from "./timeline.js";
import { ZOOM_LEVELS, ZoomLevel } from "./window.js";

const CANDIDATE_LANGS = ["en", "de", "it"];

async function availableLanguages(api: ApiClient): Promise<string[]> {
  // the store exposes no language list; probe with minimal searches
  const present: string[] = [];
  for (const lang of CANDIDATE_LANGS) {
    try {
      const resp = await api.search({ language: lang, limit: 1 });
      if (resp.events.length > 0) present.push(lang);
    } catch {
      // unreachable API is reported by the first real fetch instead
    }
  }
  return present.length > 0 ? present : ["en"];
}

export async function mountTimeline(root: HTMLElement, baseUrl: string): Promise<void> {
  const api = new ApiClient(baseUrl);
  const controller = new TimelineController(api, {
    centerDate: { year: 2010, month: null, day: null },
    zoomLevel: "decade",
    lang: "en",
  });

  root.innerHTML = `
    <header class="timeline-toolbar">
      <select class="lang-select"></select>
      <select class="zoom-select"></select>
      <button class="nav-past" type="button">&#8592; past</button>
      <button class="nav-future" type="button">future &#8594;</button>
      <input class="search-input" type="search" placeholder="search events">
      <span class="health"></span>
    </header>
    <main class="lane-host"></main>
  `;
  const laneHost = root.querySelector(".lane-host") as HTMLElement;
  const langSelect = root.querySelector(".lang-select") as HTMLSelectElement;
  const zoomSelect = root.querySelector(".zoom-select") as HTMLSelectElement;
  const searchInput = root.querySelector(".search-input") as HTMLInputElement;

  for (const zoom of ZOOM_LEVELS) {
    const option = document.createElement("option");
    option.value = zoom;
    option.textContent = zoom;
    option.selected = zoom === controller.state.zoomLevel;
    zoomSelect.appendChild(option);
  }
  for (const lang of await availableLanguages(api)) {
    const option = document.createElement("option");
    option.value = lang;
    option.textContent = lang;
    option.selected = lang === controller.state.lang;
    langSelect.appendChild(option);
  }

  const show = async (render: Promise<{ html: string }>) => {
    const { html } = await render;
    laneHost.innerHTML = html;
    laneHost.querySelector(".retry-button")?.addEventListener(
      "click", () => void show(controller.fetchWindow()));
  };

  langSelect.addEventListener("change",
    () => void show(controller.setLanguage(langSelect.value)));
  zoomSelect.addEventListener("change",
    () => void show(controller.setZoom(zoomSelect.value as ZoomLevel)));
  root.querySelector(".nav-past")?.addEventListener(
    "click", () => void show(controller.scroll(-1)));
  root.querySelector(".nav-future")?.addEventListener(
    "click", () => void show(controller.scroll(+1)));
  searchInput.addEventListener("keydown", (ev) => {
    if (ev.key !== "Enter" || !searchInput.value.trim()) return;
    void controller.search(searchInput.value.trim()).then(async (hit) => {
      await show(controller.fetchWindow());
      if (hit) {
        laneHost
          .querySelector(`[data-event-id="${hit.id}"]`)
          ?.scrollIntoView({ behavior: "smooth", block: "center" });
      }
    });
  });

  try {
    const health = await api.health();
    (root.querySelector(".health") as HTMLElement).textContent =
      `${health.events} events`;
  } catch {
    // non-fatal; the lane fetch reports reachability problems
  }
  await show(controller.fetchWindow());
}

declare global {
  interface Window {
    mountTimeline?: typeof mountTimeline;
  }
}
if (typeof window !== "undefined") {
  window.mountTimeline = mountTimeline;
}
