"""Page and image retrieval: live MediaWiki API or offline fixture corpus.

Offline mode reads ``<slug>.wiki`` files (slug = title with spaces as
underscores) plus an optional ``images.manifest`` (tab-separated: page
title, then image file titles) from a per-language directory. It is the
default for tests and the determinism anchor for the pipeline.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from urllib.parse import urlsplit

import requests

USER_AGENT = "histevents/0.1 (historical event extraction; batch; contact: repo issues)"
DEFAULT_THUMB_WIDTH = 150
_RETRIES = 3
_BACKOFF = 0.5


class PageNotFound(LookupError):
    """The wiki has no such page (never retried)."""


class TransportError(RuntimeError):
    """Network/HTTP failure; retryable."""


@dataclass(frozen=True)
class PageSource:
    """Where pages come from: kind is "live" (endpoint_or_path = API URL)
    or "offline" (endpoint_or_path = corpus directory)."""

    kind: str
    endpoint_or_path: str
    lang: str

    def __post_init__(self):
        if self.kind not in ("live", "offline"):
            raise ValueError(f"unknown source kind {self.kind!r}")
        if self.kind == "offline" and not Path(self.endpoint_or_path).is_dir():
            raise ValueError(f"offline corpus directory missing: {self.endpoint_or_path}")


@dataclass(frozen=True)
class RawPage:
    title: str
    lang: str
    wikitext: str
    fetched_at: datetime


def offline_source(corpus_root: str | Path, lang: str) -> PageSource:
    return PageSource("offline", str(Path(corpus_root) / lang), lang)


def live_source(lang: str) -> PageSource:
    return PageSource("live", f"https://{lang}.wikipedia.org/w/api.php", lang)


class RateLimiter:
    """One token per host with a minimum inter-request delay. Shared by all
    workers so live traffic stays polite regardless of parallelism."""

    def __init__(self, min_interval: float = 0.2):
        self.min_interval = min_interval
        self._lock = threading.Lock()
        self._last: dict[str, float] = {}

    def wait(self, host: str) -> None:
        with self._lock:
            now = time.monotonic()
            due = self._last.get(host, 0.0) + self.min_interval
            if due > now:
                time.sleep(due - now)
                now = time.monotonic()
            self._last[host] = now


_limiter = RateLimiter()


def _api_get(source: PageSource, params: dict) -> dict:
    host = urlsplit(source.endpoint_or_path).netloc
    last_exc = None
    for attempt in range(_RETRIES):
        _limiter.wait(host)
        try:
            resp = requests.get(
                source.endpoint_or_path,
                params={"format": "json", "formatversion": "2", **params},
                headers={"User-Agent": USER_AGENT},
                timeout=30,
            )
            if resp.status_code >= 500:
                raise TransportError(f"HTTP {resp.status_code}")
            resp.raise_for_status()
            return resp.json()
        except (requests.RequestException, TransportError, ValueError) as exc:
            last_exc = exc
            time.sleep(_BACKOFF * 2**attempt)
    raise TransportError(f"API request failed after {_RETRIES} attempts: {last_exc}")


def _slug(title: str) -> str:
    return title.replace(" ", "_")


def fetch_page(source: PageSource, title: str) -> RawPage:
    """Current wikitext of a page. Missing page raises PageNotFound,
    transport trouble raises TransportError."""
    if not title:
        raise ValueError("empty title")
    if source.kind == "offline":
        path = Path(source.endpoint_or_path) / f"{_slug(title)}.wiki"
        if not path.is_file():
            raise PageNotFound(f"{source.lang}:{title}")
        return RawPage(title, source.lang, path.read_text("utf-8"),
                       datetime.now(timezone.utc))
    data = _api_get(source, {
        "action": "query",
        "prop": "revisions",
        "rvprop": "content",
        "rvslots": "main",
        "titles": title,
    })
    pages = data.get("query", {}).get("pages", [])
    if not pages or pages[0].get("missing"):
        raise PageNotFound(f"{source.lang}:{title}")
    try:
        wikitext = pages[0]["revisions"][0]["slots"]["main"]["content"]
    except (KeyError, IndexError) as exc:
        raise TransportError(f"unexpected API response shape: {exc}") from exc
    return RawPage(title, source.lang, wikitext, datetime.now(timezone.utc))


def _load_manifest(source: PageSource) -> dict[str, list[str]]:
    path = Path(source.endpoint_or_path) / "images.manifest"
    manifest: dict[str, list[str]] = {}
    if path.is_file():
        for line in path.read_text("utf-8").splitlines():
            if not line.strip():
                continue
            parts = line.split("\t")
            manifest[parts[0]] = [p for p in parts[1:] if p]
    return manifest


def list_images(source: PageSource, title: str) -> list[str]:
    """Image file titles used on a page, sorted ascending and de-duplicated
    (sorting is enforced locally even when the source already sorts)."""
    if not title:
        raise ValueError("empty title")
    if source.kind == "offline":
        manifest = _load_manifest(source)
        if title not in manifest:
            raise PageNotFound(f"{source.lang}:{title}")
        return sorted(set(manifest[title]))
    data = _api_get(source, {
        "action": "query",
        "prop": "images",
        "imlimit": "500",
        "titles": title,
    })
    pages = data.get("query", {}).get("pages", [])
    if not pages or pages[0].get("missing"):
        raise PageNotFound(f"{source.lang}:{title}")
    files = [img["title"] for img in pages[0].get("images", [])]
    return sorted(set(files))


def image_thumb_url(source: PageSource, file_title: str,
                    width_px: int = DEFAULT_THUMB_WIDTH) -> str:
    """Server-side resized thumbnail URL; the path always carries the
    ``{width}px-`` segment so downstream can rewrite the size."""
    if width_px < 1:
        raise ValueError("width_px must be >= 1")
    if source.kind == "offline":
        return f"offline://thumb/{width_px}px-{_slug(file_title)}"
    name = file_title if file_title.lower().startswith("file:") else f"File:{file_title}"
    data = _api_get(source, {
        "action": "query",
        "prop": "imageinfo",
        "iiprop": "url",
        "iiurlwidth": str(width_px),
        "titles": name,
    })
    pages = data.get("query", {}).get("pages", [])
    if not pages or pages[0].get("missing"):
        raise PageNotFound(f"file {file_title}")
    info = pages[0].get("imageinfo", [])
    if not info or "thumburl" not in info[0]:
        raise PageNotFound(f"no thumbnail for {file_title}")
    return info[0]["thumburl"]
