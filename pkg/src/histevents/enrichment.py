"""Image assignment: one representative thumbnail per event.

Walks the event's links in order; the first linked article that has any
non-blocklisted image wins, and within an article the alphabetically
first file is taken. Alphabetical-first is a deliberate fidelity choice:
the picked image is not always a perfect fit, but coverage is high and
no relevance ranking is attempted.
"""

from __future__ import annotations

import logging
import threading

from .extractor import Event, ImageRef, with_image
from .ingest import (DEFAULT_THUMB_WIDTH, PageNotFound, PageSource,
                     TransportError, image_thumb_url, list_images)
from .profiles import LanguageProfile

log = logging.getLogger(__name__)


class ImageCache:
    """Shared memo of per-article image lists and per-(file, width) thumb
    URLs; entries never invalidate mid-run."""

    def __init__(self):
        self._images: dict[str, list[str] | None] = {}
        self._thumbs: dict[tuple[str, int], str | None] = {}
        self._lock = threading.Lock()

    def images_for(self, source: PageSource, title: str) -> list[str] | None:
        with self._lock:
            if title in self._images:
                return self._images[title]
        try:
            files = list_images(source, title)
        except PageNotFound:
            files = []
        except TransportError as exc:
            log.warning("image listing failed for %s: %s", title, exc)
            return None  # not cached; a later retry may succeed
        with self._lock:
            self._images.setdefault(title, files)
        return files

    def thumb_for(self, source: PageSource, file_title: str, width: int) -> str | None:
        key = (file_title, width)
        with self._lock:
            if key in self._thumbs:
                return self._thumbs[key]
        try:
            url = image_thumb_url(source, file_title, width)
        except PageNotFound:
            url = None
        except TransportError as exc:
            log.warning("thumb lookup failed for %s: %s", file_title, exc)
            return None
        with self._lock:
            self._thumbs.setdefault(key, url)
        return url


def _blocklisted(file_title: str, profile: LanguageProfile) -> bool:
    lowered = file_title.replace("_", " ").lower()
    for frag in profile.standard_image_blocklist:
        if frag.replace("_", " ").lower() in lowered:
            return True
    return False


def assign_image(event: Event, source: PageSource, cache: ImageCache,
                 profile: LanguageProfile,
                 width: int = DEFAULT_THUMB_WIDTH) -> Event:
    """Return the event with an image when any link yields one; transport
    trouble on a link skips that link, never fails the event."""
    if event.image is not None:
        return event
    for link in event.links:
        files = cache.images_for(source, link.target)
        if not files:
            continue
        for file_title in files:  # already alphabetically sorted
            if _blocklisted(file_title, profile):
                continue
            url = cache.thumb_for(source, file_title, width)
            if url:
                return with_image(event, ImageRef(file_title, url, width))
            break  # first non-blocklisted file is the only candidate per article
    return event
