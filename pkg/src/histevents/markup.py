"""Wiki markup utilities: link extraction and plain-text stripping.

The character-scanning kernels live in the compiled ``_scanner`` extension
when it built, otherwise in the pure-Python ``_scanner_py`` twin; selection
happens once at import. ``SCANNER_IMPL`` tells you which one is active.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

try:
    from . import _scanner as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    from . import _scanner_py as _impl

SCANNER_IMPL: str = _impl.IMPL

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WikiLink:
    """An internal wiki link; anchor defaults to the target when no pipe
    is present. Targets use spaces, not underscores."""

    target: str
    anchor: str


def extract_links(markup: str) -> tuple[str, list[WikiLink]]:
    """Replace each ``[[Target|anchor]]`` by its anchor text and collect
    the links in order of appearance. Unbalanced brackets stay literal."""
    plain, raw_links, warnings = _impl.extract_links(markup)
    for w in warnings:
        log.warning("link extraction: %s in %r", w, markup[:80])
    return plain, [WikiLink(t.replace("_", " "), a) for t, a in raw_links]


def strip_markup(markup: str) -> str:
    """Best-effort plain text: drops comments, <ref> blocks, {{templates}}
    and quote markup, then collapses whitespace."""
    plain, warnings = _impl.strip_markup(markup)
    for w in warnings:
        log.warning("strip: %s in %r", w, markup[:80])
    return plain


def to_plain(markup: str) -> tuple[str, list[WikiLink]]:
    """Full description pipeline: links first (so link order is the order
    of appearance in the markup), then markup stripping."""
    linked, links = extract_links(markup)
    return strip_markup(linked), links
