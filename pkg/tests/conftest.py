"""Shared fixtures: the offline fixture corpus, its gold annotations, and
a store populated from a full extraction pass."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from histevents.extractor import Event, extract_page
from histevents.ingest import offline_source
from histevents.profiles import load_default_profiles
from histevents.store import EventStore

REPO_ROOT = Path(__file__).resolve().parent.parent
CORPUS_ROOT = REPO_ROOT / "fixtures" / "corpus"
GOLD_PATH = REPO_ROOT / "fixtures" / "gold" / "events.jsonl"


@pytest.fixture(scope="session")
def profiles():
    return load_default_profiles()


@pytest.fixture(scope="session")
def corpus_root() -> Path:
    return CORPUS_ROOT


@pytest.fixture(scope="session")
def gold_events() -> list[dict]:
    out = []
    for line in GOLD_PATH.read_text("utf-8").splitlines():
        if line.strip():
            out.append(json.loads(line))
    return out


def corpus_pages() -> list[tuple[str, str, Path]]:
    """(lang, title, path) for every fixture page."""
    pages = []
    for path in sorted(CORPUS_ROOT.glob("*/*.wiki")):
        lang = path.parent.name
        title = path.name[: -len(".wiki")].replace("_", " ")
        pages.append((lang, title, path))
    return pages


@pytest.fixture(scope="session")
def extraction(profiles):
    """{(lang, title): (events, report)} over the whole fixture corpus."""
    out = {}
    for lang, title, path in corpus_pages():
        out[(lang, title)] = extract_page(
            path.read_text("utf-8"), title, profiles[lang])
    return out


@pytest.fixture(scope="session")
def all_events(extraction) -> list[Event]:
    return [e for events, _ in extraction.values() for e in events]


@pytest.fixture()
def populated_store(all_events, profiles):
    store = EventStore(":memory:")
    for prof in profiles.values():
        store.register_category_aliases(prof.category_headings)
    store.upsert_events(all_events)
    yield store
    store.close()


@pytest.fixture()
def offline_sources():
    return {lang: offline_source(CORPUS_ROOT, lang) for lang in ("en", "de", "it")}


def gold_key(g: dict):
    """Comparison key for a gold record."""
    return (g["lang"], g["title"],
            (g["year"], g.get("month"), g.get("day"),
             g.get("end_month"), g.get("end_day")),
            g["plain"],
            tuple((t, a) for t, a in g["links"]))


def event_key(e: Event):
    """Comparison key for an extracted event, aligned with gold_key."""
    d = e.date
    return (e.lang, e.source_title,
            (d.year, d.month, d.day, d.end_month, d.end_day),
            e.description_plain,
            tuple((l.target, l.anchor) for l in e.links))
