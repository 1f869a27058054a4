"""Embedded event store: a single sqlite file plus normalized queries.

Events are persisted as JSON blobs with indexed filter columns; category
aliases (localized heading -> canonical key) are persisted alongside so
queries can use either form.
"""

from __future__ import annotations

import json
import sqlite3
from dataclasses import dataclass

from .dates import HistoricalDate, pack_date_key
from .extractor import Event, ImageRef
from .markup import WikiLink

DEFAULT_LIMIT = 1000
HARD_LIMIT = 10_000


@dataclass(frozen=True)
class EventQuery:
    """Normalized filter evaluated by the store (and mirrored by the HTTP
    API). Date bounds are packed date keys, inclusive."""

    begin_date: int | None = None
    end_date: int | None = None
    lang: str | None = None
    category: str | None = None
    keyword: str | None = None
    limit: int = DEFAULT_LIMIT
    order: str = "asc"
    offset: int = 0

    def __post_init__(self):
        if self.begin_date is not None and self.end_date is not None \
                and self.begin_date > self.end_date:
            raise ValueError("begin_date after end_date")
        if self.order not in ("asc", "desc"):
            raise ValueError(f"order must be asc/desc, got {self.order!r}")
        if self.limit < 1 or self.offset < 0:
            raise ValueError("limit must be >= 1 and offset >= 0")


def event_to_dict(ev: Event) -> dict:
    d = ev.date
    out = {
        "id": ev.id,
        "lang": ev.lang,
        "date": {"year": d.year, "month": d.month, "day": d.day,
                 "end_month": d.end_month, "end_day": d.end_day},
        "granularity": ev.granularity,
        "category_path": list(ev.category_path),
        "description_wiki": ev.description_wiki,
        "description_plain": ev.description_plain,
        "links": [{"target": l.target, "anchor": l.anchor} for l in ev.links],
        "image": None,
        "source_title": ev.source_title,
        "line_no": ev.line_no,
    }
    if ev.image is not None:
        out["image"] = {"file_title": ev.image.file_title,
                        "thumb_url": ev.image.thumb_url,
                        "width_px": ev.image.width_px}
    return out


def event_from_dict(d: dict) -> Event:
    dd = d["date"]
    image = None
    if d.get("image"):
        image = ImageRef(d["image"]["file_title"], d["image"]["thumb_url"],
                         d["image"]["width_px"])
    return Event(
        id=d["id"],
        lang=d["lang"],
        date=HistoricalDate(dd["year"], dd.get("month"), dd.get("day"),
                            dd.get("end_month"), dd.get("end_day")),
        granularity=d["granularity"],
        category_path=tuple(d.get("category_path", [])),
        description_wiki=d["description_wiki"],
        description_plain=d["description_plain"],
        links=tuple(WikiLink(l["target"], l["anchor"]) for l in d.get("links", [])),
        image=image,
        source_title=d["source_title"],
        line_no=d["line_no"],
    )


_SCHEMA = """
CREATE TABLE IF NOT EXISTS events (
    id TEXT PRIMARY KEY,
    lang TEXT NOT NULL,
    date_key INTEGER NOT NULL,
    line_no INTEGER NOT NULL,
    categories TEXT NOT NULL,   -- unit-separated lowercase category keys
    plain_lower TEXT NOT NULL,
    payload TEXT NOT NULL
);
CREATE INDEX IF NOT EXISTS idx_events_date ON events (date_key, line_no);
CREATE INDEX IF NOT EXISTS idx_events_lang ON events (lang);
CREATE TABLE IF NOT EXISTS category_aliases (
    alias TEXT PRIMARY KEY,     -- lowercase localized heading
    canonical TEXT NOT NULL
);
"""


class EventStore:
    """Single-writer sqlite store; readers see committed snapshots."""

    def __init__(self, path: str = ":memory:"):
        self.path = path
        self._conn = sqlite3.connect(path, check_same_thread=False)
        self._conn.executescript(_SCHEMA)
        self._conn.commit()

    def close(self) -> None:
        self._conn.close()

    # -- writes ---------------------------------------------------------

    def upsert_events(self, batch: list[Event]) -> tuple[int, int]:
        """Insert or replace by event id; returns (inserted, replaced).
        The whole batch commits atomically."""
        inserted = replaced = 0
        try:
            cur = self._conn.cursor()
            for ev in batch:
                exists = cur.execute(
                    "SELECT 1 FROM events WHERE id = ?", (ev.id,)).fetchone()
                cats = "\x1f".join(c.lower() for c in ev.category_path)
                cur.execute(
                    "INSERT OR REPLACE INTO events "
                    "(id, lang, date_key, line_no, categories, plain_lower, payload) "
                    "VALUES (?,?,?,?,?,?,?)",
                    (ev.id, ev.lang, ev.date.sort_key(), ev.line_no, cats,
                     ev.description_plain.lower(),
                     json.dumps(event_to_dict(ev), ensure_ascii=False, sort_keys=True)),
                )
                if exists:
                    replaced += 1
                else:
                    inserted += 1
            self._conn.commit()
        except sqlite3.Error:
            self._conn.rollback()
            raise
        return inserted, replaced

    def register_category_aliases(self, mapping: dict[str, str]) -> None:
        """Persist localized-heading -> canonical-key pairs (e.g. from a
        language profile's category_headings)."""
        cur = self._conn.cursor()
        for alias, canonical in mapping.items():
            cur.execute("INSERT OR REPLACE INTO category_aliases VALUES (?,?)",
                        (alias.lower(), canonical.lower()))
        self._conn.commit()

    # -- reads ----------------------------------------------------------

    def canonical_category(self, name: str) -> str:
        row = self._conn.execute(
            "SELECT canonical FROM category_aliases WHERE alias = ?",
            (name.lower(),)).fetchone()
        return row[0] if row else name.lower()

    def count(self) -> int:
        return self._conn.execute("SELECT COUNT(*) FROM events").fetchone()[0]

    def all_events(self) -> list[Event]:
        rows = self._conn.execute(
            "SELECT payload FROM events "
            "ORDER BY date_key, lang, line_no, id").fetchall()
        return [event_from_dict(json.loads(r[0])) for r in rows]

    def query(self, q: EventQuery) -> list[Event]:
        """Events satisfying every present filter, ordered by date key then
        line number, with offset/limit applied."""
        sql = ["SELECT payload FROM events WHERE 1=1"]
        args: list = []
        if q.begin_date is not None:
            sql.append("AND date_key >= ?")
            args.append(q.begin_date)
        if q.end_date is not None:
            sql.append("AND date_key <= ?")
            args.append(q.end_date)
        if q.lang is not None:
            sql.append("AND lang = ?")
            args.append(q.lang.lower())
        if q.category is not None:
            canonical = self.canonical_category(q.category)
            sql.append("AND instr('\x1f' || categories || '\x1f', ?) > 0")
            args.append(f"\x1f{canonical}\x1f")
        if q.keyword is not None:
            sql.append("AND instr(plain_lower, ?) > 0")
            args.append(q.keyword.lower())
        direction = "ASC" if q.order == "asc" else "DESC"
        # tie-break matches the exporters' sort so paginated slices are stable
        sql.append(f"ORDER BY date_key {direction}, lang {direction}, "
                   f"line_no {direction}, id {direction}")
        sql.append("LIMIT ? OFFSET ?")
        args.extend([min(q.limit, HARD_LIMIT), q.offset])
        rows = self._conn.execute(" ".join(sql), args).fetchall()
        return [event_from_dict(json.loads(r[0])) for r in rows]
