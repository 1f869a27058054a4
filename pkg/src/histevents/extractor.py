"""Event extraction from year-article wikitext.

Locates the events section via the profile's entry/exit patterns, tracks
category and month headings, and decomposes each bullet line into a
structured event. Every candidate line (bullet inside the section) is
accounted for: it either becomes an event or a recorded failure, and no
exception escapes a single line's processing.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field, replace

from .dates import DateError, HistoricalDate
from .markup import WikiLink, extract_links, to_plain
from .profiles import LanguageProfile


class SectionNotFound(LookupError):
    """No heading matched any events entry pattern."""


@dataclass(frozen=True)
class ImageRef:
    file_title: str
    thumb_url: str
    width_px: int


@dataclass(frozen=True)
class Event:
    id: str
    lang: str
    date: HistoricalDate
    granularity: str
    category_path: tuple[str, ...]
    description_wiki: str
    description_plain: str
    links: tuple[WikiLink, ...]
    image: ImageRef | None
    source_title: str
    line_no: int


@dataclass(frozen=True)
class Failure:
    line_no: int
    raw_line: str
    reason: str


@dataclass
class ExtractionReport:
    """Per-page quality record; quotient is extracted/candidates (1.0 for
    an empty page)."""

    source_title: str
    lang: str
    candidate_count: int = 0
    extracted_count: int = 0
    failures: list[Failure] = field(default_factory=list)
    unknown_headings: list[str] = field(default_factory=list)

    @property
    def quotient(self) -> float:
        if self.candidate_count == 0:
            return 1.0
        return self.extracted_count / self.candidate_count


_HEADING_RE = re.compile(r"^(=+)\s*(.*?)\s*=+\s*$")


def event_id(lang: str, source_title: str, description_wiki: str) -> str:
    """Stable content hash: survives re-crawls of unchanged content,
    changes when the event text is edited."""
    normalized = " ".join(description_wiki.split())
    h = hashlib.sha1(f"{lang}\x1f{source_title}\x1f{normalized}".encode())
    return h.hexdigest()[:16]


def year_from_title(profile: LanguageProfile, title: str) -> int:
    """Signed year denoted by an article title (inverse of year_title)."""
    bce_tpl = profile.year_title_template["bce"]
    bce_re = re.escape(bce_tpl).replace(re.escape("{year}"), r"(\d+)")
    m = re.fullmatch(bce_re, title.strip())
    if m:
        return -int(m.group(1))
    ce_tpl = profile.year_title_template["ce"]
    ce_re = re.escape(ce_tpl).replace(re.escape("{year}"), r"(\d+)")
    m = re.fullmatch(ce_re, title.strip())
    if m:
        return int(m.group(1))
    raise ValueError(f"title {title!r} does not denote a year under profile {profile.lang!r}")


def locate_event_section(wikitext: str, profile: LanguageProfile) -> tuple[int, int]:
    """(start, end) character offsets of the events section body: after the
    first heading matching an entry pattern, up to the first subsequent
    heading matching an exit pattern (or end of text)."""
    entry = profile.compiled("events_entry_patterns")
    exit_ = profile.compiled("events_exit_patterns")
    start = None
    offset = 0
    for line in wikitext.splitlines(keepends=True):
        stripped = line.strip()
        if _HEADING_RE.match(stripped):
            if start is None:
                if any(p.search(stripped) for p in entry):
                    start = offset + len(line)
            elif any(p.search(stripped) for p in exit_):
                return start, offset
        offset += len(line)
    if start is None:
        raise SectionNotFound("no events entry heading found")
    return start, len(wikitext)


def segment_context(wikitext: str, span: tuple[int, int], profile: LanguageProfile):
    """Yield (line_no, line, category_path, current_month) for every
    non-heading line in the section. line_no is 1-based over the whole
    page. Heading state resets at its own level and deeper."""
    start, end = span
    line_no = wikitext.count("\n", 0, start)
    # levels map heading depth -> (label, is_month); rebuilt as headings pass
    levels: dict[int, tuple[str, bool]] = {}
    unknown: list[str] = []
    offset = start
    for line in wikitext[start:end].splitlines(keepends=True):
        line_no += 1
        text = line.rstrip("\n")
        m = _HEADING_RE.match(text.strip())
        if m:
            depth = len(m.group(1))
            label = extract_links(m.group(2))[0].strip()
            for d in [d for d in levels if d >= depth]:
                del levels[d]
            month = profile.month_number(label)
            if month is not None:
                levels[depth] = (str(month), True)
            else:
                canonical = profile.category_headings.get(label)
                if canonical is None:
                    canonical = label
                    unknown.append(label)
                levels[depth] = (canonical, False)
        else:
            cats = tuple(lbl for _, (lbl, is_m) in sorted(levels.items()) if not is_m)
            months = [int(lbl) for _, (lbl, is_m) in sorted(levels.items()) if is_m]
            yield line_no, text, cats, (months[-1] if months else None), list(unknown)
            unknown.clear()
        offset += len(line)


def _find_separator(body: str, separators: tuple[str, ...]):
    """Occurrences of each separator outside [[..]] and {{..}}, in profile
    priority order. Yields (position, separator)."""
    # precompute bracket depth per character
    depth = 0
    depths = []
    i = 0
    n = len(body)
    while i < n:
        two = body[i : i + 2]
        if two in ("[[", "{{"):
            depth += 1
            depths.extend((depth, depth))
            i += 2
        elif two in ("]]", "}}") and depth:
            depths.extend((depth, depth))
            depth -= 1
            i += 2
        else:
            depths.append(depth)
            i += 1
    for sep in separators:
        pos = 0
        while True:
            pos = body.find(sep, pos)
            if pos < 0:
                break
            if depths[pos] == 0:
                yield pos, sep
            pos += 1


_DATE_TRIM = " \t.,;:"


def _parse_date_field(field_text: str, year: int, context_month: int | None,
                      profile: LanguageProfile) -> HistoricalDate | None:
    plain = extract_links(field_text)[0].strip(_DATE_TRIM)
    if not plain:
        return None
    for pat in profile.compiled("date_patterns"):
        m = pat.fullmatch(plain)
        if not m:
            continue
        g = m.groupdict()
        month = None
        if g.get("month"):
            month = profile.month_number(g["month"])
            if month is None:
                continue
        month2 = None
        if g.get("month2"):
            month2 = profile.month_number(g["month2"])
            if month2 is None:
                continue
        day = int(g["day"]) if g.get("day") else None
        day2 = int(g["day2"]) if g.get("day2") else None
        if month is None and month2 is not None:
            month = month2  # "3.-5. Januar" style: start month implied
        if month is None:
            if context_month is None:
                continue
            month = context_month
        try:
            if day2 is not None:
                end_month = month2 if month2 is not None else month
                return HistoricalDate(year, month, day, end_month, day2)
            return HistoricalDate(year, month, day)
        except DateError:
            continue
    return None


@dataclass(frozen=True)
class ParsedLine:
    event: Event | None
    failure_reason: str | None


def parse_event_line(line: str, context, year: int, profile: LanguageProfile,
                     source_title: str = "", line_no: int = 0,
                     parent_date: HistoricalDate | None = None) -> ParsedLine:
    """Decompose one candidate bullet line; context is (category_path,
    current_month). Returns the event or a failure reason."""
    category_path, current_month = context
    if not any(p.search(line) for p in profile.compiled("event_line_patterns")):
        return ParsedLine(None, "unrecognized structure")
    body = line.lstrip("*").strip()
    depth = len(line) - len(line.lstrip("*"))

    date = None
    desc_wiki = None
    for pos, sep in _find_separator(body, profile.separators):
        candidate = _parse_date_field(body[:pos], year, current_month, profile)
        if candidate is not None:
            date = candidate
            desc_wiki = body[pos + len(sep):].strip()
            break
    if date is None:
        # no parseable date field on the line itself
        if depth >= 2 and parent_date is not None:
            date = parent_date
            desc_wiki = body
        elif current_month is not None:
            date = HistoricalDate(year, current_month)
            desc_wiki = body
        else:
            return ParsedLine(None, "date parse")

    plain, links = to_plain(desc_wiki)
    if not plain:
        return ParsedLine(None, "empty description")
    ev = Event(
        id=event_id(profile.lang, source_title, desc_wiki),
        lang=profile.lang,
        date=date,
        granularity=date.granularity,
        category_path=category_path,
        description_wiki=desc_wiki,
        description_plain=plain,
        links=tuple(links),
        image=None,
        source_title=source_title,
        line_no=line_no,
    )
    return ParsedLine(ev, None)


def extract_page(wikitext: str, title: str, profile: LanguageProfile,
                 year: int | None = None) -> tuple[list[Event], ExtractionReport]:
    """Extract all events from one year page. Every bullet line in the
    events section ends up either in the event list or in the report's
    failure list."""
    if year is None:
        year = year_from_title(profile, title)
    report = ExtractionReport(source_title=title, lang=profile.lang)
    try:
        span = locate_event_section(wikitext, profile)
    except SectionNotFound:
        return [], report

    events: list[Event] = []
    last_date_by_depth: dict[int, HistoricalDate] = {}
    for line_no, line, cats, month, unknown in segment_context(wikitext, span, profile):
        report.unknown_headings.extend(unknown)
        if not line.lstrip().startswith("*"):
            continue
        stripped = line.strip()
        report.candidate_count += 1
        depth = len(stripped) - len(stripped.lstrip("*"))
        try:
            parsed = parse_event_line(
                stripped, (cats, month), year, profile,
                source_title=title, line_no=line_no,
                parent_date=last_date_by_depth.get(depth - 1),
            )
        except Exception as exc:  # per-line containment; keeps the page going
            parsed = ParsedLine(None, f"internal: {exc}")
        if parsed.event is not None:
            events.append(parsed.event)
            report.extracted_count += 1
            last_date_by_depth[depth] = parsed.event.date
            for deeper in [d for d in last_date_by_depth if d > depth]:
                del last_date_by_depth[deeper]
        else:
            report.failures.append(Failure(line_no, stripped, parsed.failure_reason))
    return events, report


def with_image(event: Event, image: ImageRef | None) -> Event:
    return replace(event, image=image)


def write_failure_log(reports, path) -> None:
    """Tab-separated failure log used to tune patterns: lang, title,
    line_no, reason, raw line."""
    with open(path, "a", encoding="utf-8") as fh:
        for rep in reports:
            for f in rep.failures:
                raw = f.raw_line.replace("\t", " ")
                fh.write(f"{rep.lang}\t{rep.source_title}\t{f.line_no}\t{f.reason}\t{raw}\n")
