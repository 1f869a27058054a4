"""Serialization of events to JSON, XML and N3 (LODE event model), with
DBpedia URI minting for event links.

The RDF predicate choices are pinned in PREDICATES below (one table, so a
correction never touches code): the LODE event class and involvement
property, Dublin Core for the description, and foaf:depiction for the
thumbnail.
"""

from __future__ import annotations

import html
import json
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field as dc_field
from urllib.parse import quote

from .extractor import Event
from .markup import WikiLink

PREFIXES = {
    "lode": "http://linkedevents.org/ontology/",
    "dcterms": "http://purl.org/dc/terms/",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "foaf": "http://xmlns.com/foaf/0.1/",
}

PREDICATES = {
    "type": "lode:Event",
    "description": "dcterms:description",
    "time": "lode:atTime",
    "involved": "lode:involved",
    "depiction": "foaf:depiction",
}

_DEFAULT_DBPEDIA = {
    "en": "http://dbpedia.org/resource/",
}


@dataclass(frozen=True)
class LodeMapping:
    base_uri: str = "http://example.org/historical-events/"
    lang_to_dbpedia: dict[str, str] = dc_field(default_factory=dict)

    def __post_init__(self):
        if not self.base_uri.endswith("/"):
            raise ValueError("base_uri must end with '/'")

    def dbpedia_prefix(self, lang: str) -> str:
        if lang in self.lang_to_dbpedia:
            return self.lang_to_dbpedia[lang]
        if lang == "en":
            return _DEFAULT_DBPEDIA["en"]
        return f"http://{lang}.dbpedia.org/resource/"


# characters DBpedia keeps literal in resource names
_URI_SAFE = "_()',.:;!*-~"


def dbpedia_uri(link: WikiLink, lang: str, mapping: LodeMapping) -> str:
    """DBpedia resource URI for a wiki link: spaces become underscores,
    reserved and non-ASCII characters are percent-encoded."""
    if not link.target:
        raise ValueError("empty link target")
    name = link.target.replace(" ", "_")
    return mapping.dbpedia_prefix(lang) + quote(name, safe=_URI_SAFE)


def _sorted_events(events: list[Event]) -> list[Event]:
    return sorted(events, key=lambda e: (e.date.sort_key(), e.lang, e.line_no, e.id))


def _xsd_temporal(ev: Event) -> tuple[str, str]:
    """(lexical form, xsd type) for the event's start date. BCE years keep
    the historical sign: year -300 renders as -0300."""
    d = ev.date
    y = f"-{abs(d.year):04d}" if d.year < 0 else f"{d.year:04d}"
    if d.day is not None:
        return f"{y}-{d.month:02d}-{d.day:02d}", "xsd:date"
    if d.month is not None:
        return f"{y}-{d.month:02d}", "xsd:gYearMonth"
    return y, "xsd:gYear"


def _turtle_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def to_n3(events: list[Event], mapping: LodeMapping | None = None) -> str:
    """Deterministic N3/Turtle document: one typed subject per event, one
    involvement triple per link, temporal literal typed by granularity."""
    mapping = mapping or LodeMapping()
    lines = [f"@prefix {k}: <{v}> ." for k, v in PREFIXES.items()]
    lines.append("")
    for ev in _sorted_events(events):
        subject = f"<{mapping.base_uri}event/{ev.id}>"
        lines.append(f"{subject} a {PREDICATES['type']} ;")
        desc = _turtle_escape(ev.description_plain)
        lines.append(f'    {PREDICATES["description"]} "{desc}"@{ev.lang} ;')
        lexical, xsd_type = _xsd_temporal(ev)
        sep = " ;" if (ev.links or ev.image) else " ."
        lines.append(f'    {PREDICATES["time"]} "{lexical}"^^{xsd_type}{sep}')
        if ev.links:
            uris = [f"<{dbpedia_uri(l, ev.lang, mapping)}>" for l in ev.links]
            sep = " ;" if ev.image else " ."
            lines.append(f"    {PREDICATES['involved']} {' , '.join(uris)}{sep}")
        if ev.image:
            lines.append(f"    {PREDICATES['depiction']} <{ev.image.thumb_url}> .")
        lines.append("")
    return "\n".join(lines) + "\n"


_LINK_RE = re.compile(r"\[\[([^\]|]+?)(?:\|([^\]]*))?\]\]")


def render_description_html(ev: Event) -> str:
    """Description with anchors as HTML links into the event's source
    language Wikipedia."""
    from .markup import strip_markup  # late import avoids cycle at module load

    out = []
    pos = 0
    text = ev.description_wiki
    for m in _LINK_RE.finditer(text):
        out.append(html.escape(strip_markup(text[pos:m.start()]), quote=False))
        target = m.group(1).strip().replace(" ", "_")
        anchor = (m.group(2) or m.group(1)).strip()
        href = f"https://{ev.lang}.wikipedia.org/wiki/{quote(target, safe=_URI_SAFE)}"
        out.append(f'<a href="{href}">{html.escape(anchor, quote=False)}</a>')
        pos = m.end()
    out.append(html.escape(strip_markup(text[pos:]), quote=False))
    return " ".join("".join(out).split())


def _event_payload(ev: Event, include_links: bool, html_desc: bool) -> dict:
    from .store import event_to_dict  # shared canonical dict shape

    d = event_to_dict(ev)
    if not include_links:
        d.pop("links")
    if html_desc:
        d["description_html"] = render_description_html(ev)
    return d


def to_json(events: list[Event], include_links: bool = True,
            html_desc: bool = False) -> str:
    payload = {"events": [_event_payload(e, include_links, html_desc)
                          for e in _sorted_events(events)]}
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def to_xml(events: list[Event], include_links: bool = True,
           html_desc: bool = False) -> str:
    root = ET.Element("events")
    for ev in _sorted_events(events):
        e = ET.SubElement(root, "event", id=ev.id, lang=ev.lang,
                          granularity=ev.granularity)
        d = ev.date
        date_attrs = {"year": str(d.year)}
        if d.month is not None:
            date_attrs["month"] = str(d.month)
        if d.day is not None:
            date_attrs["day"] = str(d.day)
        if d.end_day is not None:
            date_attrs["end_month"] = str(d.end_month if d.end_month is not None else d.month)
            date_attrs["end_day"] = str(d.end_day)
        ET.SubElement(e, "date", **date_attrs)
        for cat in ev.category_path:
            ET.SubElement(e, "category").text = cat
        ET.SubElement(e, "description").text = ev.description_plain
        if html_desc:
            ET.SubElement(e, "description_html").text = render_description_html(ev)
        if include_links:
            links_el = ET.SubElement(e, "links")
            for l in ev.links:
                ET.SubElement(links_el, "link", target=l.target, anchor=l.anchor)
        if ev.image is not None:
            ET.SubElement(e, "image", file_title=ev.image.file_title,
                          thumb_url=ev.image.thumb_url,
                          width_px=str(ev.image.width_px))
        src = ET.SubElement(e, "source")
        src.set("title", ev.source_title)
        src.set("line_no", str(ev.line_no))
    ET.indent(root)
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def events_from_json(doc: str) -> list[Event]:
    """Inverse of to_json (requires include_links=True, no html)."""
    from .store import event_from_dict

    return [event_from_dict(d) for d in json.loads(doc)["events"]]
