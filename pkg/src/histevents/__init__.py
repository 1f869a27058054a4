"""Extraction of historical events from Wikipedia year articles.

Config-driven multilingual parsing, per-page quality reporting, image
enrichment, an embedded queryable store, JSON/XML/N3 export with DBpedia
links, and an HTTP search API.
"""

from .dates import HistoricalDate, pack_date_key, parse_date_param
from .extractor import Event, ExtractionReport, extract_page
from .markup import SCANNER_IMPL, WikiLink
from .profiles import LanguageProfile, load_default_profiles, load_profiles, year_title
from .store import EventQuery, EventStore

__version__ = "0.1.0"

__all__ = [
    "Event",
    "EventQuery",
    "EventStore",
    "ExtractionReport",
    "HistoricalDate",
    "LanguageProfile",
    "SCANNER_IMPL",
    "WikiLink",
    "extract_page",
    "load_default_profiles",
    "load_profiles",
    "pack_date_key",
    "parse_date_param",
    "year_title",
]
