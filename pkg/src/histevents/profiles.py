"""Per-language parsing configuration.

Everything language-dependent (section patterns, event line patterns, date
grammars, month names, heading vocabulary, title templates) lives in one
YAML document so new Wikipedia language versions can be added without
touching code. The shipped file covers en/de/it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import yaml


class ConfigError(ValueError):
    """Malformed or invalid profile configuration."""


@dataclass(frozen=True)
class LanguageProfile:
    lang: str
    events_entry_patterns: tuple[str, ...]
    events_exit_patterns: tuple[str, ...]
    event_line_patterns: tuple[str, ...]
    date_patterns: tuple[str, ...]
    month_names: dict[str, int]
    separators: tuple[str, ...]
    category_headings: dict[str, str]
    year_title_template: dict[str, str]  # keys: "ce", "bce"
    standard_image_blocklist: tuple[str, ...] = ()
    _compiled: dict = field(default_factory=dict, repr=False, compare=False)

    def compiled(self, kind: str) -> list[re.Pattern]:
        """Compiled pattern list for one of the *_patterns fields (cached)."""
        if kind not in self._compiled:
            self._compiled[kind] = [re.compile(p) for p in getattr(self, kind)]
        return self._compiled[kind]

    def month_number(self, name: str) -> int | None:
        return self._month_lookup.get(name.strip().lower())

    @property
    def _month_lookup(self) -> dict[str, int]:
        if "months" not in self._compiled:
            self._compiled["months"] = {k.lower(): v for k, v in self.month_names.items()}
        return self._compiled["months"]


_PATTERN_FIELDS = (
    "events_entry_patterns",
    "events_exit_patterns",
    "event_line_patterns",
    "date_patterns",
)

_REQUIRED_NONEMPTY = ("events_entry_patterns", "event_line_patterns", "separators")


def _validate(lang: str, profile: LanguageProfile) -> None:
    for fname in _REQUIRED_NONEMPTY:
        if not getattr(profile, fname):
            raise ConfigError(f"{lang}: {fname} must not be empty")
    for fname in _PATTERN_FIELDS:
        for pat in getattr(profile, fname):
            try:
                re.compile(pat)
            except re.error as exc:
                raise ConfigError(f"{lang}: bad pattern in {fname}: {pat!r}: {exc}") from exc
    seen_months = set()
    for name, num in profile.month_names.items():
        if not isinstance(num, int) or not 1 <= num <= 12:
            raise ConfigError(f"{lang}: month name {name!r} maps to invalid number {num!r}")
        seen_months.add(num)
    if seen_months != set(range(1, 13)):
        missing = sorted(set(range(1, 13)) - seen_months)
        raise ConfigError(f"{lang}: months without any name: {missing}")
    for key in ("ce", "bce"):
        tpl = profile.year_title_template.get(key)
        if not tpl or "{year}" not in tpl:
            raise ConfigError(f"{lang}: year_title_template.{key} must contain '{{year}}'")


def _profile_from_block(lang: str, block: dict) -> LanguageProfile:
    if not isinstance(block, dict):
        raise ConfigError(f"{lang}: language block must be a mapping")
    try:
        profile = LanguageProfile(
            lang=lang.lower(),
            events_entry_patterns=tuple(block.get("events_entry_patterns", ())),
            events_exit_patterns=tuple(block.get("events_exit_patterns", ())),
            event_line_patterns=tuple(block.get("event_line_patterns", ())),
            date_patterns=tuple(block.get("date_patterns", ())),
            month_names=dict(block.get("month_names", {})),
            separators=tuple(block.get("separators", ())),
            category_headings=dict(block.get("category_headings", {})),
            year_title_template=dict(block.get("year_title_template", {})),
            standard_image_blocklist=tuple(block.get("standard_image_blocklist", ())),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{lang}: {exc}") from exc
    _validate(lang, profile)
    return profile


def load_profiles(config_source) -> dict[str, LanguageProfile]:
    """Load and validate all language profiles from a YAML document.

    ``config_source`` may be a path, an open text file, or a YAML string.
    """
    if isinstance(config_source, (str, Path)) and "\n" not in str(config_source):
        with open(config_source, encoding="utf-8") as fh:
            text = fh.read()
    elif hasattr(config_source, "read"):
        text = config_source.read()
    else:
        text = str(config_source)
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"config parse error: {exc}") from exc
    if doc is None:
        return {}
    if not isinstance(doc, dict):
        raise ConfigError("top level must map language codes to blocks")
    return {lang.lower(): _profile_from_block(lang, block) for lang, block in doc.items()}


def load_default_profiles() -> dict[str, LanguageProfile]:
    """Profiles shipped with the package (en/de/it)."""
    text = resources.files("histevents").joinpath("data/profiles.yml").read_text("utf-8")
    return load_profiles(text)


def profile_to_dict(profile: LanguageProfile) -> dict:
    """Config-format representation; load_profiles on the dump round-trips."""
    return {
        "events_entry_patterns": list(profile.events_entry_patterns),
        "events_exit_patterns": list(profile.events_exit_patterns),
        "event_line_patterns": list(profile.event_line_patterns),
        "date_patterns": list(profile.date_patterns),
        "month_names": dict(profile.month_names),
        "separators": list(profile.separators),
        "category_headings": dict(profile.category_headings),
        "year_title_template": dict(profile.year_title_template),
        "standard_image_blocklist": list(profile.standard_image_blocklist),
    }


def dump_profiles(profiles: dict[str, LanguageProfile]) -> str:
    doc = {lang: profile_to_dict(p) for lang, p in sorted(profiles.items())}
    return yaml.safe_dump(doc, allow_unicode=True, sort_keys=True)


def year_title(profile: LanguageProfile, year: int) -> str:
    """Article title for a signed year; negative years use the BCE form."""
    if year == 0:
        raise ValueError("year 0 does not exist in historical numbering")
    key = "ce" if year > 0 else "bce"
    return profile.year_title_template[key].format(year=abs(year))
