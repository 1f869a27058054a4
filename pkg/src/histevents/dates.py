"""Partial historical dates (BCE-aware) and their packed sort keys."""

from __future__ import annotations

import re
from dataclasses import dataclass

_MONTH_DAYS = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31]


class DateError(ValueError):
    pass


def _is_leap(year: int) -> bool:
    # Proleptic Gregorian; historical year -1 (1 BC) is astronomical year 0.
    astro = year if year > 0 else year + 1
    return astro % 4 == 0 and (astro % 100 != 0 or astro % 400 == 0)


def days_in_month(year: int, month: int) -> int:
    if month == 2 and _is_leap(year):
        return 29
    return _MONTH_DAYS[month - 1]


@dataclass(frozen=True)
class HistoricalDate:
    """A possibly-partial, possibly-ranged date. Negative year = BCE; no year 0.

    Ranges stay within one year; ``end_month``/``end_day`` describe the
    inclusive end point.
    """

    year: int
    month: int | None = None
    day: int | None = None
    end_month: int | None = None
    end_day: int | None = None

    def __post_init__(self):
        if self.year == 0:
            raise DateError("year 0 does not exist in historical numbering")
        if self.day is not None and self.month is None:
            raise DateError("day without month")
        if self.month is not None and not 1 <= self.month <= 12:
            raise DateError(f"month {self.month} out of range")
        if self.day is not None and not 1 <= self.day <= days_in_month(self.year, self.month):
            raise DateError(f"day {self.day} invalid for {self.year}-{self.month}")
        if self.end_day is not None:
            if self.day is None:
                raise DateError("range end without a start day")
            em = self.end_month if self.end_month is not None else self.month
            if not 1 <= em <= 12 or not 1 <= self.end_day <= days_in_month(self.year, em):
                raise DateError("range end out of range")
            if (em, self.end_day) < (self.month, self.day):
                raise DateError("range end before start")
        elif self.end_month is not None:
            raise DateError("end month without end day")

    @property
    def granularity(self) -> str:
        if self.day is not None:
            return "day"
        if self.month is not None:
            return "month"
        return "year"

    def sort_key(self) -> int:
        return pack_date_key(self.year, self.month, self.day)


def pack_date_key(year: int, month: int | None = None, day: int | None = None) -> int:
    """Pack (year, month, day) into one chronologically ordered integer.

    Absent components pack as 0, so year granularity sorts before that
    year's months. The year sign carries through arithmetically, keeping
    BCE order correct (larger |year| earlier, months ascending within it).
    """
    if year == 0:
        raise DateError("year 0 does not exist")
    return year * 10000 + (month or 0) * 100 + (day or 0)


_KEY_RE = re.compile(r"^(-?)(\d{8})$")


def parse_date_param(value: str) -> int:
    """Parse an 8-digit zero-padded YYYYMMDD string (optional leading '-'
    for BCE) into a packed date key. Raises DateError on malformed input."""
    m = _KEY_RE.match(value.strip())
    if not m:
        raise DateError(f"malformed date parameter: {value!r} (want [-]YYYYMMDD)")
    sign = -1 if m.group(1) else 1
    digits = m.group(2)
    year, month, day = int(digits[:4]), int(digits[4:6]), int(digits[6:8])
    if year == 0:
        raise DateError("year 0000 is not a valid year")
    if month > 12 or day > 31:
        raise DateError(f"date parameter out of range: {value!r}")
    return pack_date_key(sign * year, month or None, day or None)


def format_date_key(key: int) -> str:
    """Inverse of parse_date_param for displaying keys."""
    year, md = divmod(key, 10000)
    month, day = divmod(md, 100)
    if year == 0:
        raise DateError(f"key {key} has no valid year")
    sign = "-" if year < 0 else ""
    return f"{sign}{abs(year):04d}{month:02d}{day:02d}"
