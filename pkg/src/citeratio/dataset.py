"""Citation tables: data model, CSV ingestion/serialization and the bundled
NSF 2004 dataset.

A table is stored in long format, one ``field,year,citations`` row per cell.
Counts stay exact integers; nothing here divides.
"""
from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from citeratio.errors import (
    DuplicateCell,
    EmptyInput,
    IncompleteTable,
    MalformedRow,
    NegativeCount,
    UnknownField,
    UnknownYear,
)

HEADER = ("field", "year", "citations")
BUILTIN_NAME = "nsf2004"
NSF2004_LABEL = (
    "Science and Engineering Indicators 2004. National Science Foundation, "
    "May 04, 2004 (Table 5-27, SCI/SSCI)"
)
MIN_YEAR, MAX_YEAR = 1000, 9999

_NON_SLUG = re.compile(r"[^a-z0-9]+")


def slugify(name: str) -> str:
    """Lowercase, collapse every run of non ``[a-z0-9]`` characters to a
    single hyphen and trim hyphens from both ends.

    >>> slugify("Earth/space sciences")
    'earth-space-sciences'
    """
    return _NON_SLUG.sub("-", name.lower()).strip("-")


@dataclass(frozen=True)
class FieldId:
    slug: str
    display_name: str

    @classmethod
    def from_name(cls, display_name: str) -> "FieldId":
        slug = slugify(display_name)
        if not slug:
            raise ValueError(f"field name {display_name!r} has an empty slug")
        return cls(slug, display_name)

    def __str__(self):
        return self.slug


FieldLike = Union[FieldId, str]


@dataclass(frozen=True)
class CitationTable:
    """Immutable per-field, per-year citation counts.

    ``counts`` is keyed by ``(slug, year)``. Use :meth:`count` for lookups by
    name or :class:`FieldId`.
    """

    fields: tuple[FieldId, ...]
    years: tuple[int, ...]
    counts: Mapping[tuple[str, int], int]
    source_label: str = field(default="", compare=False)
    _by_slug: Mapping[str, FieldId] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fields = tuple(self.fields)
        years = tuple(int(y) for y in self.years)
        if not fields:
            raise EmptyInput("table has no fields")
        if not years:
            raise EmptyInput("table has no years")
        slugs = [f.slug for f in fields]
        if len(set(slugs)) != len(slugs):
            raise DuplicateCell(f"duplicate field in {slugs}")
        if any(b <= a for a, b in zip(years, years[1:])):
            raise MalformedRow(f"years must be strictly ascending: {years}")
        for y in years:
            if not MIN_YEAR <= y <= MAX_YEAR:
                raise MalformedRow(f"year {y} outside {MIN_YEAR}..{MAX_YEAR}")

        counts = {}
        for slug in slugs:
            for y in years:
                try:
                    c = self.counts[(slug, y)]
                except KeyError:
                    raise IncompleteTable(f"missing cell ({slug}, {y})") from None
                if isinstance(c, bool) or int(c) != c:
                    raise MalformedRow(f"count for ({slug}, {y}) is not an integer: {c!r}")
                if c < 0:
                    raise NegativeCount(f"negative count {c} at ({slug}, {y})")
                counts[(slug, y)] = int(c)
        if len(counts) != len(self.counts):
            extra = sorted(set(self.counts) - set(counts))
            raise MalformedRow(f"counts outside the field x year grid: {extra[:5]}")

        object.__setattr__(self, "fields", fields)
        object.__setattr__(self, "years", years)
        object.__setattr__(self, "counts", MappingProxyType(counts))
        object.__setattr__(self, "_by_slug", MappingProxyType(dict(zip(slugs, fields))))

    @property
    def slugs(self) -> tuple[str, ...]:
        return tuple(f.slug for f in self.fields)

    def field(self, name: FieldLike) -> FieldId:
        return resolve_field(self, name)

    def count(self, name: FieldLike, year: int) -> int:
        f = resolve_field(self, name)
        if year not in self.years:
            raise UnknownYear(f"unknown year {year}; table years: {list(self.years)}")
        return self.counts[(f.slug, year)]

    def field_counts(self, name: FieldLike) -> tuple[int, ...]:
        slug = resolve_field(self, name).slug
        return tuple(self.counts[(slug, y)] for y in self.years)

    def field_total(self, name: FieldLike) -> int:
        return sum(self.field_counts(name))

    def scaled_year(self, year: int, k: int) -> "CitationTable":
        """Copy of the table with every count in ``year`` multiplied by ``k``."""
        counts = {key: c * k if key[1] == year else c for key, c in self.counts.items()}
        return CitationTable(self.fields, self.years, counts, self.source_label)


def from_rows(rows: Iterable[tuple[str, int, int]], source_label: str = "") -> CitationTable:
    """Build a table from ``(display_name, year, count)`` triples in any order."""
    fields: dict[str, FieldId] = {}
    years: set[int] = set()
    counts: dict[tuple[str, int], int] = {}
    for name, year, count in rows:
        fid = FieldId.from_name(name)
        known = fields.setdefault(fid.slug, fid)
        if known.display_name != fid.display_name:
            raise MalformedRow(
                f"field names {known.display_name!r} and {name!r} share slug {fid.slug!r}"
            )
        if count < 0:
            raise NegativeCount(f"negative count {count} at ({name}, {year})")
        key = (fid.slug, year)
        if key in counts:
            raise DuplicateCell(f"duplicate cell ({name}, {year})")
        counts[key] = count
        years.add(year)
    if not counts:
        raise EmptyInput("no data rows")
    return CitationTable(tuple(fields.values()), tuple(sorted(years)), counts, source_label)


def _parse_int(text: str, what: str, lineno: int) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise MalformedRow(f"line {lineno}: {what} {text!r} is not an integer") from None


def parse_citation_table(text: str, source_label: str = "") -> CitationTable:
    """Parse long-format CSV with header ``field,year,citations``.

    Rows may come in any order. Blank lines are ignored.
    """
    if not text.strip():
        raise EmptyInput("input is empty")
    reader = csv.reader(io.StringIO(text.lstrip("﻿")))
    header = next(reader)
    if tuple(h.strip().lower() for h in header) != HEADER:
        raise MalformedRow(f"line 1: expected header {','.join(HEADER)!r}, got {header!r}")

    rows = []
    for row in reader:
        lineno = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 3:
            raise MalformedRow(f"line {lineno}: expected 3 columns, got {len(row)}")
        name = row[0].strip()
        if not slugify(name):
            raise MalformedRow(f"line {lineno}: field name {row[0]!r} is empty")
        year = _parse_int(row[1], "year", lineno)
        if not MIN_YEAR <= year <= MAX_YEAR:
            raise MalformedRow(f"line {lineno}: year {year} outside {MIN_YEAR}..{MAX_YEAR}")
        count = _parse_int(row[2], "citation count", lineno)
        if count < 0:
            raise NegativeCount(f"line {lineno}: negative count {count}")
        rows.append((name, year, count))

    if not rows:
        raise EmptyInput("header present but no data rows")
    return from_rows(rows, source_label)


def serialize_citation_table(table: CitationTable) -> str:
    """Long-format CSV: fields in table order, years ascending within each."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for f in table.fields:
        for y in table.years:
            writer.writerow((f.display_name, y, table.counts[(f.slug, y)]))
    return buf.getvalue()


@lru_cache(maxsize=1)
def builtin_nsf_table() -> CitationTable:
    """The 9-field x 6-year raw counts of the NSF 2004 citation table."""
    text = resources.files("citeratio.data").joinpath("nsf2004.csv").read_text("utf-8")
    return parse_citation_table(text, NSF2004_LABEL)


def load_table(source: str) -> CitationTable:
    """Load a table from a path, or the bundled one for the name ``nsf2004``."""
    if source == BUILTIN_NAME:
        return builtin_nsf_table()
    with open(source, encoding="utf-8", newline="") as fh:
        return parse_citation_table(fh.read(), source_label=source)


def resolve_field(table: CitationTable, name: FieldLike) -> FieldId:
    slug = name.slug if isinstance(name, FieldId) else slugify(name)
    try:
        return table._by_slug[slug]
    except KeyError:
        raise UnknownField(
            f"unknown field {str(name)!r}; valid fields: {', '.join(table.slugs)}"
        ) from None


def yearly_totals(table: CitationTable) -> dict[int, int]:
    return {y: sum(table.counts[(s, y)] for s in table.slugs) for y in table.years}
