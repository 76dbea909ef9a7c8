"""Reference-field baselines and conversion of citation counts between fields.

A baseline maps every field to its typical citation volume relative to a
reference field. The default method averages the yearly ratios; the pooled
method divides multi-year totals, which makes normalized scores independent
of the chosen reference.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from types import MappingProxyType
from typing import Mapping, Optional

from citeratio.dataset import (
    CitationTable,
    FieldId,
    FieldLike,
    builtin_nsf_table,
    resolve_field,
    slugify,
)
from citeratio.errors import UnknownField, ZeroDenominator
from citeratio.ratio_law import ratio


class Method(str, Enum):
    MEAN_OF_YEARLY_RATIOS = "mean"
    POOLED_TOTALS = "pooled"


class Mode(str, Enum):
    ROUNDED = "rounded"
    EXACT = "exact"


def round_half_away(x: float, ndigits: int = 0) -> float:
    """Round half away from zero on the exact binary value of ``x``."""
    if not math.isfinite(x) or abs(x) >= 2**52:
        return x
    q = Decimal(1).scaleb(-ndigits)
    d = Decimal(x).copy_abs().quantize(q, rounding=ROUND_HALF_UP)
    return math.copysign(float(d), x)


def rounded_ratio(x: float) -> int:
    """Integer baseline ratio: half away from zero, never below 1."""
    return max(1, int(round_half_away(x)))


@dataclass(frozen=True)
class Baseline:
    reference: FieldId
    method: Method
    exact: Mapping[str, float]
    rounded: Mapping[str, int]
    fields: tuple[FieldId, ...] = ()

    def _slug(self, field: FieldLike) -> str:
        slug = field.slug if isinstance(field, FieldId) else slugify(field)
        if slug not in self.exact:
            raise UnknownField(
                f"unknown field {str(field)!r}; valid fields: {', '.join(self.exact)}"
            )
        return slug

    def value(self, field: FieldLike, mode: Mode = Mode.ROUNDED) -> float:
        slug = self._slug(field)
        return self.rounded[slug] if Mode(mode) is Mode.ROUNDED else self.exact[slug]

    def field(self, field: FieldLike) -> FieldId:
        slug = self._slug(field)
        return next(f for f in self.fields if f.slug == slug)


def default_reference(table: CitationTable) -> FieldId:
    """The field with the smallest pooled total (first in table order on ties)."""
    return min(table.fields, key=table.field_total)


def compute_baseline(
    table: CitationTable,
    reference: Optional[FieldLike] = None,
    method: Method = Method.MEAN_OF_YEARLY_RATIOS,
) -> Baseline:
    method = Method(method)
    ref = default_reference(table) if reference is None else resolve_field(table, reference)
    exact: dict[str, float] = {}
    if method is Method.MEAN_OF_YEARLY_RATIOS:
        for f in table.fields:
            yearly = [ratio(table, f, ref, y) for y in table.years]
            exact[f.slug] = math.fsum(yearly) / len(yearly)
    else:
        ref_total = table.field_total(ref)
        if ref_total == 0:
            raise ZeroDenominator(f"{ref.slug} has zero citations over all years")
        for f in table.fields:
            exact[f.slug] = table.field_total(f) / ref_total
    exact[ref.slug] = 1.0
    rounded = {slug: rounded_ratio(v) for slug, v in exact.items()}
    return Baseline(ref, method, MappingProxyType(exact), MappingProxyType(rounded), table.fields)


def per_year_rounded_ratios(
    table: CitationTable, reference: Optional[FieldLike] = None
) -> dict[tuple[str, int], int]:
    ref = default_reference(table) if reference is None else resolve_field(table, reference)
    return {
        (f.slug, y): rounded_ratio(ratio(table, f, ref, y))
        for f in table.fields
        for y in table.years
    }


def normalize(
    baseline: Baseline, field: FieldLike, citations: float, mode: Mode = Mode.ROUNDED
) -> float:
    """Citations expressed in reference-field units."""
    if citations < 0:
        raise ValueError(f"citations must be non-negative, got {citations}")
    divisor = baseline.value(field, mode)
    if divisor == 0:
        raise ZeroDenominator(f"baseline ratio of {field} is zero")
    return citations / divisor


def equivalent_citations(
    baseline: Baseline,
    count: float,
    source: FieldLike,
    target: FieldLike,
    mode: Mode = Mode.ROUNDED,
) -> float:
    """How many citations in ``target`` weigh the same as ``count`` in ``source``.

    Not rounded; callers decide on display precision.
    """
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    divisor = baseline.value(source, mode)
    if divisor == 0:
        raise ZeroDenominator(f"baseline ratio of {source} is zero")
    return count * (baseline.value(target, mode) / divisor)


def baseline_to_csv(baseline: Baseline) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("field", "exact_ratio", "rounded_ratio"))
    for slug, v in baseline.exact.items():
        w.writerow((slug, repr(v), baseline.rounded[slug]))
    return buf.getvalue()


def baseline_to_json(baseline: Baseline) -> str:
    return json.dumps(
        {
            "reference": baseline.reference.slug,
            "method": baseline.method.value,
            "fields": [
                {"field": s, "exact_ratio": v, "rounded_ratio": baseline.rounded[s]}
                for s, v in baseline.exact.items()
            ],
        },
        indent=2,
    )


# Integers printed in the published NSF 2004 comparison table, relative to
# mathematics. Used only to flag where recomputation disagrees with print.
PUBLISHED_YEARLY_RATIOS: dict[str, tuple[int, ...]] = {
    "clinical-medicine": (69, 78, 80, 90, 78, 76),
    "biomedical-research": (67, 78, 81, 89, 79, 73),
    "biology": (8, 9, 8, 9, 8, 7),
    "chemistry": (13, 15, 15, 16, 15, 14),
    "physics": (20, 21, 20, 21, 17, 15),
    "earth-space-sciences": (5, 9, 10, 11, 11, 11),
    "engineering-technology": (5, 5, 5, 5, 5, 5),
    "mathematics": (1, 1, 1, 1, 1, 1),
    "social-behavioral-sciences": (12, 13, 13, 15, 13, 13),
}
PUBLISHED_AVERAGES: dict[str, int] = {
    "clinical-medicine": 78,
    "biomedical-research": 78,
    "biology": 8,
    "chemistry": 15,
    "physics": 19,
    "earth-space-sciences": 9,
    "engineering-technology": 5,
    "mathematics": 1,
    "social-behavioral-sciences": 13,
}


def published_discrepancies(
    table: CitationTable, baseline: Baseline
) -> list[tuple[str, Optional[int], int, int]]:
    """Cells where recomputation differs from the published integers.

    Returns ``(field, year or None for the average, computed, printed)``.
    Empty unless ``table`` holds the NSF 2004 counts and ``baseline`` is the
    published one (mathematics reference, mean of yearly ratios).
    """
    nsf = builtin_nsf_table()
    if (
        dict(table.counts) != dict(nsf.counts)
        or table.years != nsf.years
        or baseline.reference.slug != "mathematics"
        or baseline.method is not Method.MEAN_OF_YEARLY_RATIOS
    ):
        return []
    out = []
    yearly = per_year_rounded_ratios(table, "mathematics")
    for f in table.fields:
        for y, printed in zip(table.years, PUBLISHED_YEARLY_RATIOS[f.slug]):
            if yearly[(f.slug, y)] != printed:
                out.append((f.slug, y, yearly[(f.slug, y)], printed))
        printed = PUBLISHED_AVERAGES[f.slug]
        if baseline.rounded[f.slug] != printed:
            out.append((f.slug, None, baseline.rounded[f.slug], printed))
    return out
