"""Rank entities from different fields by normalized impact."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from citeratio.dataset import FieldId
from citeratio.errors import EmptyEntityList
from citeratio.normalization import Baseline, Method, Mode, normalize

SMALL_SET_CAVEAT = (
    "normalized scores are coarse for individuals: citation distributions of small "
    "sets of documents are irregular, and very highly cited entities may need correction"
)


@dataclass(frozen=True)
class Entity:
    label: str
    field: str
    citations: int

    def __post_init__(self):
        if not self.label:
            raise ValueError("entity label must be non-empty")
        if self.citations < 0:
            raise ValueError(f"citations must be non-negative, got {self.citations}")


@dataclass(frozen=True)
class ComparisonRow:
    entity: Entity
    field: FieldId
    score: float
    rank: int


@dataclass(frozen=True)
class ComparisonResult:
    reference: FieldId
    method: Method
    mode: Mode
    rows: tuple[ComparisonRow, ...]

    def rank_of(self, label: str) -> int:
        return next(r.rank for r in self.rows if r.entity.label == label)


def compare_entities(
    baseline: Baseline, entities: Iterable[Entity], mode: Mode = Mode.ROUNDED
) -> ComparisonResult:
    """Score every entity, sort by score descending and assign competition
    ranks (1, 1, 3, ...). Equal scores keep their input order.

    Ordering and ties are decided on exact rationals so float rounding of
    the scores can neither split nor merge a tie.
    """
    mode = Mode(mode)
    entities = list(entities)
    if not entities:
        raise EmptyEntityList("no entities to compare")

    scored = []
    for e in entities:
        score = normalize(baseline, e.field, e.citations, mode)
        key = Fraction(e.citations) / Fraction(baseline.value(e.field, mode))
        scored.append((key, e, score))
    scored.sort(key=lambda t: t[0], reverse=True)

    rows = []
    prev_key, rank = None, 0
    for i, (key, e, score) in enumerate(scored, start=1):
        if key != prev_key:
            rank, prev_key = i, key
        rows.append(ComparisonRow(e, baseline.field(e.field), score, rank))
    return ComparisonResult(baseline.reference, baseline.method, mode, tuple(rows))
