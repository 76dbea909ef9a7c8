"""Pairwise citation ratios and how constant they stay across years."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from citeratio.dataset import CitationTable, FieldId, FieldLike, resolve_field
from citeratio.errors import UnknownYear, ZeroDenominator

DEFAULT_CV_THRESHOLD = 0.15


@dataclass(frozen=True)
class RatioSeries:
    numerator: FieldId
    denominator: FieldId
    points: tuple[tuple[int, float], ...]

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(y for y, _ in self.points)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(r for _, r in self.points)


@dataclass(frozen=True)
class ConstancyStats:
    mean: float
    std_dev: float  # population
    cv: float
    min: float
    max: float
    trend_slope: float  # ratio units per year


@dataclass(frozen=True)
class PairResult:
    numerator: FieldId
    denominator: FieldId
    stats: ConstancyStats
    passed: bool


@dataclass(frozen=True)
class ValidationReport:
    threshold: float
    pairs: tuple[PairResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(p.passed for p in self.pairs)

    def pair(self, a: str, b: str) -> PairResult:
        for p in self.pairs:
            if {p.numerator.slug, p.denominator.slug} == {a, b}:
                return p
        raise KeyError((a, b))


def ratio(table: CitationTable, num: FieldLike, den: FieldLike, year: int) -> float:
    n, d = resolve_field(table, num), resolve_field(table, den)
    if year not in table.years:
        raise UnknownYear(f"unknown year {year}; table years: {list(table.years)}")
    denominator = table.counts[(d.slug, year)]
    if denominator == 0:
        raise ZeroDenominator(f"{d.slug} has zero citations in {year}")
    return table.counts[(n.slug, year)] / denominator


def ratio_series(table: CitationTable, num: FieldLike, den: FieldLike) -> RatioSeries:
    n, d = resolve_field(table, num), resolve_field(table, den)
    return RatioSeries(n, d, tuple((y, ratio(table, n, d, y)) for y in table.years))


def constancy_stats(series: RatioSeries) -> ConstancyStats:
    """Mean, population standard deviation, CV, range and OLS trend slope."""
    years = series.years
    xs = series.values
    if not xs:
        raise ValueError("empty ratio series")
    n = len(xs)
    lo, hi = min(xs), max(xs)
    # fsum/n can land one ulp outside [lo, hi] for near-constant input
    mean = min(max(math.fsum(xs) / n, lo), hi)
    var = math.fsum((x - mean) ** 2 for x in xs) / n
    std = math.sqrt(var)

    t_bar = sum(years) / n
    sxx = math.fsum((t - t_bar) ** 2 for t in years)
    if sxx == 0:
        slope = 0.0
    else:
        slope = math.fsum((t - t_bar) * (x - mean) for t, x in zip(years, xs)) / sxx

    cv = std / mean if mean else 0.0
    return ConstancyStats(mean, std, cv, lo, hi, slope)


def validate_constancy(
    table: CitationTable, threshold: float = DEFAULT_CV_THRESHOLD
) -> ValidationReport:
    """CV-based constancy check over every unordered field pair.

    Pairs are (A, B) with A earlier in table order, so each ratio is A/B.
    """
    if len(table.fields) < 2:
        raise ValueError("need at least two fields to validate")
    pairs = []
    for a, b in combinations(table.fields, 2):
        stats = constancy_stats(ratio_series(table, a, b))
        pairs.append(PairResult(a, b, stats, stats.cv <= threshold))
    return ValidationReport(threshold, tuple(pairs))
