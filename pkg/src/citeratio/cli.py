"""Command-line front end.

Every subcommand builds a :class:`Report` of display-rounded values; the three
renderers only change presentation, so plain, CSV and JSON carry identical
numbers.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from citeratio.comparison import SMALL_SET_CAVEAT, Entity, compare_entities
from citeratio.dataset import BUILTIN_NAME, CitationTable, load_table, resolve_field, yearly_totals
from citeratio.errors import CitationError
from citeratio.normalization import (
    Baseline,
    Method,
    Mode,
    compute_baseline,
    equivalent_citations,
    normalize,
    per_year_rounded_ratios,
    published_discrepancies,
    round_half_away,
)
from citeratio.ratio_law import (
    DEFAULT_CV_THRESHOLD,
    constancy_stats,
    ratio_series,
    validate_constancy,
)

RATIO_DIGITS = 8
SCORE_DIGITS = 2


@dataclass
class Column:
    name: str
    digits: Optional[int] = None  # None: emit as-is (ints, strings, bools)


@dataclass
class Report:
    columns: list[Column]
    rows: list[list[Any]]
    summary: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    rows_key: str = "rows"


def _r(x: float, digits: int) -> float:
    return round_half_away(x, digits)


def _fmt(value: Any, digits: Optional[int]) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if digits is not None and isinstance(value, float):
        return f"{value:.{digits}f}"
    return str(value)


def render_plain(report: Report) -> str:
    header = [c.name for c in report.columns]
    body = [[_fmt(v, c.digits) for v, c in zip(row, report.columns)] for row in report.rows]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = []
    for i, cells in enumerate([header] + body):
        lines.append(
            "  ".join(
                s.ljust(w) if j == 0 or not _numeric(s) else s.rjust(w)
                for j, (s, w) in enumerate(zip(cells, widths))
            ).rstrip()
        )
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    for key, value in report.summary.items():
        lines.append(f"{key}: {_fmt(value, None)}")
    lines.extend(f"# note: {n}" for n in report.notes)
    return "\n".join(lines) + "\n"


def _numeric(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([c.name for c in report.columns])
    for row in report.rows:
        w.writerow([_fmt(v, c.digits) for v, c in zip(row, report.columns)])
    for key, value in report.summary.items():
        buf.write(f"# {key}: {_fmt(value, None)}\n")
    buf.writelines(f"# note: {n}\n" for n in report.notes)
    return buf.getvalue()


def render_json(report: Report) -> str:
    doc: dict[str, Any] = dict(report.summary)
    doc[report.rows_key] = [
        {c.name: v for c, v in zip(report.columns, row)} for row in report.rows
    ]
    doc["notes"] = list(report.notes)
    return json.dumps(doc, indent=2) + "\n"


RENDERERS = {"plain": render_plain, "csv": render_csv, "json": render_json}


def _baseline(table: CitationTable, args) -> Baseline:
    return compute_baseline(table, args.reference, Method(args.method))


def _baseline_summary(b: Baseline, mode: Optional[Mode] = None) -> dict[str, Any]:
    out = {"reference": b.reference.slug, "method": b.method.value}
    if mode is not None:
        out["mode"] = mode.value
    return out


def cmd_validate(table, args) -> Report:
    report = validate_constancy(table, args.cv_threshold)
    cols = [Column("numerator"), Column("denominator"), Column("mean", RATIO_DIGITS),
            Column("std_dev", RATIO_DIGITS), Column("cv", RATIO_DIGITS),
            Column("slope", RATIO_DIGITS), Column("pass")]
    rows = [
        [p.numerator.slug, p.denominator.slug, _r(p.stats.mean, RATIO_DIGITS),
         _r(p.stats.std_dev, RATIO_DIGITS), _r(p.stats.cv, RATIO_DIGITS),
         _r(p.stats.trend_slope, RATIO_DIGITS), p.passed]
        for p in report.pairs
    ]
    n_pass = sum(p.passed for p in report.pairs)
    summary = {"threshold": report.threshold, "passed": n_pass,
               "pairs_total": len(report.pairs), "all_pass": report.all_pass}
    return Report(cols, rows, summary, rows_key="pairs")


def cmd_table(table, args) -> Report:
    baseline = _baseline(table, args)
    yearly = per_year_rounded_ratios(table, baseline.reference)
    cols = [Column("field"), Column("exact_ratio", RATIO_DIGITS), Column("rounded_ratio")]
    for y in table.years:
        cols += [Column(f"citations_{y}"), Column(f"ratio_{y}")]
    rows = []
    for f in table.fields:
        row = [f.slug, _r(baseline.exact[f.slug], RATIO_DIGITS), baseline.rounded[f.slug]]
        for y in table.years:
            row += [table.counts[(f.slug, y)], yearly[(f.slug, y)]]
        rows.append(row)
    notes = []
    for slug, year, computed, printed in published_discrepancies(table, baseline):
        where = f"{year} ratio to {baseline.reference.slug}" if year else "average ratio"
        notes.append(
            f"{slug} {where} recomputes to {computed} from the raw counts; "
            f"the published table prints {printed}"
        )
    return Report(cols, rows, _baseline_summary(baseline), notes)


def cmd_ratio(table, args) -> Report:
    series = ratio_series(table, args.num, args.den)
    stats = constancy_stats(series)
    cols = [Column("year"), Column("ratio", RATIO_DIGITS)]
    rows = [[y, _r(v, RATIO_DIGITS)] for y, v in series.points]
    summary = {
        "numerator": series.numerator.slug,
        "denominator": series.denominator.slug,
        "mean": _r(stats.mean, RATIO_DIGITS),
        "std_dev": _r(stats.std_dev, RATIO_DIGITS),
        "cv": _r(stats.cv, RATIO_DIGITS),
        "min": _r(stats.min, RATIO_DIGITS),
        "max": _r(stats.max, RATIO_DIGITS),
        "slope": _r(stats.trend_slope, RATIO_DIGITS),
    }
    return Report(cols, rows, summary)


def cmd_normalize(table, args) -> Report:
    baseline = _baseline(table, args)
    mode = Mode(args.mode)
    f = resolve_field(table, args.field)
    score = normalize(baseline, f, args.citations, mode)
    cols = [Column("field"), Column("citations"), Column("baseline_ratio", RATIO_DIGITS),
            Column("score", SCORE_DIGITS)]
    ratio_value = baseline.value(f, mode)
    if isinstance(ratio_value, float):
        ratio_value = _r(ratio_value, RATIO_DIGITS)
    rows = [[f.slug, args.citations, ratio_value, _r(score, SCORE_DIGITS)]]
    return Report(cols, rows, _baseline_summary(baseline, mode))


def cmd_equiv(table, args) -> Report:
    baseline = _baseline(table, args)
    mode = Mode(args.mode)
    source = resolve_field(table, args.source)
    targets = [resolve_field(table, t) for t in args.to.split(",") if t.strip()]
    if not targets:
        raise CitationError("--to needs at least one field")
    cols = [Column("from"), Column("count"), Column("field"), Column("equivalent")]
    count = int(args.count) if float(args.count).is_integer() else args.count
    rows = [
        [source.slug, count, t.slug,
         int(round_half_away(equivalent_citations(baseline, args.count, source, t, mode)))]
        for t in targets
    ]
    return Report(cols, rows, _baseline_summary(baseline, mode))


def _parse_entity(token: str) -> Entity:
    parts = token.split(":")
    if len(parts) != 3 or not parts[0]:
        raise argparse.ArgumentTypeError(
            f"entity {token!r} must look like label:field:count"
        )
    try:
        count = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"entity {token!r}: count must be an integer") from None
    if count < 0:
        raise argparse.ArgumentTypeError(f"entity {token!r}: count must be non-negative")
    return Entity(parts[0], parts[1], count)


def cmd_compare(table, args) -> Report:
    baseline = _baseline(table, args)
    for e in args.entities:
        resolve_field(table, e.field)
    result = compare_entities(baseline, args.entities, Mode(args.mode))
    cols = [Column("rank"), Column("label"), Column("field"), Column("citations"),
            Column("score", SCORE_DIGITS)]
    rows = [[r.rank, r.entity.label, r.field.slug, r.entity.citations, _r(r.score, SCORE_DIGITS)]
            for r in result.rows]
    return Report(cols, rows, _baseline_summary(baseline, result.mode), [SMALL_SET_CAVEAT])


def cmd_totals(table, args) -> Report:
    totals = yearly_totals(table)
    cols = [Column("year"), Column("total")]
    rows = [[y, t] for y, t in totals.items()]
    summary = {}
    first, last = totals[table.years[0]], totals[table.years[-1]]
    if first:
        summary["growth_pct"] = _r(100.0 * (last - first) / first, 1)
    return Report(cols, rows, summary)


def _positive_float(text: str) -> float:
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--data", default=BUILTIN_NAME,
                        help=f"citation CSV path or '{BUILTIN_NAME}' (default)")
    common.add_argument("--reference", default=None,
                        help="reference field (default: smallest pooled total)")
    common.add_argument("--method", choices=[m.value for m in Method], default="mean")
    common.add_argument("--mode", choices=[m.value for m in Mode], default="rounded")
    common.add_argument("--format", choices=sorted(RENDERERS), default="plain")

    parser = argparse.ArgumentParser(
        prog="citeratio",
        description="Constant-ratio citation analysis and cross-field normalization.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("validate", parents=[common], help="CV constancy check for all field pairs")
    p.add_argument("--cv-threshold", type=_positive_float, default=DEFAULT_CV_THRESHOLD)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("table", parents=[common], help="reproduce the ratio-to-reference table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("ratio", parents=[common], help="yearly ratio of two fields")
    p.add_argument("--num", required=True)
    p.add_argument("--den", required=True)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("normalize", parents=[common], help="citations in reference units")
    p.add_argument("--field", required=True)
    p.add_argument("--citations", type=_non_negative_int, required=True)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equiv", parents=[common], help="equivalent citation counts")
    p.add_argument("--count", type=_positive_float, required=True)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", required=True, help="comma-separated target fields")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("compare", parents=[common], help="rank entities by normalized impact")
    p.add_argument("entities", nargs="+", type=_parse_entity, metavar="label:field:count")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("totals", parents=[common], help="total citations per year")
    p.set_defaults(func=cmd_totals)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        table = load_table(args.data)
        report = args.func(table, args)
    except CitationError as exc:
        print(f"error[{exc.code}]: {exc}", file=stderr)
        return 1
    except ValueError as exc:
        print(f"error[INVALID_INPUT]: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"error[IO_ERROR]: {exc}", file=stderr)
        return 1
    stdout.write(RENDERERS[args.format](report))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
