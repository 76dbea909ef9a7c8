#!/usr/bin/env python3
"""Recompute the published ratio lists, the ratio-to-mathematics table and the
two worked examples from the bundled NSF 2004 counts.

    python scripts/reproduce_paper.py
"""
from citeratio import (
    Entity,
    builtin_nsf_table,
    compare_entities,
    compute_baseline,
    equivalent_citations,
    ratio_series,
    yearly_totals,
)
from citeratio.normalization import PUBLISHED_AVERAGES, per_year_rounded_ratios, published_discrepancies


def main():
    nsf = builtin_nsf_table()
    print("Yearly ratios")
    for num, den in [("clinical-medicine", "physics"), ("engineering-technology", "mathematics")]:
        for year, r in ratio_series(nsf, num, den).points:
            print(f"  ({year}) {nsf.count(num, year)} / {nsf.count(den, year)} = {r:.9g}")

    base = compute_baseline(nsf, "mathematics")
    cells = per_year_rounded_ratios(nsf, "mathematics")
    print("\nRatio to mathematics (recomputed; published average in brackets)")
    for f in nsf.fields:
        row = " ".join(f"{cells[(f.slug, y)]:>3}" for y in nsf.years)
        print(f"  {f.display_name:<28}{base.rounded[f.slug]:>4} [{PUBLISHED_AVERAGES[f.slug]:>2}]  {row}")
    for slug, year, got, printed in published_discrepancies(nsf, base):
        print(f"  mismatch: {slug} {year or 'average'}: recomputed {got}, printed {printed}")

    print("\nWho has higher impact?")
    res = compare_entities(base, [Entity("physicist", "physics", 70),
                                  Entity("engineer", "engineering-technology", 20)])
    for row in res.rows:
        print(f"  {row.rank}. {row.entity.label}: {row.entity.citations} / "
              f"{base.rounded[row.field.slug]} = {row.score:.2f}")

    print("\nEquivalent citation counts")
    for n in (1, 250):
        eq = {t: equivalent_citations(base, n, "mathematics", t)
              for t in ("chemistry", "physics", "clinical-medicine")}
        print(f"  {n} in mathematics ~ " + ", ".join(f"{v:g} in {t}" for t, v in eq.items()))

    totals = yearly_totals(nsf)
    first, last = totals[nsf.years[0]], totals[nsf.years[-1]]
    print(f"\nTotal citations {nsf.years[0]}: {first}, {nsf.years[-1]}: {last} "
          f"({100 * (last - first) / first:+.1f}%)")


if __name__ == "__main__":
    main()
