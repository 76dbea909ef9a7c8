#!/usr/bin/env python3
"""How many field pairs count as "constant" as the CV bound moves.

    python scripts/threshold_sweep.py [--data nsf2004] [--worst 5]
"""
import argparse

from citeratio import load_table, validate_constancy


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--data", default="nsf2004")
    ap.add_argument("--worst", type=int, default=5)
    args = ap.parse_args()

    table = load_table(args.data)
    report = validate_constancy(table, float("inf"))
    cvs = sorted(p.stats.cv for p in report.pairs)
    for bound in (0.05, 0.10, 0.15, 0.20, 0.25, 0.30):
        n = sum(cv <= bound for cv in cvs)
        print(f"cv <= {bound:.2f}: {n:>3}/{len(cvs)} pairs")

    print("\nleast constant pairs:")
    worst = sorted(report.pairs, key=lambda p: p.stats.cv, reverse=True)[: args.worst]
    for p in worst:
        print(f"  {p.numerator.slug}/{p.denominator.slug}: cv={p.stats.cv:.3f} "
              f"slope={p.stats.trend_slope:+.4f}/yr")


if __name__ == "__main__":
    main()
