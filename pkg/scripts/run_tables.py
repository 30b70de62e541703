#!/usr/bin/env python3
"""Recompute the shipped component tables with per-row timings.

Usage:
    python scripts/run_tables.py            # all 52 rows
    python scripts/run_tables.py --degree 4 # one table
    python scripts/run_tables.py --goldens my_rows.txt
"""

import argparse
import sys
import time

from hurmono import default_rows, load_golden_file, spec_line, verify_row


def describe(multiset):
    return ", ".join(f"{c} w/ deg {deg} genus {g}" for c, g, deg in multiset) or "(empty)"


def describe_expected(expected):
    return ", ".join(
        f"{c} w/ deg {'?' if deg is None else deg} genus {g}" for c, g, deg in expected
    )


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=None, help="only rows of this total degree")
    parser.add_argument("--goldens", default=None, help="alternate golden file")
    args = parser.parse_args(argv)

    rows = load_golden_file(args.goldens) if args.goldens else default_rows()
    if args.degree is not None:
        rows = [row for row in rows if row.spec.d == args.degree]

    n_match = 0
    t_total = time.monotonic()
    for row in rows:
        t0 = time.monotonic()
        verdict = verify_row(row)
        dt = time.monotonic() - t0
        n_match += verdict.passed
        flag = "  " if verdict.passed else "!!"
        print(
            f"{flag} {spec_line(row.spec):78s} "
            f"sheets={verdict.sheet_count:6d}  {describe(verdict.computed):50s} [{dt:6.2f}s]"
        )
        if not verdict.passed:
            print(f"   table says: {describe_expected(row.expected)}")
    dt_total = time.monotonic() - t_total
    print(f"\n{n_match}/{len(rows)} rows match in {dt_total:.1f}s")
    return 0 if n_match == len(rows) else 1


if __name__ == "__main__":
    sys.exit(main())
