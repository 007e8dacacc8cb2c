#!/usr/bin/env python3
"""Sweep a range of curve degrees and write the comparison table as CSV.

Equivalent to ``trisecant table`` but convenient to edit for one-off
experiments (different genus in the reference column, wider ranges, ...).
"""

import argparse
import csv
import sys

from trisecant import degree_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d-min", type=int, default=8)
    parser.add_argument("--d-max", type=int, default=30)
    parser.add_argument(
        "--out", type=argparse.FileType("w"), default=sys.stdout, metavar="FILE"
    )
    args = parser.parse_args()

    writer = csv.writer(args.out, lineterminator="\n")
    writer.writerow(["d", "degree_porteous", "degree_closed_form", "degree_berzolari", "match"])
    all_match = True
    for d in range(args.d_min, args.d_max + 1):
        report = degree_report(d)
        all_match = all_match and report.methods_agree
        writer.writerow(
            [
                report.d,
                report.degree_porteous,
                report.degree_closed_form,
                report.degree_berzolari,
                "true" if report.methods_agree else "false",
            ]
        )
    return 0 if all_match else 2


if __name__ == "__main__":
    raise SystemExit(main())
