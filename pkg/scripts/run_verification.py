#!/usr/bin/env python3
"""Run every verification suite and print a one-line verdict per check.

Writes the full JSON report next to this script unless --out is given.
"""

import argparse
import sys
import time

from hekdv.cli import SUITES, SUITE_ORDER
from hekdv.report import emit_report, report_json


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="verification_report.json")
    ns = ap.parse_args()

    t0 = time.perf_counter()
    reports = []
    for name in SUITE_ORDER:
        suite_reports = SUITES[name]()
        reports.extend(suite_reports)
        for r in suite_reports:
            print(f"[{name:>11s}] {r.status:4s} {r.check_id:16s} "
                  f"{r.summary()}  ({r.millis:.0f} ms)")
    doc = emit_report(reports)
    with open(ns.out, "w") as fh:
        fh.write(report_json(reports))
    print(f"\noverall: {doc['overall']}  "
          f"({len(reports)} checks, {time.perf_counter() - t0:.2f}s)  "
          f"-> {ns.out}")
    return 0 if doc["overall"] == "PASS" else 1


if __name__ == "__main__":
    sys.exit(main())
