#!/usr/bin/env python3
"""Run the full identity suite and write a JSON report.

Usage:
    python scripts/identity_report.py [--out report.json] [--suite all]
"""

import argparse
import json
import time

from mpmath import mp, nstr

from stieltjes import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="identity_report.json")
    ap.add_argument("--suite", default="all")
    ap.add_argument("--digits", type=int, default=34)
    args = ap.parse_args()
    mp.dps = args.digits

    selection = "all" if args.suite == "all" else args.suite.split(",")
    t0 = time.perf_counter()
    reports = run_suite(selection)
    elapsed = time.perf_counter() - t0

    for r in reports:
        mark = "PASS" if r.passed else "FAIL"
        print(f"[{mark}] {r.check_id} {r.inputs} "
              f"residual={nstr(r.residual, 3)} tol={nstr(r.tolerance, 3)}")
    failed = sum(1 for r in reports if not r.passed)
    print(f"\n{len(reports) - failed}/{len(reports)} checks passed "
          f"in {elapsed:.1f}s")

    with open(args.out, "w") as fh:
        json.dump([r.as_dict() for r in reports], fh, indent=2, sort_keys=True)
    print(f"report written to {args.out}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
