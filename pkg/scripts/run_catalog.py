#!/usr/bin/env python3
"""Run every verification suite over the built-in weight catalog.

Prints one row per (weights, suite) with timing; exits nonzero if any check
fails.  Pass --json to dump the full reports instead of the table.
"""

import argparse
import json
import sys
import time

from octoweyl.suites import DEFAULT_CATALOG, SUITE_NAMES, SuiteConfig, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--seed", type=int, default=None)
    args = parser.parse_args()

    cfg = SuiteConfig() if args.seed is None else SuiteConfig(seed=args.seed)
    reports = []
    failed = 0
    t_start = time.perf_counter()
    for weights in DEFAULT_CATALOG:
        for name in SUITE_NAMES:
            t = time.perf_counter()
            rep = run_suite(name, weights, cfg=cfg)
            dt = time.perf_counter() - t
            reports.append(rep)
            if not rep["pass"]:
                failed += 1
            if not args.json:
                verdict = "PASS" if rep["pass"] else "FAIL"
                print(
                    f"{verdict}  {str(weights):14s} {name:22s} "
                    f"{len(rep['details']):4d} checks  {dt:6.2f}s"
                )
    total = time.perf_counter() - t_start
    if args.json:
        print(json.dumps({"suites": reports, "pass": failed == 0}, sort_keys=True))
    else:
        print(f"\n{len(reports)} suite runs, {failed} failed, {total:.1f}s total")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
