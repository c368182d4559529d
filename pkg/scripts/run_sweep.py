#!/usr/bin/env python3
"""Run the prediction-versus-oracle sweep and print a readable report.

The library's run_sweep does the work; this script adds argument parsing,
wall-clock timing, and an optional JSONL dump of mismatch records.  A
nonzero exit code means the classifier disagreed with the oracle somewhere,
which should never happen.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from trimorph.sweep import SweepConfig, run_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-s", type=int, default=3)
    parser.add_argument("--max-p", type=int, default=3)
    parser.add_argument("--max-exp", type=int, default=2)
    parser.add_argument("--max-bonly-exp", type=int, default=3)
    parser.add_argument("--parallel", type=int, default=1)
    parser.add_argument("--output", help="write mismatch and summary records here")
    args = parser.parse_args()

    config = SweepConfig(
        max_s=args.max_s,
        max_p=args.max_p,
        max_exp=args.max_exp,
        max_bonly_exp=args.max_bonly_exp,
        parallel=args.parallel,
    )
    start = time.perf_counter()
    result = run_sweep(config)
    elapsed = time.perf_counter() - start

    print(f"bounds: {config.bounds()}  workers: {config.parallel}")
    print(
        f"{result.morphisms} morphisms, {result.pairs} ordered pairs, "
        f"{result.commuting} commuting, {elapsed:.2f}s"
    )
    print("cases:")
    for case in sorted(result.cases):
        print(f"  {case:18s} {result.cases[case]:8d}")
    print("conditions observed true:")
    for key in sorted(result.conditions):
        print(f"  {key:45s} {result.conditions[key]:6d}")
    print(f"mismatches: {len(result.mismatches)}")

    if args.output:
        with open(args.output, "w") as fh:
            for record in result.mismatches:
                fh.write(json.dumps(record, sort_keys=True) + "\n")
            fh.write(json.dumps(result.summary_record(), sort_keys=True) + "\n")
        print(f"records written to {args.output}")

    return 1 if result.mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
