#!/usr/bin/env python3
"""Cross-check the structured enumeration against brute force, from the shell.

Covers every Z_m x Z_n x Z_r with m n r up to the bound (rank-2 shapes too)
and exits nonzero on any mismatch, so the script can gate CI jobs directly.
"""

import argparse
import sys
import time

from abelian3.cli import run_lattice_verification


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--max-order",
        type=int,
        default=120,
        help="check all groups with m*n*r up to this bound (default 120)",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress progress output")
    args = parser.parse_args()
    if args.max_order < 1:
        parser.error("--max-order must be positive")

    progress = None if args.quiet else (lambda msg: print(msg, file=sys.stderr))
    start = time.perf_counter()
    report = run_lattice_verification(args.max_order, progress=progress)
    elapsed = time.perf_counter() - start

    print(f"rank-3 shapes checked: {report.rank3_shapes}")
    print(f"rank-2 shapes checked: {report.rank2_shapes}")
    print(f"elapsed: {elapsed:.1f} s")
    for failure in report.failures:
        print(f"FAIL {failure}")
    print("result:", "PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
