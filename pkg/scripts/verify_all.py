#!/usr/bin/env python3
"""Run every verification sweep at desk scale and print a summary.

This is the batch counterpart of `braidcover verify`: it walks the same
parameter grids as the acceptance suite, times each family of checks, and
exits nonzero if anything fails.
"""

import sys
import time

from braidcover.braid import (
    check_braid_relations,
    check_cross_validation,
    check_dehn_factorization,
    check_lift_projection,
)
from braidcover.surface import format_table, table

SWEEPS = [
    ("braid relations (functor + automorphism)", check_braid_relations,
     [(d, n) for d in range(2, 7) for n in range(3, 8)]),
    ("Dehn-twist factorization", check_dehn_factorization,
     [(d, n) for d in range(2, 6) for n in range(2, 6)]),
    ("lift/projection commutativity", check_lift_projection,
     [(d, n) for d in range(2, 7) for n in range(2, 8)]),
    ("triple cross-validation", check_cross_validation,
     [(d, n) for d in range(2, 7) for n in range(2, 7)]),
]


def main() -> int:
    print("surface invariants, four- and five-sheet covers, n = 1..8\n")
    for d in (4, 5):
        print(f"d = {d}")
        print(format_table(table(d, 8)))
        print()

    failures = []
    for label, runner, grid in SWEEPS:
        start = time.perf_counter()
        total = 0
        for d, n in grid:
            report = runner(d, n)
            total += len(report)
            failures.extend(
                f"d={d} n={n} {check.name}: {check.detail}"
                for check in report.checks
                if not check.passed
            )
        elapsed = time.perf_counter() - start
        print(f"{label}: {total} checks over {len(grid)} parameter pairs "
              f"in {elapsed:.2f}s")

    if failures:
        print(f"\n{len(failures)} FAILED CHECKS")
        for line in failures:
            print(" ", line)
        return 1
    print("\nall checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
