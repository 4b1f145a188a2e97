"""Run every theorem check over a range of ring sizes and write one CSV.

    python scripts/sweep.py --n 3..9 --jobs 4 --out sweep.csv
"""

import argparse
import csv
import sys

from candy_sharing import THEOREMS, verify
from candy_sharing.cli import parse_range


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=parse_range, default=parse_range("3..8"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="-")
    args = p.parse_args()

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.DictWriter(out, ["theorem", "n", "states_checked", "failures"])
    writer.writeheader()
    bad = 0
    for theorem in THEOREMS:
        report = verify(theorem, args.n, jobs=args.jobs)
        writer.writerows(report.csv_rows())
        bad += len(report.failures)
        print(f"{theorem:>20}: {report.states_checked} states, "
              f"{len(report.failures)} failures, {report.elapsed:.1f}s", file=sys.stderr)
    sys.exit(2 if bad else 0)


if __name__ == "__main__":
    main()
