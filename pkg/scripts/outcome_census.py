"""Tabulate long-run outcomes and transient lengths of the balanced game.

For each n, counts how many of the C(2n-1, n-1) initial states end equitable,
equivocal, or in a clockwise/anti-clockwise wave with k P-blocks, and reports
the longest transient seen.

    python scripts/outcome_census.py --n 3..9
"""

import argparse
from collections import Counter

from candy_sharing import detect_cycle, enumerate_states, predict_outcome
from candy_sharing.cli import parse_range


def census(n):
    outcomes = Counter()
    longest = 0
    for s in enumerate_states(n):
        outcomes[str(predict_outcome(s).predicted)] += 1
        longest = max(longest, detect_cycle(s).transient_length)
    return outcomes, longest


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=parse_range, default=parse_range("3..8"))
    args = p.parse_args()
    for n in args.n:
        outcomes, longest = census(n)
        total = sum(outcomes.values())
        print(f"n={n}  states={total}  longest transient={longest}")
        for name, k in sorted(outcomes.items()):
            print(f"    {name:<18} {k:>8}  {k / total:6.1%}")


if __name__ == "__main__":
    main()
