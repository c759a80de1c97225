"""Numerically check the classification claims for the four families.

    python3 scripts/check_families.py [--seed N] [--draws N]
"""

import argparse

from liefol.verify import format_table, verify_families


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--draws", type=int, default=100)
    args = ap.parse_args()
    rows = verify_families(args.seed, args.draws)
    print(format_table(rows, args.seed, args.draws))


if __name__ == "__main__":
    main()
