#!/usr/bin/env python3
"""Compare the type-A root criterion with the simplicity oracle on an integer grid."""

import argparse
import itertools
from collections import Counter

from gghecke.gha_a import kr_set, principal_series_A
from gghecke.simplicity import composition_length


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--lo", type=int, default=-3)
    ap.add_argument("--hi", type=int, default=3)
    ap.add_argument("--c", type=int, default=1)
    args = ap.parse_args()
    lengths = Counter()
    bad = 0
    for lam in itertools.product(range(args.lo, args.hi + 1), repeat=args.n):
        roots = kr_set(lam, None, args.c)
        lg = len(composition_length(principal_series_A(lam, None, args.c)))
        bad += (lg == 1) != (not roots)
        lengths[(len(roots), lg)] += 1
    print(f"{sum(lengths.values())} weights, {bad} disagreements")
    for (k, lg), m in sorted(lengths.items()):
        print(f"  |P| = {k}, length {lg}: {m}")


if __name__ == "__main__":
    main()
