#!/usr/bin/env python3
"""Search all T-characters for the ones matching M* and the delta-twist of M.

For random gamma~ the intertwiner solver is run against M(gamma' (x) mu') for
every mu'; the script prints which mu' occur and whether they follow the
det-twisted rules, and how often the determinant-free dual would have matched.
"""

import argparse
import random

from gghecke.psmod import (CChar, delta_characters, find_isomorphism, principal_series,
                           random_character, twist_dual)
from gghecke.refl_group import all_chars, longest_element, twist


def dual_characters(chi, kbar0):
    D = twist_dual(principal_series(chi, kbar0), "dual")
    gamma = tuple(-x for x in twist(longest_element(chi.n), chi.gamma))
    return [mu for mu in all_chars(chi.r, chi.n)
            if find_isomorphism(D, principal_series(CChar(gamma, mu), kbar0)) is not None]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for r in args.r:
        rule_dual = rule_delta = naive = 0
        for _ in range(args.count):
            chi = random_character(r, args.n, rng)
            duals = dual_characters(chi, 1)
            deltas = delta_characters(chi, 1)
            rule_dual += duals == [chi.dual().mu]
            rule_delta += deltas == [chi.mu.times_det()]
            naive += chi.naive_dual().mu in duals
            print(f"r={r} mu={chi.mu.index}: dual {[m.index for m in duals]}, delta {[m.index for m in deltas]}")
        print(f"r={r}: dual rule {rule_dual}/{args.count}, delta rule {rule_delta}/{args.count}, "
              f"determinant-free dual {naive}/{args.count}\n")


if __name__ == "__main__":
    main()
