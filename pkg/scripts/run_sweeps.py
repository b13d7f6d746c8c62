#!/usr/bin/env python3
"""Run the standard criterion sweeps and write one CSV per sweep.

    python3 scripts/run_sweeps.py --out results --jobs 8
"""

import argparse
import os
import sys
import time

from gghecke.criterion import SweepConfig, criterion_sweep

SWEEPS = {
    "r2n2": SweepConfig(2, 2, "1", "-3..3"),
    "r3n2": SweepConfig(3, 2, "1", "-3..3"),
    "r3n2_half": SweepConfig(3, 2, "1/2", "-3/2..3/2:1/2"),
    "r2n3": SweepConfig(2, 3, "1", "-2..2", lengths=True),
    "r3n3": SweepConfig(3, 3, "1/3", "-1..1"),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--only", nargs="*", choices=sorted(SWEEPS))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    failed = False
    for name in args.only or SWEEPS:
        cfg = SWEEPS[name]
        cfg.jobs = args.jobs
        t0 = time.time()
        res = criterion_sweep(cfg)
        with open(os.path.join(args.out, f"{name}.csv"), "w", encoding="utf-8") as fh:
            fh.write(res.to_csv())
        c = res.counts()
        print(f"{name:10s} {c['points']:4d} instances, {c['agree']} agree, {c['disagree']} disagree, "
              f"{c['refused']} refused, {c['reducible']} reducible  ({time.time() - t0:.1f}s)")
        failed |= bool(c["disagree"] or c["refused"])
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
