#!/usr/bin/env python3
"""Sweep the four analytic graph families over sizes 10..1000 and record
Tock counts per mapper (compare the min-cut placement against random).

Writes results/types.csv. The complete-graph family with the min-cut
mapper is capped at 300 vertices by default; raise --mincut-cap to push it
further at the cost of much longer contraction runs.
"""

import argparse
import sys
from pathlib import Path

from gsc.cli import main as gsc_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results/types.csv")
    parser.add_argument("--n", default="10..1000")
    parser.add_argument("--kind", default=None, help="restrict to one family")
    parser.add_argument("--seeds", type=int, default=10, help="instances per size for random trees")
    parser.add_argument("--mincut-cap", type=int, default=300)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    cmd = [
        "bench", "--suite", "types", "--n", args.n,
        "--seeds", str(args.seeds), "--mappers", "mincut,random",
        "--mincut-cap", str(args.mincut_cap), "--workers", str(args.workers),
        "--out", args.out,
    ]
    if args.kind:
        cmd += ["--kind", args.kind]
    return gsc_main(cmd)


if __name__ == "__main__":
    sys.exit(main())
