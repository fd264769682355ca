#!/usr/bin/env python3
"""Scalability sweep over sparse (n*log2(n) edges) and dense (n^2/log2(n))
random families up to 1000 vertices; the min-cut mapper stops at 300.

Writes results/scaling.csv.
"""

import argparse
import sys
from pathlib import Path

from gsc.cli import main as gsc_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results/scaling.csv")
    parser.add_argument("--n", default="10..1000")
    parser.add_argument("--family", choices=("sparse", "dense"), default=None,
                        help="default: both families")
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--mincut-cap", type=int, default=300)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    cmd = [
        "bench", "--suite", "scaling", "--n", args.n,
        "--seeds", str(args.seeds), "--mappers", "mincut,random",
        "--mincut-cap", str(args.mincut_cap), "--workers", str(args.workers),
        "--out", args.out,
    ]
    if args.family:
        cmd += ["--family", args.family]
    return gsc_main(cmd)


if __name__ == "__main__":
    sys.exit(main())
