#!/usr/bin/env python3
"""Tock cost of 100-vertex random connected graphs across the density grid,
10 seeds per point, min-cut and random mappers.

Writes results/density.csv; expect the dense points with the min-cut
mapper to dominate the runtime. Use --mappers random for a quick pass.
"""

import argparse
import sys
from pathlib import Path

from gsc.cli import main as gsc_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results/density.csv")
    parser.add_argument("--n", default="100")
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--mappers", default="mincut,random")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    return gsc_main(
        [
            "bench", "--suite", "density", "--n", args.n,
            "--seeds", str(args.seeds), "--mappers", args.mappers,
            "--workers", str(args.workers), "--out", args.out,
        ]
    )


if __name__ == "__main__":
    sys.exit(main())
