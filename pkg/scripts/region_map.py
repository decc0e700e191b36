#!/usr/bin/env python3
"""Write the convergence-region grid for a torus knot as plot-ready CSV.

Thin driver over the CLI's region command; the defaults reproduce the
partition of the xi plane for T(2,3) with the boundary semicircle and the
pole markers on the imaginary axis.

Usage:
    python scripts/region_map.py                      # T(2,3), default window
    python scripts/region_map.py --a 3 --b 5 --step 0.02 --out region_35.csv
"""

import argparse
import sys

from torusasym.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=int, default=2)
    parser.add_argument("--b", type=int, default=3)
    parser.add_argument("--re-min", type=float, default=-2.0)
    parser.add_argument("--re-max", type=float, default=2.0)
    parser.add_argument("--im-max", type=float, default=2.0)
    parser.add_argument("--step", type=float, default=0.05)
    parser.add_argument("--out", type=str, default="region_map.csv")
    args = parser.parse_args()

    code = cli_main(
        [
            "region",
            "--a", str(args.a), "--b", str(args.b),
            "--re-min", str(args.re_min), "--re-max", str(args.re_max),
            "--im-min", "0", "--im-max", str(args.im_max),
            "--step", str(args.step),
            "--csv", args.out,
        ]
    )
    if code == 0:
        print(f"wrote {args.out}")
    return code


if __name__ == "__main__":
    sys.exit(main())
