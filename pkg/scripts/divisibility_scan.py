#!/usr/bin/env python3
"""Sweep seed/coefficient grids for the subscript-divisibility property.

A parameter point survives when G_n | G_{nq} held for every n up to the
bound. The interesting output is the survivor pattern: which seeds admit
the property at all, and whether anything outside (0, 1 | a, b) sneaks in
once b = 0 is allowed.
"""

import argparse
from collections import Counter

from genfib import g_prefix, is_cquence, scan_divisible


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--u-max", type=int, default=6)
    ap.add_argument("--v-max", type=int, default=6)
    ap.add_argument("--a-max", type=int, default=4)
    ap.add_argument("--b-max", type=int, default=4)
    ap.add_argument("--b-min", type=int, default=0,
                    help="set to 1 to exclude the degenerate b = 0 row")
    ap.add_argument("--bound", type=int, default=40)
    args = ap.parse_args()

    survivors = scan_divisible(
        (0, args.u_max), (1, args.v_max), (1, args.a_max),
        (args.b_min, args.b_max), args.bound,
    )

    by_seed = Counter()
    for params, report in survivors:
        by_seed[(params.u, params.v)] += 1
        tag = "C-quence" if is_cquence(params) else "b=0"
        head = g_prefix(params, 7)
        print(f"({params.u},{params.v} | {params.a},{params.b})  [{tag}]  {head}")

    print()
    print(f"{len(survivors)} survivors at bound {args.bound}")
    for seed, count in sorted(by_seed.items()):
        print(f"  seed {seed}: {count} coefficient pairs")


if __name__ == "__main__":
    main()
