#!/usr/bin/env python3
"""Count connected graphs of each order and time the enumeration.

    python scripts/kp_table.py --max-order 8 --jobs 1
"""

import argparse
import time

from atlasgraph.enumeration import count_connected_graphs

KNOWN = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=7)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    print(f"{'p':>2} {'k(p)':>7} {'expected':>9} {'seconds':>8}")
    for p in range(1, args.max_order + 1):
        t0 = time.perf_counter()
        k = count_connected_graphs(p, jobs=args.jobs)
        dt = time.perf_counter() - t0
        flag = "" if KNOWN.get(p) == k else "  MISMATCH"
        print(f"{p:>2} {k:>7} {KNOWN.get(p, '?'):>9} {dt:>8.2f}{flag}")


if __name__ == "__main__":
    main()
