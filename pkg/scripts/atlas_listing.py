#!/usr/bin/env python3
"""List minimal-atlas labeled graphs for small chart counts.

For each order p, prints every connected underlying graph with all label
orbits in [2, max_label], together with its cycle rank and group rank.

    python scripts/atlas_listing.py --max-order 4 --max-label 3
"""

import argparse
from collections import Counter

from atlasgraph.enumeration import build_catalog
from atlasgraph.pi1 import group_rank, presentation


def describe(g):
    return " ".join(f"{e.u}-{e.v}:{e.label}" for e in g.edges) or "(single chart)"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=3)
    parser.add_argument("--max-label", type=int, default=3)
    parser.add_argument("--dim", type=int, default=2)
    args = parser.parse_args()
    for p in range(1, args.max_order + 1):
        cat = build_catalog(p, args.max_label, args.dim)
        ranks = Counter(e.labeled_rank for e in cat)
        print(f"== {p} chart(s): {len(cat)} labeled graphs, rank histogram {dict(sorted(ranks.items()))}")
        for e in cat:
            g = e.canonical.decode()
            rank = group_rank(presentation(g, 0))
            assert rank == e.labeled_rank
            print(f"  rank {e.labeled_rank:>2}  {describe(g)}")


if __name__ == "__main__":
    main()
