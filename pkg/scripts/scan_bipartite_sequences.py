#!/usr/bin/env python3
"""Scan complementation patterns on the 27-vertex graph.

For every subset of the non-central side up to a size limit, run the
four-stage pattern (centrals, subset, centrals, subset) and report
whether the result stays bipartite and how the split and degree
distribution come out. Useful for hunting relabeled variants of the
construction.
"""

from __future__ import annotations

import argparse
from collections import Counter
from itertools import combinations

from hyperlu import counterexamples as cx


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=2, help="largest subset size")
    ap.add_argument("--limit", type=int, default=2000, help="max subsets to try")
    ap.add_argument("--show", type=int, default=10, help="examples to print")
    args = ap.parse_args()

    g, split = cx.build(cx.TwentySeven())
    tried = 0
    kept: list[tuple[tuple[int, ...], tuple[int, int]]] = []
    shapes: Counter = Counter()
    for size in range(args.max_size + 1):
        for subset in combinations(split.right, size):
            if tried >= args.limit:
                break
            tried += 1
            outcome = cx.bipartite_preserving_sequence(g, split, subset)
            if outcome.ok:
                shape = tuple(sorted((outcome.split.k1, outcome.split.k2)))
                shapes[shape] += 1
                kept.append((subset, shape))

    print(f"tried {tried} subsets up to size {args.max_size}")
    print(f"bipartite results: {sum(shapes.values())}, split shapes: {dict(shapes)}")
    for subset, shape in kept[: args.show]:
        print(f"  subset {subset} -> split {shape}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
