"""Measure hom-count runtime against host size for a width-2 pattern.

Doubles the host (vertex and edge count together) a few times and prints
one row per host with the observed time and the log2 slope against the
previous row. Near-linear slopes are the expected behaviour for the
bag-by-bag dynamic program on bounded-width patterns.
"""

import argparse
import math
import random
import sys
import time
from dataclasses import dataclass

sys.path.insert(0, "src")

from homlattice.graphs import Graph, cycle
from homlattice.treedp import hom_count, treewidth_exact


@dataclass(frozen=True)
class ScalingConfig:
    start_vertices: int
    edge_factor: int
    doublings: int
    repeats: int
    seed: int


def random_host(rng, n, m):
    edges = set()
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.add((u, v) if u < v else (v, u))
    return Graph(n, edges)


def timed_count(pattern, host, repeats):
    best = None
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = hom_count(pattern, host)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return value, max(best, 1e-4)


def run(config):
    rng = random.Random(config.seed)
    pattern = cycle(4)
    width, _ = treewidth_exact(pattern)
    print(f"pattern: 4-cycle, treewidth {width}")
    print(f"{'hosts':>8} {'edges':>8} {'count':>14} {'seconds':>8} {'slope':>6}")
    previous = None
    n = config.start_vertices
    for _ in range(config.doublings + 1):
        m = config.edge_factor * n
        host = random_host(rng, n, m)
        value, seconds = timed_count(pattern, host, config.repeats)
        if previous is None:
            slope = "-"
        else:
            slope = f"{math.log2(seconds / previous):.2f}"
        print(f"{n:>8} {m:>8} {value:>14} {seconds:>8.3f} {slope:>6}")
        previous = seconds
        n *= 2


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--start", type=int, default=500,
                        help="vertices in the smallest host")
    parser.add_argument("--edge-factor", type=int, default=5,
                        help="edges per vertex")
    parser.add_argument("--doublings", type=int, default=3,
                        help="how many times to double the host")
    parser.add_argument("--repeats", type=int, default=2,
                        help="timing repeats per host, best is kept")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)
    run(ScalingConfig(args.start, args.edge_factor, args.doublings,
                      args.repeats, args.seed))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
