#!/usr/bin/env python3
"""Benchmark the compiled connectivity kernels against the pure-Python
fallback: unit-disk adjacency construction plus one BFS per anchor, the
two operations that dominate large Monte Carlo runs.

Usage:
    python benchmarks/bench_kernels.py [--sizes 500,1000,2000,4000]
                                       [--anchors 10] [--repeats 3]
"""

import argparse
import time

import numpy as np

from grlsim.kernels import HAVE_COMPILED, get_kernel


def time_kernel(kernel, xs, ys, comm_range, anchor_ids, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        indptr, indices = kernel.build_adjacency(xs, ys, comm_range)
        kernel.hop_counts(indptr, indices, anchor_ids, len(xs))
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="500,1000,2000,4000",
                        help="comma-separated node counts")
    parser.add_argument("--anchors", type=int, default=10)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--degree", type=float, default=8.0,
                        help="target mean node degree (sets the range per size)")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    impls = ["pure"] + (["compiled"] if HAVE_COMPILED else [])
    if not HAVE_COMPILED:
        print("note: compiled kernels unavailable, timing the fallback only")

    rng = np.random.default_rng(0)
    side = 1000.0
    print(f"{'nodes':>7} {'range':>7} " + " ".join(f"{name:>12}" for name in impls) +
          ("  speedup" if len(impls) == 2 else ""))
    for n in sizes:
        xs = rng.uniform(0, side, n)
        ys = rng.uniform(0, side, n)
        # mean degree = n * pi * r^2 / side^2
        comm_range = side * np.sqrt(args.degree / (np.pi * n))
        anchor_ids = np.arange(args.anchors, dtype=np.int32)
        times = {}
        for name in impls:
            times[name] = time_kernel(get_kernel(name), xs, ys, float(comm_range),
                                      anchor_ids, args.repeats)
        row = f"{n:>7} {comm_range:>6.1f}m " + " ".join(f"{times[name] * 1e3:>10.2f}ms" for name in impls)
        if len(impls) == 2:
            row += f"  {times['pure'] / times['compiled']:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
