#!/usr/bin/env python3
"""Benchmark the compiled crossing-count kernel against the pure-Python
fallback, both on the raw inversion counter and on full layout crossing
counts.

Run: python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import statistics
import time

from hiveplot import _kernels_py

try:
    from hiveplot import _kernels as compiled
except ImportError:
    compiled = None

from hiveplot.bench import SynthConfig, random_partition_graph
from hiveplot.axisorder import inter_group_weights, optimize_order
from hiveplot.layout import layout_from_groups
from hiveplot.minimize import minimize_crossings


def time_call(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_inversions():
    print("count_inversions: best of 5 runs")
    print(f"{'n':>10} {'pure (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    rng = random.Random(0)
    for n in (1_000, 10_000, 100_000, 500_000):
        values = [rng.randrange(n) for _ in range(n)]
        pure = time_call(_kernels_py.count_inversions, values)
        if compiled is None:
            print(f"{n:>10} {pure * 1e3:>12.2f} {'-':>12} {'-':>8}")
            continue
        assert compiled.count_inversions(values) == _kernels_py.count_inversions(values)
        fast = time_call(compiled.count_inversions, values)
        print(f"{n:>10} {pure * 1e3:>12.2f} {fast * 1e3:>12.2f} {pure / fast:>7.1f}x")


def bench_pipeline():
    """Full stage-3 runs; the kernel is called once per sweep cycle."""
    import hiveplot.kernels as kernels

    print("\nfull crossing minimization (n=240, six groups, g=2):")
    cfg = SynthConfig()
    graph, partition = random_partition_graph(cfg, 240, seed=1)
    weights = inter_group_weights(graph, partition)
    order = optimize_order(weights, seed=1)
    layout = layout_from_groups(list(partition.membership), axis_order=order, gaps=2)

    for label, impl in (("pure", _kernels_py), ("cython", compiled)):
        if impl is None:
            continue
        kernels.count_inversions = impl.count_inversions
        import hiveplot.crossings as crossings

        crossings.count_inversions = impl.count_inversions
        times = []
        for rep in range(3):
            t0 = time.perf_counter()
            minimize_crossings(layout, graph, seed=rep)
            times.append(time.perf_counter() - t0)
        print(f"  {label:>7}: {statistics.mean(times) * 1e3:8.1f} ms mean of 3")


if __name__ == "__main__":
    if compiled is None:
        print("compiled extension not available; showing pure-Python numbers only\n")
    bench_inversions()
    bench_pipeline()
