#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times spanning-tree enumeration (bare count) and enumeration with the
fcb_weight histogram collector on K7 and K8. Run from the repo root:

    python3 scripts/benchmark.py [--repeat N]
"""

import argparse
import time

from treegarden import (
    MetricKey,
    collector_count,
    collector_histogram,
    new_graph,
    run_pipeline,
)
from treegarden._kernel import active_implementation, force_pure_python, have_speedups


def complete_graph(n):
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def time_case(g, make_collectors, repeat):
    best = None
    for _ in range(repeat):
        collectors = make_collectors()
        start = time.perf_counter()
        result = run_pipeline(g, collectors, [])
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result.summary.trees_visited


CASES = [
    ("K7 count", complete_graph(7), lambda: [collector_count()]),
    ("K8 count", complete_graph(8), lambda: [collector_count()]),
    ("K7 fcb hist", complete_graph(7),
     lambda: [collector_histogram(MetricKey.FCB_WEIGHT)]),
    ("K8 fcb hist", complete_graph(8),
     lambda: [collector_histogram(MetricKey.FCB_WEIGHT)]),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per case, best time reported")
    args = parser.parse_args()

    if not have_speedups():
        print("compiled extension not built; only the pure kernels will run")

    results = {}
    for pure in (False, True):
        force_pure_python(pure)
        impl = active_implementation()
        if impl in results:
            continue
        print(f"\n[{impl}]")
        for label, g, make in CASES:
            elapsed, visited = time_case(g, make, args.repeat)
            results.setdefault(impl, {})[label] = elapsed
            print(f"  {label:<14} {visited:>7} trees  {elapsed:8.3f}s")
    force_pure_python(False)

    if "c" in results and "python" in results:
        print("\nspeedup (python / c):")
        for label, _, _ in ((c[0], None, None) for c in CASES):
            ratio = results["python"][label] / results["c"][label]
            print(f"  {label:<14} {ratio:6.1f}x")


if __name__ == "__main__":
    main()
