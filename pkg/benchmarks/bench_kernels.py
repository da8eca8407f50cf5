#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot loops on representative workloads:

* nth_digit_tail_sum: the position-n digit probability needs a sum of
  9 * 10^(n-2) log terms, so positions 6-8 stress the accumulation loop;
* imperfect_scan: the fit's coarse grid is |N_s| x 10001 x 9 Pearson
  evaluations; histogram totals 64 and 1000 span the practical range.

Run after building the extension (pip install -e . --no-build-isolation):

    python benchmarks/bench_kernels.py
"""

import argparse
import math
import time

import numpy as np

from digitaudit import _purekernels

try:
    from digitaudit import _fastkernels
except ImportError:
    _fastkernels = None


def _time(func, *args, repeat=3):
    best = math.inf
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_tail_sums(positions):
    rows = []
    for n in positions:
        pure_t, pure_v = _time(_purekernels.nth_digit_tail_sum, 7, n)
        if _fastkernels is not None:
            fast_t, fast_v = _time(_fastkernels.nth_digit_tail_sum, 7, n)
            assert abs(pure_v - fast_v) < 1e-12, (pure_v, fast_v)
        else:
            fast_t = None
        rows.append((f"tail sum n={n} ({9 * 10 ** (n - 2):.0e} terms)", pure_t, fast_t))
    return rows


def bench_scans(totals):
    rows = []
    digits = np.arange(1.0, 10.0)
    s_grid = np.linspace(0.0, 1.0, 10001)
    l_matrix = np.log10(1.0 / digits + 1.0 + s_grid[:, None] * digits)
    for total in totals:
        observed = np.array([total * math.log10(1 + 1 / d) for d in range(1, 10)])
        observed = np.round(observed)
        ns_values = np.arange(math.ceil(total / 2), 2 * total + 1, dtype=np.float64)
        pure_t, (pc, pi) = _time(_purekernels.imperfect_scan, observed, l_matrix, ns_values)
        if _fastkernels is not None:
            fast_t, (fc, fi) = _time(_fastkernels.imperfect_scan, observed, l_matrix, ns_values)
            assert np.array_equal(pi, fi) and np.allclose(pc, fc, atol=1e-9)
        else:
            fast_t = None
        rows.append((f"imperfect scan N={total} ({len(ns_values)} scales)", pure_t, fast_t))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--positions", type=int, nargs="*", default=[6, 7, 8])
    parser.add_argument("--totals", type=int, nargs="*", default=[64, 1000])
    args = parser.parse_args()

    if _fastkernels is None:
        print("compiled kernels not built; timing the pure backend only\n")

    rows = bench_tail_sums(args.positions) + bench_scans(args.totals)
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, pure_t, fast_t in rows:
        if fast_t is None:
            print(f"{name:<{width}}  {pure_t:>9.4f}s  {'-':>10}  {'-':>8}")
        else:
            print(f"{name:<{width}}  {pure_t:>9.4f}s  {fast_t:>9.4f}s  {pure_t / fast_t:>7.1f}x")


if __name__ == "__main__":
    main()
