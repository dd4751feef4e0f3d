#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the three expansion workloads that dominate real usage (scalar counts,
Laurent rank table, overpartitions) plus the dense Cauchy product, each
through both kernel implementations, and prints a timing table.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import sys
import time

from oddbalanced import _kernels_py

try:
    from oddbalanced import _speedups
except ImportError:
    _speedups = None


def _patched_module(impl):
    """Temporarily point the kernels module at one implementation."""
    import oddbalanced.kernels as K

    saved = {}
    names = ["shifted_add", "shifted_add_one", "geometric_add", "acc_add",
             "cauchy_mul", "table_mul_w", "table_mul_winv", "table_geometric",
             "table_acc"]
    for name in names:
        saved[name] = getattr(K, name)
        setattr(K, name, getattr(impl, name))
    return saved


def _restore_module(saved):
    import oddbalanced.kernels as K

    for name, func in saved.items():
        setattr(K, name, func)


def bench(impl, workload):
    saved = _patched_module(impl)
    try:
        t0 = time.perf_counter()
        workload()
        return time.perf_counter() - t0
    finally:
        _restore_module(saved)


def workloads(quick):
    from oddbalanced import genfunc

    n_scalar = 1200 if quick else 3000
    n_table = 250 if quick else 500
    n_pbar = 1500 if quick else 3000
    n_mul = 500 if quick else 900

    def dense_cauchy():
        import oddbalanced.kernels as K

        a = list(range(1, n_mul + 2))
        b = list(range(2, n_mul + 3))
        K.cauchy_mul(a, b, 0)

    return [
        (f"scalar counts to N={n_scalar}", lambda: genfunc.expand_v_totals(n_scalar)),
        (f"rank table to N={n_table}", lambda: genfunc.expand_V_rank(n_table)),
        (f"overpartitions to N={n_pbar}", lambda: genfunc.expand_overpartition(n_pbar)),
        (f"dense Cauchy product N={n_mul}", dense_cauchy),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not built; showing pure-Python timings only")

    rows = []
    for label, work in workloads(args.quick):
        pure = bench(_kernels_py, work)
        if _speedups is not None:
            fast = bench(_speedups, work)
            rows.append((label, pure, fast, pure / fast))
        else:
            rows.append((label, pure, None, None))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure [s]':>9}  {'compiled [s]':>12}  {'speedup':>8}")
    for label, pure, fast, speedup in rows:
        if fast is None:
            print(f"{label:<{width}}  {pure:>9.3f}  {'-':>12}  {'-':>8}")
        else:
            print(f"{label:<{width}}  {pure:>9.3f}  {fast:>12.3f}  {speedup:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
