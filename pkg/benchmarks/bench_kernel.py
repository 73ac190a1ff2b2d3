#!/usr/bin/env python3
"""Benchmark the compiled word-operator kernel against the pure fallback.

Times the raw operators on a fixed word population and two graph-building
workloads that dominate the exhaustive verification sweeps.  Run after
building the extension (pip install -e . --no-build-isolation):

    python benchmarks/bench_kernel.py
"""

import time
from itertools import product

from queercrystals import _kernel_py

try:
    from queercrystals import _fastops
except ImportError:
    _fastops = None


def population(n, length):
    return [bytes(w) for w in product(range(1, n + 1), repeat=length)]


def bench_raw(impl, words, n, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for w in words:
            for i in range(1, n):
                impl.apply_e(w, i)
                impl.apply_f(w, i)
                impl.eps_phi(w, i)
            impl.apply_fbar1(w)
            impl.apply_ebar1(w)
            for i in range(2, n):
                impl.apply_fbar(w, i)
            impl.is_q_highest(w, n)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_closure(impl, n, length):
    import queercrystals.kernel as kernel
    saved = {name: getattr(kernel, name) for name in dir(impl)
             if not name.startswith("_") and name != "IMPLEMENTATION"}
    for name in saved:
        setattr(kernel, name, getattr(impl, name))
    try:
        from queercrystals.graphs import WordOps, build_graph
        t0 = time.perf_counter()
        build_graph(WordOps(n), population(n, length))
        return time.perf_counter() - t0
    finally:
        for name, fn in saved.items():
            setattr(kernel, name, fn)


def main():
    rows = []
    n, length = 4, 6
    words = population(n, length)
    base = bench_raw(_kernel_py, words, n)
    rows.append(("raw ops, 4096 words of length 6", base, None))
    if _fastops is not None:
        fast = bench_raw(_fastops, words, n)
        rows[-1] = (rows[-1][0], base, fast)
    base = bench_closure(_kernel_py, 3, 7)
    fast = bench_closure(_fastops, 3, 7) if _fastops else None
    rows.append(("crystal graph on all 2187 words of length 7", base, fast))

    print(f"{'workload':<48}{'pure':>10}{'cython':>10}{'speedup':>9}")
    for label, pure, fast in rows:
        if fast is None:
            print(f"{label:<48}{pure:>9.3f}s{'n/a':>10}{'':>9}")
        else:
            print(f"{label:<48}{pure:>9.3f}s{fast:>9.3f}s"
                  f"{pure / fast:>8.1f}x")
    if _fastops is None:
        print("\ncompiled kernel not built; only the pure fallback was timed")


if __name__ == "__main__":
    main()
