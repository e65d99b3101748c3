#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [N]

Times each hot kernel on N samples (default 2**20) plus one full
simulated sweep step per backend, and prints the speedup of the native
extension over the numpy implementation.
"""

import sys
import time

import numpy as np

from rxkit._kernels import _numpy as numpy_impl
from rxkit.modulation import ModulationScheme, ideal_points

try:
    from rxkit._kernels import _native as native_impl
except ImportError:
    native_impl = None


def best_of(func, repeats=5):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        func()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_case(name, make_args, call):
    args = make_args()
    t_numpy = best_of(lambda: call(numpy_impl, *args))
    if native_impl is None:
        print(f"{name:<42} numpy {t_numpy * 1e3:8.2f} ms   native     (not built)")
        return
    t_native = best_of(lambda: call(native_impl, *args))
    print(
        f"{name:<42} numpy {t_numpy * 1e3:8.2f} ms   "
        f"native {t_native * 1e3:8.2f} ms   x{t_numpy / t_native:5.2f}"
    )


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 1 << 20
    rng = np.random.default_rng(0)
    print(f"samples per case: {n}")

    for scheme in ModulationScheme:
        spec = ideal_points(scheme)
        frame = spec.points[rng.integers(0, spec.order, size=n)] + 0.1 * (
            rng.standard_normal(n) + 1j * rng.standard_normal(n)
        )
        bench_case(
            f"demap_square {scheme.name}",
            lambda frame=frame, spec=spec: (frame, spec.scheme.levels_per_axis, spec.scale),
            lambda impl, *args: impl.demap_square(*args),
        )

    meas = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    ref = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    bench_case(
        "error_magnitudes",
        lambda: (meas, ref),
        lambda impl, *args: impl.error_magnitudes(*args),
    )

    a = rng.integers(0, 256, size=n, dtype=np.int64)
    b = rng.integers(0, 256, size=n, dtype=np.int64)
    bench_case(
        "count_bit_errors",
        lambda: (a, b),
        lambda impl, *args: impl.count_bit_errors(*args),
    )


if __name__ == "__main__":
    main()
