"""Timing comparison of the compiled and numpy sampling kernels.

Both backends consume identical pre-drawn uniform arrays, so the comparison
isolates the kernel transform itself. Reports best-of-N wall time per call,
throughput, and the largest per-sample deviation between backends.

Usage: python benchmarks/bench_kernels.py [--samples N] [--repeats R]
"""

import argparse
import math
import time

import numpy as np

from ghostfield.kernels import _numpy

try:
    from ghostfield.kernels import _fast
except ImportError:
    _fast = None

MIX_ARGS = (
    0.0, 0.0, 1.0,
    math.sin(math.radians(120.0)), 0.0, math.cos(math.radians(120.0)),
    0.6, 5.0, 1.0, -1.0,
)


def best_time(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def row(label, n, numpy_time, fast_time, deviation):
    rate = n / numpy_time / 1e6
    line = f"{label:<28} numpy {numpy_time * 1e3:8.2f} ms ({rate:6.1f} M/s)"
    if fast_time is not None:
        speedup = numpy_time / fast_time
        rate = n / fast_time / 1e6
        line += f"   cython {fast_time * 1e3:8.2f} ms ({rate:6.1f} M/s)  x{speedup:.2f}"
        line += f"   max|diff| {deviation:.2e}"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=2_000_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    if _fast is None:
        print("compiled backend unavailable; timing the numpy fallback only")

    u5 = rng.random((5, args.samples))
    numpy_time, ref = best_time(
        lambda: _numpy.signed_mixture_products(u5, *MIX_ARGS), args.repeats
    )
    fast_time = deviation = None
    if _fast is not None:
        fast_time, got = best_time(
            lambda: _fast.signed_mixture_products(u5, *MIX_ARGS), args.repeats
        )
        deviation = float(np.max(np.abs(got - ref)))
    row("signed_mixture_products", args.samples, numpy_time, fast_time, deviation)

    u2 = rng.random((2, args.samples))
    numpy_time, ref = best_time(
        lambda: _numpy.conditional_pair_outcomes(u2, 0.75, 0.25), args.repeats
    )
    fast_time = deviation = None
    if _fast is not None:
        fast_time, got = best_time(
            lambda: _fast.conditional_pair_outcomes(u2, 0.75, 0.25), args.repeats
        )
        deviation = float(
            max(np.abs(got[0] - ref[0]).max(), np.abs(got[1] - ref[1]).max())
        )
    row("conditional_pair_outcomes", args.samples, numpy_time, fast_time, deviation)


if __name__ == "__main__":
    main()
