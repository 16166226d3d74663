#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three bulk kernels on realistic shapes, then a full quotient build
and a full decomposition under each backend.  Run from the repo root:

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from cycscd import kernels
from cycscd.engine import scd_power_quotient
from cycscd.necklace import build_power_quotient
from cycscd.poset import Chain, SymmetricChainDecomposition, chain_poset


def timed(fn, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - started)
    return best, result


def bench_backend(name, quick):
    kernels.set_backend(name)
    rows = 200_000 if quick else 2_000_000
    n = 22
    rng = np.random.default_rng(7)
    words = rng.integers(0, 4, size=(rows, n)).astype(np.int64)

    chain2 = chain_poset(2)
    scd2 = SymmetricChainDecomposition((Chain((0, 1)),), 1)
    quotient_n = 18 if quick else 22

    out = {}
    # warm up the jit before timing anything
    kernels.least_rotations(words[:128])
    kernels.row_periods(words[:128])
    kernels.necklace_words(8, 2, 10 ** 6)

    out["least_rotations"], _ = timed(lambda: kernels.least_rotations(words))
    out["row_periods"], _ = timed(lambda: kernels.row_periods(words))
    out["necklace_words"], got = timed(
        lambda: kernels.necklace_words(quotient_n, 2, 10 ** 6))
    out["build_power_quotient"], _ = timed(
        lambda: build_power_quotient(chain2, quotient_n), repeat=1)
    out["scd_power_quotient"], cert = timed(
        lambda: scd_power_quotient(chain2, scd2, quotient_n), repeat=1)
    return out, got.shape[0], cert.poset.n_elements


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller shapes for a fast sanity run")
    args = parser.parse_args()

    results = {}
    for name in ("numba", "numpy"):
        try:
            results[name], necklaces, elements = bench_backend(name, args.quick)
        except ImportError:
            print(f"{name}: unavailable, skipped")
    print(f"# necklace_words/build/scd operate on {necklaces} necklaces "
          f"({elements} quotient elements)")
    header = f"{'kernel':<24}" + "".join(f"{name:>12}" for name in results)
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for key in next(iter(results.values())):
        line = f"{key:<24}"
        for name in results:
            line += f"{results[name][key]:>11.3f}s"
        if len(results) == 2:
            ratio = results["numpy"][key] / max(results["numba"][key], 1e-9)
            line += f"{ratio:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
