#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Runs each hot kernel on a representative size with both backends and prints
elapsed times plus the speedup.  Usage:

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from kloosum.bilinear import make_weights
from kloosum.field import build_field
from kloosum.kernels import available_backends
from kloosum.kloosterman import spectral_table


def timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def build_cases():
    cases = []

    fld_a = build_field(2003)
    char_nz = np.ascontiguousarray(fld_a.char_table[1:])

    def conv(mod):
        return lambda: mod.convolution_pass(
            fld_a.p, char_nz, char_nz, fld_a.inv_table
        )

    cases.append(("convolution_pass p=2003", conv))

    fld_b = build_field(499)

    def naive(mod):
        return lambda: mod.naive_sum(
            fld_b.p, 3, 5, fld_b.char_table, fld_b.inv_table
        )

    cases.append(("naive_sum p=499 r=3", naive))

    fld_c = build_field(10007)
    table_c = spectral_table(fld_c, 2)
    rng = np.random.default_rng(1)
    m_el = np.sort(rng.choice(fld_c.p - 1, size=800, replace=False) + 1).astype(
        np.int64
    )
    n_el = np.arange(1, 801, dtype=np.int64)
    alpha = make_weights("unimodular", 800, 2).weights
    beta = make_weights("bounded", 800, 3).weights

    def bil(mod):
        return lambda: mod.bilinear_sum(fld_c.p, table_c.values, m_el, n_el, alpha, beta)

    cases.append(("bilinear_sum 800x800 p=10007", bil))

    m_small = np.sort(rng.choice(210, size=30, replace=False) + 1).astype(np.int64)

    def brute(mod):
        return lambda: mod.brute_pair_count(211, 40, m_small)

    cases.append(("brute_pair_count p=211 H=40 M=30", brute))

    fld_d = build_field(61)
    table_d = spectral_table(fld_d, 2)
    eta = make_weights("unimodular", 4, 4).weights

    def block(mod):
        return lambda: mod.block_terms(fld_d.p, table_d.values, 2, 3, eta)

    cases.append(("block_terms p=61 B=3 ell=2", block))
    return cases


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; benchmarking the fallback only")

    print(f"{'kernel':38s}" + "".join(f"{name:>12s}" for name in backends) + f"{'speedup':>10s}")
    for label, make in build_cases():
        times = {}
        for name, mod in backends.items():
            times[name] = timeit(make(mod), args.repeat)
        line = f"{label:38s}"
        for name in backends:
            line += f"{times[name] * 1e3:10.2f}ms"
        if "cython" in times and "python" in times:
            line += f"{times['python'] / times['cython']:9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
