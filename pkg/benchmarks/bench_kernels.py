#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Both backends are imported directly (bypassing the import-time selection in
entrovol.kernels) so they can be timed side by side in one process.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 251,1000,10000,100000] [--bins 20]
"""

import argparse
import importlib.util
import timeit

import numpy as np

from entrovol import _pykernels


def _load_compiled():
    if importlib.util.find_spec("entrovol._ckernels") is None:
        return None
    from entrovol import _ckernels

    return _ckernels


def _edges(values, m):
    lo, hi = values.min(), values.max()
    edges = lo + (hi - lo) * np.arange(m + 1) / m
    edges[0], edges[-1] = lo, hi
    return edges


def bench(fn, repeat=5, number=50):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="251,1000,10000,100000")
    ap.add_argument("--bins", type=int, default=20)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    compiled = _load_compiled()
    if compiled is None:
        print("compiled backend not available; showing fallback only")

    rng = np.random.Generator(np.random.PCG64(0))
    header = f"{'n':>8} {'kernel':>12} {'fallback us':>12}"
    if compiled:
        header += f" {'compiled us':>12} {'speedup':>8}"
    print(header)
    for n in sizes:
        values = np.ascontiguousarray(rng.standard_normal(n))
        edges = np.ascontiguousarray(_edges(values, args.bins))
        for name, py_fn, c_fn in (
            ("bin_counts",
             lambda: _pykernels.bin_counts(values, edges),
             (lambda: compiled.bin_counts(values, edges)) if compiled else None),
            ("sample_std",
             lambda: _pykernels.sample_std(values),
             (lambda: compiled.sample_std(values)) if compiled else None),
        ):
            t_py = bench(py_fn)
            line = f"{n:>8} {name:>12} {t_py * 1e6:>12.2f}"
            if c_fn:
                if name == "bin_counts":
                    assert list(py_fn()) == list(c_fn())
                else:
                    assert abs(py_fn() - c_fn()) <= 1e-12
                t_c = bench(c_fn)
                line += f" {t_c * 1e6:>12.2f} {t_py / t_c:>7.2f}x"
            print(line)


if __name__ == "__main__":
    main()
