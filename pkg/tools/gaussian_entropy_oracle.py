"""Brute-force Monte-Carlo oracle for binned entropy of Gaussian samples.

Deliberately independent of the entrovol implementation: binning is a naive
O(N*M) interval-membership scan and the entropy sum uses math.log directly.
Only the random draws share the documented PRNG protocol (PCG64 seeded per
replication, standard normal), so per-replication comparisons are paired.

Run as a script to print the replication band used by the acceptance suite:

    python tools/gaussian_entropy_oracle.py --n 251 --bins 20 --reps 1000
"""

from __future__ import annotations

import argparse
import math

import numpy as np


def naive_entropy(values, m: int) -> float:
    """Entropy in nats of an equal-width min/max histogram, by direct scan."""
    values = list(values)
    lo, hi = min(values), max(values)
    if lo == hi:
        return 0.0
    edges = [lo + (hi - lo) * i / m for i in range(m + 1)]
    edges[0], edges[m] = lo, hi
    counts = [0] * m
    for v in values:
        for i in range(m):
            if (edges[i] <= v < edges[i + 1]) or (i == m - 1 and v == hi):
                counts[i] += 1
                break
        else:
            raise AssertionError(f"value {v} not assigned to any bin")
    n = len(values)
    return -sum(c / n * math.log(c / n) for c in counts if c)


def standard_normal_draws(seed: int, n: int) -> np.ndarray:
    return np.random.Generator(np.random.PCG64(seed)).standard_normal(n)


def replication_entropies(n: int, m: int, seeds) -> list[float]:
    return [naive_entropy(standard_normal_draws(seed, n), m) for seed in seeds]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=251)
    parser.add_argument("--bins", type=int, default=20)
    parser.add_argument("--reps", type=int, default=1000)
    parser.add_argument("--seed0", type=int, default=0)
    args = parser.parse_args()

    ents = replication_entropies(args.n, args.bins, range(args.seed0, args.seed0 + args.reps))
    print(f"n={args.n} bins={args.bins} reps={args.reps} seeds={args.seed0}..{args.seed0 + args.reps - 1}")
    print(f"mean {np.mean(ents):.6f}")
    print(f"min  {np.min(ents):.6f}")
    print(f"max  {np.max(ents):.6f}")
    print(f"std  {np.std(ents):.6f}")


if __name__ == "__main__":
    main()
