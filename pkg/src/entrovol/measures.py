"""Volatility measures: binned return distributions, Shannon entropy,
sample standard deviation and symmetric percentage differences.

Binning convention: M equal-width bins spanning [min(values), max(values)];
each bin is half-open [lo, hi) except the last, which is closed so the
maximum lands in bin M. Because the bin range follows the sample min/max,
bin occupancy (and hence the entropy) is invariant under affine maps of the
input values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EmptyInput, NonPositiveInput, TooShort

UNIT_BY_BASE = {math.e: "nats", 2.0: "shannons", 10.0: "hartleys"}

#: tolerated float overshoot of the H <= log(M) bound before it is an error
_BOUND_SLACK = 1e-9


def _unit_for(base: float) -> str:
    try:
        return UNIT_BY_BASE[float(base)]
    except KeyError:
        raise ValueError(f"unsupported log base {base!r}; use e, 2 or 10") from None


@dataclass(frozen=True)
class Histogram:
    """Discrete probability density function of a sample.

    edges has m+1 entries, strictly increasing except in the degenerate
    zero-range case (single bin, both edges equal to the sample value).
    """

    edges: tuple[float, ...]
    counts: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.edges) != len(self.counts) + 1:
            raise ValueError("edges must have one more entry than counts")
        if sum(self.counts) != self.n:
            raise ValueError("counts must sum to n")
        if len(self.counts) > 1:
            for lo, hi in zip(self.edges, self.edges[1:]):
                if not hi > lo:
                    raise ValueError("edges must be strictly increasing")

    @property
    def m(self) -> int:
        return len(self.counts)

    @property
    def probabilities(self) -> tuple[float, ...]:
        return tuple(c / self.n for c in self.counts)

    def to_csv(self) -> str:
        lines = ["bin_lo,bin_hi,count,probability"]
        for i, c in enumerate(self.counts):
            lines.append(f"{self.edges[i]!r},{self.edges[i + 1]!r},{c},{c / self.n!r}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EntropyValue:
    """Shannon entropy with unit metadata; base e/2/10 -> nats/shannons/hartleys."""

    value: float
    base: float

    def __post_init__(self):
        if self.value < 0.0:
            raise ValueError(f"entropy cannot be negative, got {self.value}")
        _unit_for(self.base)

    @property
    def unit(self) -> str:
        return _unit_for(self.base)

    def in_base(self, base: float) -> "EntropyValue":
        factor = math.log(self.base) / math.log(base)
        return EntropyValue(self.value * factor, float(base))


@dataclass(frozen=True)
class MeasureSet:
    """Standard deviation and entropy of one return window."""

    std: float
    entropy: EntropyValue
    n: int
    m: int

    def __post_init__(self):
        if self.std < 0.0:
            raise ValueError("std cannot be negative")
        if self.n < 2:
            raise ValueError("need at least 2 data points")
        if self.m < 1:
            raise ValueError("need at least 1 bin")


def build_histogram(values, m: int) -> Histogram:
    """Equal-width histogram with m bins over [min(values), max(values)].

    Zero-range input degenerates to a single occupied bin.
    """
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("values must be one-dimensional")
    if arr.size == 0:
        raise EmptyInput("cannot bin an empty sample")
    if not np.isfinite(arr).all():
        raise ValueError("values must be finite")
    if m < 1:
        raise ValueError(f"bin count must be >= 1, got {m}")
    lo = float(arr.min())
    hi = float(arr.max())
    if lo == hi:
        return Histogram(edges=(lo, hi), counts=(arr.size,), n=arr.size)
    edges = lo + (hi - lo) * np.arange(m + 1, dtype=np.float64) / m
    edges[0] = lo
    edges[m] = hi
    counts = kernels.bin_counts(arr, edges)
    return Histogram(edges=tuple(edges.tolist()), counts=tuple(int(c) for c in counts), n=arr.size)


def shannon_entropy(h: Histogram, base: float = math.e) -> EntropyValue:
    """H = -sum over occupied bins of p_i * log_base(p_i); empty bins contribute 0.

    The result is checked against the 0 <= H <= log_base(M) bound on every
    computation.
    """
    _unit_for(base)
    acc = 0.0
    # summing over sorted counts makes the result independent of bin order,
    # so affine maps (including sign flips) leave the value bit-identical
    for c in sorted(h.counts):
        if c:
            p = c / h.n
            acc -= p * math.log(p)
    value = acc / math.log(base) if base != math.e else acc
    bound = math.log(h.m) / math.log(base)
    if value > bound + _BOUND_SLACK:
        raise AssertionError(f"entropy {value} exceeds log_{base}({h.m}) = {bound}")
    value = max(0.0, min(value, bound))
    return EntropyValue(value=value, base=float(base))


def std_dev(values) -> float:
    """Sample standard deviation with N-1 denominator."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.size < 2:
        raise TooShort(f"need at least 2 values, got {arr.size}")
    return kernels.sample_std(arr)


def pct_difference(a: float, b: float) -> float:
    """Symmetric percentage difference: 100 * |a - b| / ((a + b) / 2)."""
    if not (a > 0.0 and b > 0.0):
        raise NonPositiveInput(f"pct_difference needs positive inputs, got {a}, {b}")
    return 100.0 * abs(a - b) / ((a + b) / 2.0)


def measure_set(values, m: int = 20, base: float = math.e) -> MeasureSet:
    """Standard deviation plus binned entropy of one sample."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.size < 2:
        raise TooShort(f"need at least 2 values, got {arr.size}")
    hist = build_histogram(arr, m)
    return MeasureSet(
        std=std_dev(arr),
        entropy=shannon_entropy(hist, base),
        n=int(arr.size),
        m=m,
    )
