"""Core time-series containers: daily closing prices and daily log-returns."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import date

import numpy as np

from .errors import DuplicateDate, EmptySeries, EmptySlice, TooShort


@dataclass(frozen=True)
class PriceSeries:
    """Ordered daily closing prices for one asset.

    Invariants (enforced on construction): dates strictly increasing,
    every close positive and finite.
    """

    symbol: str
    dates: tuple[date, ...]
    closes: tuple[float, ...]

    def __post_init__(self):
        if len(self.dates) != len(self.closes):
            raise ValueError("dates and closes must have equal length")
        if len(self.dates) == 0:
            raise EmptySeries(f"{self.symbol}: no price points")
        for d_prev, d_next in zip(self.dates, self.dates[1:]):
            if d_next == d_prev:
                raise DuplicateDate(d_next)
            if d_next < d_prev:
                raise ValueError(f"{self.symbol}: dates not increasing at {d_next}")
        for d, c in zip(self.dates, self.closes):
            if not math.isfinite(c) or c <= 0.0:
                raise ValueError(f"{self.symbol}: non-positive close {c} on {d}")

    def __len__(self) -> int:
        return len(self.dates)

    @property
    def start(self) -> date:
        return self.dates[0]

    @property
    def end(self) -> date:
        return self.dates[-1]

    def slice(self, start: date, end: date) -> "PriceSeries":
        """Sub-series with start <= date <= end (inclusive both ends)."""
        if start > end:
            raise ValueError(f"start {start} after end {end}")
        picked = [(d, c) for d, c in zip(self.dates, self.closes) if start <= d <= end]
        if not picked:
            raise EmptySlice(f"{self.symbol}: no points in [{start}, {end}]")
        dates, closes = zip(*picked)
        return PriceSeries(self.symbol, tuple(dates), tuple(closes))

    def to_csv(self) -> str:
        lines = ["Date,Close"]
        lines += [f"{d.isoformat()},{c!r}" for d, c in zip(self.dates, self.closes)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReturnSeries:
    """Ordered daily returns; each value is stamped with the later day's date."""

    symbol: str
    dates: tuple[date, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.dates) != len(self.values):
            raise ValueError("dates and values must have equal length")
        for d_prev, d_next in zip(self.dates, self.dates[1:]):
            if d_next <= d_prev:
                raise ValueError(f"{self.symbol}: return dates not increasing at {d_next}")
        for v in self.values:
            if not math.isfinite(v):
                raise ValueError(f"{self.symbol}: non-finite return {v}")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def n(self) -> int:
        return len(self.values)

    def to_numpy(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


def log_returns(prices: PriceSeries, mode: str = "log") -> ReturnSeries:
    """Daily returns of a price series.

    mode="log" (canonical): value on day i is ln(P_i / P_{i-1}).
    mode="simple": (P_i - P_{i-1}) / P_{i-1}, for sensitivity checks; the two
    agree only to first order.
    """
    if len(prices) < 2:
        raise TooShort(f"{prices.symbol}: need at least 2 prices, got {len(prices)}")
    if mode not in ("log", "simple"):
        raise ValueError(f"unknown return mode {mode!r}")
    closes = prices.closes
    if mode == "log":
        values = tuple(math.log(closes[i] / closes[i - 1]) for i in range(1, len(closes)))
    else:
        values = tuple((closes[i] - closes[i - 1]) / closes[i - 1] for i in range(1, len(closes)))
    return ReturnSeries(prices.symbol, prices.dates[1:], values)
