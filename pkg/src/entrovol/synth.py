"""Seeded synthetic price/return generation for simulation oracles.

All randomness comes from numpy's PCG64 bit generator seeded explicitly,
so identical specs reproduce identical series on every platform. Synthetic
calendars use consecutive weekdays (no holiday calendar).
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, timedelta

import numpy as np

from .errors import InvalidSpec
from .series import PriceSeries


@dataclass(frozen=True)
class SynthSpec:
    """Parameters for a synthetic return/price generator.

    kind="gaussian" uses n/sigma; kind="regime_switch" uses n1/n2 and
    sigma1/sigma2 (first n1 returns at sigma1, the next n2 at sigma2).
    """

    kind: str
    seed: int
    n: int | None = None
    n1: int | None = None
    n2: int | None = None
    mu: float = 0.0
    sigma: float | None = None
    sigma1: float | None = None
    sigma2: float | None = None
    start_date: date = date(2021, 1, 4)
    p0: float = 100.0

    def validate(self) -> None:
        if self.p0 <= 0:
            raise InvalidSpec(f"p0 must be positive, got {self.p0}")
        if self.kind == "gaussian":
            if self.n is None or self.n < 2:
                raise InvalidSpec(f"gaussian spec needs n >= 2, got {self.n}")
            if self.sigma is None or self.sigma <= 0:
                raise InvalidSpec(f"gaussian spec needs sigma > 0, got {self.sigma}")
        elif self.kind == "regime_switch":
            if self.n1 is None or self.n2 is None or self.n1 < 2 or self.n2 < 2:
                raise InvalidSpec(f"regime_switch spec needs n1, n2 >= 2, got {self.n1}, {self.n2}")
            if self.sigma1 is None or self.sigma1 <= 0 or self.sigma2 is None or self.sigma2 <= 0:
                raise InvalidSpec(
                    f"regime_switch spec needs sigma1, sigma2 > 0, got {self.sigma1}, {self.sigma2}"
                )
        else:
            raise InvalidSpec(f"unknown kind {self.kind!r}")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gaussian_returns(spec: SynthSpec) -> np.ndarray:
    """n i.i.d. pseudo-normal returns with mean mu and std sigma."""
    spec.validate()
    if spec.kind != "gaussian":
        raise InvalidSpec(f"gaussian_returns needs kind='gaussian', got {spec.kind!r}")
    z = _rng(spec.seed).standard_normal(spec.n)
    return spec.mu + spec.sigma * z


def regime_switch_returns(spec: SynthSpec) -> np.ndarray:
    """n1 returns at sigma1 followed by n2 at sigma2, one draw stream."""
    spec.validate()
    if spec.kind != "regime_switch":
        raise InvalidSpec(f"regime_switch_returns needs kind='regime_switch', got {spec.kind!r}")
    z = _rng(spec.seed).standard_normal(spec.n1 + spec.n2)
    scale = np.concatenate([np.full(spec.n1, spec.sigma1), np.full(spec.n2, spec.sigma2)])
    return spec.mu + scale * z


def regime_switch_series(spec: SynthSpec) -> PriceSeries:
    """Price series with a volatility regime switch after n1 returns."""
    return to_prices(regime_switch_returns(spec), spec.p0, spec.start_date, symbol=f"SYN{spec.seed}")


def trading_days(start: date, count: int) -> tuple[date, ...]:
    """count consecutive weekdays, starting at start (rolled to a weekday)."""
    days = []
    d = start
    while len(days) < count:
        if d.weekday() < 5:
            days.append(d)
        d += timedelta(days=1)
    return tuple(days)


def to_prices(returns, p0: float, start_date: date, symbol: str = "SYN") -> PriceSeries:
    """Exponentiate log-returns cumulatively from p0 onto consecutive weekdays."""
    if p0 <= 0:
        raise InvalidSpec(f"p0 must be positive, got {p0}")
    arr = np.asarray(returns, dtype=np.float64)
    closes = p0 * np.exp(np.concatenate([[0.0], np.cumsum(arr)]))
    dates = trading_days(start_date, len(closes))
    return PriceSeries(symbol, dates, tuple(float(c) for c in closes))


def switch_date(spec: SynthSpec) -> date:
    """Date of the first price produced by a sigma2-regime return.

    Splitting a regime_switch_series at this date puts only sigma1 returns
    in the before window and only sigma2 returns in the after window (the
    straddling return is excluded by the split convention).
    """
    spec.validate()
    if spec.kind != "regime_switch":
        raise InvalidSpec("switch_date applies to regime_switch specs")
    return trading_days(spec.start_date, spec.n1 + spec.n2 + 1)[spec.n1 + 1]
