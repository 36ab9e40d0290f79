"""Before/after event comparisons and variable-window entropy scans.

Window boundary convention: the event date belongs to the after side.
Returns are computed independently inside each window, so the return that
straddles the event date is excluded from both sides; a window of W trading
days therefore yields W - 1 returns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date, timedelta

from .errors import EmptySlice, InsufficientData, MissingIndexData, NonPositiveInput, NoWindows, TooShort
from .ingest import GROUPS, AssetUniverse
from .measures import EntropyValue, MeasureSet, build_histogram, measure_set, pct_difference, shannon_entropy
from .series import PriceSeries, ReturnSeries, log_returns


@dataclass(frozen=True)
class EventSplit:
    """Return windows before and after an event date.

    A side is flagged truncated when the available data does not cover the
    full requested window (e.g. an asset listed only part-way through it).
    """

    event_date: date
    before: ReturnSeries
    after: ReturnSeries
    before_truncated: bool = False
    after_truncated: bool = False

    def __post_init__(self):
        if self.before.dates and self.before.dates[-1] >= self.event_date:
            raise ValueError("before window reaches the event date")
        if self.after.dates and self.after.dates[0] < self.event_date:
            raise ValueError("after window starts before the event date")


@dataclass(frozen=True)
class ComparisonRow:
    symbol: str
    full_name: str
    group: str
    before: MeasureSet | None
    after: MeasureSet | None
    std_pct_diff: float | None
    entropy_pct_diff: float | None
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class ComparisonTable:
    event_date: date
    m: int
    base: float
    rows: tuple[ComparisonRow, ...]
    index_row: ComparisonRow


@dataclass(frozen=True)
class WindowScanResult:
    """Entropy for a sweep of window lengths on one side of the event."""

    side: str
    points: tuple[tuple[int, EntropyValue], ...]
    skipped: tuple[int, ...] = ()

    def __post_init__(self):
        lengths = [length for length, _ in self.points]
        if lengths != sorted(set(lengths)):
            raise ValueError("window lengths must be strictly increasing")


#: calendar-day slack before a window counts as truncated (weekends/holidays)
_TRUNCATION_SLACK = timedelta(days=7)


def _window_prices(prices: PriceSeries, start: date, end: date) -> PriceSeries | None:
    """Sub-series with start <= date < end, or None when empty."""
    try:
        sub = prices.slice(start, end - timedelta(days=1))
    except EmptySlice:
        return None
    return sub


def _is_truncated(sub: PriceSeries, lo: date, hi: date) -> bool:
    """True when the data misses either window edge by more than the slack."""
    return sub.start > lo + _TRUNCATION_SLACK or sub.end < hi - timedelta(days=1) - _TRUNCATION_SLACK


def split_at_event(
    prices: PriceSeries,
    event_date: date,
    span: timedelta = timedelta(days=365),
    mode: str = "log",
) -> EventSplit:
    """Split a price history into before/after return windows around an event.

    before: event_date - span <= date < event_date
    after:  event_date <= date < event_date + span
    """
    if span <= timedelta(0):
        raise ValueError(f"span must be positive, got {span}")
    window_start = event_date - span
    window_end = event_date + span

    sides = {}
    truncated = {}
    for side, (lo, hi) in (("before", (window_start, event_date)), ("after", (event_date, window_end))):
        sub = _window_prices(prices, lo, hi)
        if sub is None or len(sub) < 2:
            got = 0 if sub is None else len(sub)
            raise InsufficientData(side, f"{prices.symbol}: {got} prices in [{lo}, {hi})")
        sides[side] = log_returns(sub, mode)
        truncated[side] = _is_truncated(sub, lo, hi)
    return EventSplit(
        event_date=event_date,
        before=sides["before"],
        after=sides["after"],
        before_truncated=truncated["before"],
        after_truncated=truncated["after"],
    )


def _side_measures(
    prices: PriceSeries, lo: date, hi: date, m: int, base: float, mode: str
) -> tuple[MeasureSet | None, bool]:
    """(MeasureSet or None, truncated flag) for one window of one asset."""
    sub = _window_prices(prices, lo, hi)
    if sub is None or len(sub) < 3:
        return None, True
    returns = log_returns(sub, mode)
    return measure_set(returns.to_numpy(), m=m, base=base), _is_truncated(sub, lo, hi)


def _make_row(
    symbol: str,
    full_name: str,
    group: str,
    prices: PriceSeries,
    event_date: date,
    span: timedelta,
    m: int,
    base: float,
    mode: str,
) -> ComparisonRow:
    before, before_trunc = _side_measures(prices, event_date - span, event_date, m, base, mode)
    after, after_trunc = _side_measures(prices, event_date, event_date + span, m, base, mode)
    flags = []
    if before is None:
        flags.append("no_before")
    elif before_trunc:
        flags.append("short_before")
    if after is None:
        flags.append("no_after")
    elif after_trunc:
        flags.append("short_after")

    std_pct = entropy_pct = None
    if before is not None and after is not None:
        try:
            std_pct = pct_difference(before.std, after.std)
        except NonPositiveInput:
            flags.append("zero_std")
        try:
            entropy_pct = pct_difference(before.entropy.value, after.entropy.value)
        except NonPositiveInput:
            flags.append("zero_entropy")
    return ComparisonRow(symbol, full_name, group, before, after, std_pct, entropy_pct, tuple(flags))


def compare_universe(
    universe: AssetUniverse,
    price_store: dict[str, PriceSeries],
    event_date: date,
    span: timedelta = timedelta(days=365),
    m: int = 20,
    base: float = math.e,
    mode: str = "log",
) -> ComparisonTable:
    """Before/after measure table for a whole universe plus its index.

    Component symbols without price data are omitted; an asset missing one
    side keeps the row with the absent MeasureSet and no pct columns.
    """
    if universe.index_symbol not in price_store:
        raise MissingIndexData(f"no price data for index {universe.index_symbol!r}")
    index_row = _make_row(
        universe.index_symbol, universe.index_symbol, "constant",
        price_store[universe.index_symbol], event_date, span, m, base, mode,
    )
    rows = [
        _make_row(a.symbol, a.full_name, a.group, price_store[a.symbol], event_date, span, m, base, mode)
        for a in universe.assets
        if a.symbol in price_store
    ]
    rows.sort(key=lambda r: (GROUPS.index(r.group), r.symbol))
    return ComparisonTable(event_date, m, float(base), tuple(rows), index_row)


def window_scan(
    prices: PriceSeries,
    event_date: date,
    lengths: list[int],
    side: str = "before",
    m: int = 20,
    base: float = math.e,
    mode: str = "log",
) -> WindowScanResult:
    """Entropy over windows of varying length anchored at the event date.

    side="before": the last L trading days strictly before the event.
    side="after": the first L trading days at/after the event.
    Each window is rebinned on its own min/max range. Lengths with too few
    available trading days are skipped and reported.
    """
    if side not in ("before", "after"):
        raise ValueError(f"side must be 'before' or 'after', got {side!r}")
    if list(lengths) != sorted(set(lengths)):
        raise ValueError("lengths must be strictly increasing")
    if any(length < 2 for length in lengths):
        raise ValueError("every window length must be >= 2 trading days")

    if side == "before":
        pool = [c for d, c in zip(prices.dates, prices.closes) if d < event_date]
        pool_dates = [d for d in prices.dates if d < event_date]
    else:
        pool = [c for d, c in zip(prices.dates, prices.closes) if d >= event_date]
        pool_dates = [d for d in prices.dates if d >= event_date]

    points: list[tuple[int, EntropyValue]] = []
    skipped: list[int] = []
    for length in lengths:
        if length > len(pool):
            skipped.append(length)
            continue
        if side == "before":
            window = PriceSeries(prices.symbol, tuple(pool_dates[-length:]), tuple(pool[-length:]))
        else:
            window = PriceSeries(prices.symbol, tuple(pool_dates[:length]), tuple(pool[:length]))
        returns = log_returns(window, mode)
        hist = build_histogram(returns.to_numpy(), m)
        points.append((length, shannon_entropy(hist, base)))
    if not points:
        raise NoWindows(f"{prices.symbol}: no feasible window lengths on the {side} side")
    return WindowScanResult(side=side, points=tuple(points), skipped=tuple(skipped))
