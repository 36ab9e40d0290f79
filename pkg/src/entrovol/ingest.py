"""Loading and validation of price histories and the asset universe.

Price CSVs need at least Date and Close columns; extra columns (Open, High,
Low, Volume, ...) are ignored. Dates are accepted as ISO-8601 (YYYY-MM-DD)
or US-style MM/DD/YYYY and always emitted as ISO-8601.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from datetime import date, datetime
from importlib import resources

import requests

from .errors import (
    DuplicateDate,
    DuplicateSymbol,
    EmptySeries,
    HttpStatusError,
    MalformedRow,
    NetworkError,
    ParseError,
    TemplateError,
)
from .series import PriceSeries

GROUPS = ("constant", "introduced", "removed")


def parse_date(text: str) -> date:
    """Parse ISO-8601 or MM/DD/YYYY."""
    text = text.strip()
    for fmt in ("%Y-%m-%d", "%m/%d/%Y"):
        try:
            return datetime.strptime(text, fmt).date()
        except ValueError:
            continue
    raise ValueError(f"unparseable date {text!r}")


def _locate_columns(header: list[str]) -> tuple[int, int] | None:
    """(date_col, close_col) if the row looks like a header, else None."""
    lowered = [h.strip().lower() for h in header]
    if "date" in lowered and "close" in lowered:
        return lowered.index("date"), lowered.index("close")
    # positional fallback: col 0 = date, last col = close; only a header if
    # the close cell does not parse as a number
    try:
        float(header[-1])
        return None
    except (ValueError, IndexError):
        return 0, len(header) - 1


def parse_price_csv(text: str, symbol: str) -> PriceSeries:
    """Parse a price CSV into a validated PriceSeries.

    Rows are sorted by date regardless of input order. Rows with
    non-positive or unparseable closes are hard errors, not skips.
    """
    reader = csv.reader(io.StringIO(text))
    rows = [(i, row) for i, row in enumerate(reader, start=1) if row and any(c.strip() for c in row)]
    if not rows:
        raise EmptySeries(f"{symbol}: empty input")

    first_line, first_row = rows[0]
    cols = _locate_columns(first_row)
    if cols is not None:
        date_col, close_col = cols
        rows = rows[1:]
    else:
        date_col, close_col = 0, len(first_row) - 1
    if not rows:
        raise EmptySeries(f"{symbol}: no data rows")

    points: list[tuple[date, float]] = []
    for line_no, row in rows:
        try:
            d = parse_date(row[date_col])
            c = float(row[close_col])
        except (ValueError, IndexError) as exc:
            raise MalformedRow(line_no, str(exc)) from exc
        if not c > 0.0:
            raise MalformedRow(line_no, f"non-positive close {c}")
        points.append((d, c))

    points.sort(key=lambda p: p[0])
    for (d1, _), (d2, _) in zip(points, points[1:]):
        if d1 == d2:
            raise DuplicateDate(d1)
    dates, closes = zip(*points)
    return PriceSeries(symbol, tuple(dates), tuple(closes))


def slice_by_dates(series: PriceSeries, start: date, end: date) -> PriceSeries:
    """Points with start <= date <= end, inclusive both ends."""
    return series.slice(start, end)


_PLACEHOLDERS = ("{symbol}", "{start}", "{end}")


def fetch_history(
    endpoint_template: str,
    symbol: str,
    start: date,
    end: date,
    retries: int = 3,
    backoff: float = 0.5,
    timeout: float = 30.0,
) -> str:
    """Fetch a raw price CSV body from a configurable HTTP endpoint.

    The template must contain {symbol}, {start} and {end} placeholders.
    Transient failures (connection errors, 5xx) are retried with bounded
    exponential backoff; 4xx statuses fail immediately.
    """
    for ph in _PLACEHOLDERS:
        if ph not in endpoint_template:
            raise TemplateError(f"endpoint template missing {ph}")
    url = endpoint_template.format(symbol=symbol, start=start.isoformat(), end=end.isoformat())

    last_exc: Exception | None = None
    for attempt in range(retries):
        if attempt:
            time.sleep(backoff * 2 ** (attempt - 1))
        try:
            resp = requests.get(url, timeout=timeout)
        except requests.RequestException as exc:
            last_exc = NetworkError(f"{symbol}: {exc}")
            continue
        if resp.status_code == 200:
            return resp.text
        last_exc = HttpStatusError(resp.status_code, url)
        if resp.status_code < 500:
            raise last_exc
    raise last_exc


@dataclass(frozen=True)
class AssetMeta:
    """One index constituent: symbol, display name, membership group/events."""

    symbol: str
    full_name: str
    group: str
    membership_events: tuple[tuple[date, str], ...] = ()

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ParseError(f"{self.symbol}: unknown group {self.group!r}")
        for d1, d2 in zip(self.membership_events, self.membership_events[1:]):
            if d2[0] < d1[0]:
                raise ParseError(f"{self.symbol}: membership events out of order")
        for _, kind in self.membership_events:
            if kind not in ("joined", "left"):
                raise ParseError(f"{self.symbol}: unknown membership event {kind!r}")


@dataclass(frozen=True)
class AssetUniverse:
    assets: tuple[AssetMeta, ...]
    index_symbol: str

    def __post_init__(self):
        seen = set()
        for a in self.assets:
            if a.symbol in seen:
                raise DuplicateSymbol(a.symbol)
            seen.add(a.symbol)

    def __len__(self) -> int:
        return len(self.assets)


def load_universe(text: str) -> AssetUniverse:
    """Parse a universe file.

    Format (CSV, '#' comment lines allowed):
        index_symbol,<TICKER>
        symbol,full_name,group[,event_date:joined|left ...]
    The optional fourth field holds space-separated membership events.
    """
    index_symbol: str | None = None
    assets: list[AssetMeta] = []
    reader = csv.reader(io.StringIO(text))
    for line_no, row in enumerate(reader, start=1):
        if not row or not any(c.strip() for c in row):
            continue
        if row[0].lstrip().startswith("#"):
            continue
        cells = [c.strip() for c in row]
        if cells[0] == "index_symbol":
            if len(cells) != 2 or not cells[1]:
                raise ParseError(f"line {line_no}: bad index_symbol record")
            index_symbol = cells[1]
            continue
        if cells[0] == "symbol":  # optional header row
            continue
        if len(cells) not in (3, 4):
            raise ParseError(f"line {line_no}: expected 3 or 4 fields, got {len(cells)}")
        events: list[tuple[date, str]] = []
        if len(cells) == 4 and cells[3]:
            for token in cells[3].split():
                try:
                    when, _, kind = token.partition(":")
                    events.append((parse_date(when), kind))
                except ValueError as exc:
                    raise ParseError(f"line {line_no}: bad membership event {token!r}") from exc
        assets.append(AssetMeta(cells[0], cells[1], cells[2], tuple(events)))
    if index_symbol is None:
        raise ParseError("universe file has no index_symbol record")
    return AssetUniverse(tuple(assets), index_symbol)


def default_universe() -> AssetUniverse:
    """The bundled WIG20 universe (24 constituents plus the index symbol)."""
    text = resources.files("entrovol").joinpath("data/wig20_universe.csv").read_text("utf-8")
    return load_universe(text)
