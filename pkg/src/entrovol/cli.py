"""Command-line interface.

Subcommands: analyze (before/after comparison table plus histograms and
index entropy scans), scan (variable-window entropy sweep), hist (return
distribution), synth (seeded synthetic price CSVs), fetch (HTTP download).

Configuration precedence: flags > ENTROVOL_* environment variables >
key=value config file (--config) > built-in defaults. Defaults reproduce
the reference methodology: one-year span, 20 bins, natural log (nats).
"""

from __future__ import annotations

import argparse
import hashlib
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import timedelta
from pathlib import Path

from . import event_study, ingest, report, synth
from .errors import EntrovolError
from .series import PriceSeries

_BASES = {"e": math.e, "2": 2.0, "10": 10.0}

_DEFAULTS = {
    "span_days": "365",
    "bins": "20",
    "base": "e",
    "mode": "log",
    "jobs": "4",
    "endpoint": "",
}


def _load_config_file(path: str | None) -> dict[str, str]:
    cfg: dict[str, str] = {}
    if not path:
        return cfg
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise EntrovolError(f"{path}:{line_no}: expected key=value, got {line!r}")
        cfg[key.strip()] = value.strip()
    return cfg


def _resolve(name: str, flag_value, cfg: dict[str, str]):
    """flags > environment > config file > defaults."""
    if flag_value is not None:
        return str(flag_value)
    env = os.environ.get(f"ENTROVOL_{name.upper()}")
    if env is not None:
        return env
    if name in cfg:
        return cfg[name]
    return _DEFAULTS.get(name)


def _parse_base(label: str) -> float:
    if label not in _BASES:
        raise EntrovolError(f"log base must be one of e, 2, 10; got {label!r}")
    return _BASES[label]


def _load_price_dir(data_dir: str, symbols: list[str], jobs: int) -> dict[str, PriceSeries]:
    root = Path(data_dir)
    if not root.is_dir():
        raise EntrovolError(f"data directory {data_dir!r} does not exist")

    def load(symbol: str) -> tuple[str, PriceSeries | None]:
        path = root / f"{symbol}.csv"
        if not path.is_file():
            return symbol, None
        return symbol, ingest.parse_price_csv(path.read_text(encoding="utf-8"), symbol)

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        loaded = list(pool.map(load, symbols))
    return {sym: series for sym, series in loaded if series is not None}


def _universe_from(path: str | None) -> tuple[ingest.AssetUniverse, str]:
    if path:
        text = Path(path).read_text(encoding="utf-8")
        return ingest.load_universe(text), hashlib.sha256(text.encode("utf-8")).hexdigest()
    from importlib import resources

    text = resources.files("entrovol").joinpath("data/wig20_universe.csv").read_text("utf-8")
    return ingest.load_universe(text), hashlib.sha256(text.encode("utf-8")).hexdigest()


def _default_lengths(pool_size: int) -> list[int]:
    """Sweep from 20 trading days to the full window in steps of 10."""
    if pool_size < 2:
        return []
    lengths = [length for length in range(20, pool_size, 10) if length >= 2]
    if not lengths or lengths[-1] != pool_size:
        lengths.append(pool_size)
    return [length for length in lengths if length <= pool_size]


# --- subcommand implementations ----------------------------------------------

def _cmd_analyze(args, cfg) -> int:
    event_date = ingest.parse_date(args.event_date)
    span_days = int(_resolve("span_days", args.span_days, cfg))
    bins = int(_resolve("bins", args.bins, cfg))
    base_label = _resolve("base", args.base, cfg)
    base = _parse_base(base_label)
    mode = _resolve("mode", args.mode, cfg)
    jobs = int(_resolve("jobs", args.jobs, cfg))
    span = timedelta(days=span_days)

    universe, universe_sha = _universe_from(args.universe)
    symbols = [universe.index_symbol] + [a.symbol for a in universe.assets]
    store = _load_price_dir(args.data, symbols, jobs)
    table = event_study.compare_universe(universe, store, event_date, span, bins, base, mode)

    from .measures import build_histogram

    histograms = {}
    scans = []
    for symbol, series in sorted(store.items()):
        try:
            split = event_study.split_at_event(series, event_date, span, mode)
        except EntrovolError:
            continue
        if len(split.before) >= 2:
            histograms[(symbol, "before")] = build_histogram(split.before.to_numpy(), bins)
        if len(split.after) >= 2:
            histograms[(symbol, "after")] = build_histogram(split.after.to_numpy(), bins)
    index_series = store[universe.index_symbol]
    for side in ("before", "after"):
        if side == "before":
            pool_size = sum(1 for d in index_series.dates if event_date - span <= d < event_date)
        else:
            pool_size = sum(1 for d in index_series.dates if event_date <= d < event_date + span)
        lengths = _default_lengths(pool_size)
        if lengths:
            scans.append(
                event_study.window_scan(index_series, event_date, lengths, side, bins, base, mode)
            )

    config_echo = {
        "command": "analyze",
        "event_date": event_date.isoformat(),
        "span_days": span_days,
        "bins": bins,
        "base": base_label,
        "mode": mode,
        "universe_sha256": universe_sha,
        "symbols": sorted(store),
    }
    bundle = report.ReportBundle(table, histograms, tuple(scans), config_echo)
    manifest = report.write_report_bundle(bundle, args.out)
    print(f"wrote {len(manifest['files']) + 1} files to {args.out}")
    return 0


def _cmd_scan(args, cfg) -> int:
    event_date = ingest.parse_date(args.event_date)
    bins = int(_resolve("bins", args.bins, cfg))
    base_label = _resolve("base", args.base, cfg)
    base = _parse_base(base_label)
    mode = _resolve("mode", args.mode, cfg)
    span_days = int(_resolve("span_days", args.span_days, cfg))

    path = Path(args.data)
    symbol = args.symbol or path.stem
    series = ingest.parse_price_csv(path.read_text(encoding="utf-8"), symbol)

    sides = ("before", "after") if args.side == "both" else (args.side,)
    scans = []
    for side in sides:
        if args.lengths:
            lengths = sorted({int(tok) for tok in args.lengths.split(",")})
        else:
            if side == "before":
                pool = sum(1 for d in series.dates if event_date - timedelta(days=span_days) <= d < event_date)
            else:
                pool = sum(1 for d in series.dates if event_date <= d < event_date + timedelta(days=span_days))
            lengths = _default_lengths(pool)
        if not lengths:
            raise EntrovolError(f"{symbol}: no feasible window lengths on the {side} side")
        scans.append(event_study.window_scan(series, event_date, lengths, side, bins, base, mode))

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    config_echo = {
        "command": "scan",
        "event_date": event_date.isoformat(),
        "bins": bins,
        "base": base_label,
        "mode": mode,
        "symbol": symbol,
    }
    bundle = report.ReportBundle(
        table=_empty_table(event_date, bins, base, symbol),
        histograms={},
        scans=tuple(scans),
        config_echo=config_echo,
    )
    report.write_report_bundle(bundle, out)
    print(f"wrote scan results to {out}")
    return 0


def _empty_table(event_date, bins, base, symbol):
    # scan/hist runs carry no comparison rows; the bundle still needs a table
    from .event_study import ComparisonRow, ComparisonTable

    placeholder = ComparisonRow(symbol, symbol, "constant", None, None, None, None, ("scan_only",))
    return ComparisonTable(event_date, bins, float(base), (), placeholder)


def _cmd_hist(args, cfg) -> int:
    from .measures import build_histogram
    from .series import log_returns

    bins = int(_resolve("bins", args.bins, cfg))
    mode = _resolve("mode", args.mode, cfg)
    span_days = int(_resolve("span_days", args.span_days, cfg))

    path = Path(args.data)
    symbol = args.symbol or path.stem
    series = ingest.parse_price_csv(path.read_text(encoding="utf-8"), symbol)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    if args.event_date:
        event_date = ingest.parse_date(args.event_date)
        split = event_study.split_at_event(series, event_date, timedelta(days=span_days), mode)
        before = build_histogram(split.before.to_numpy(), bins)
        after = build_histogram(split.after.to_numpy(), bins)
        svg = report.render_histogram_svg(
            before, overlay=after, title=f"{symbol} return distribution", metadata={"symbol": symbol}
        )
        (out / f"hist_{symbol}_before.csv").write_text(before.to_csv(), encoding="utf-8")
        (out / f"hist_{symbol}_after.csv").write_text(after.to_csv(), encoding="utf-8")
    else:
        returns = log_returns(series, mode)
        hist = build_histogram(returns.to_numpy(), bins)
        svg = report.render_histogram_svg(
            hist, title=f"{symbol} return distribution", metadata={"symbol": symbol}
        )
        (out / f"hist_{symbol}.csv").write_text(hist.to_csv(), encoding="utf-8")
    (out / f"hist_{symbol}.svg").write_text(svg, encoding="utf-8")
    print(f"wrote histogram for {symbol} to {out}")
    return 0


def _cmd_synth(args, cfg) -> int:
    start_date = ingest.parse_date(args.start_date)
    if args.kind == "gaussian":
        spec = synth.SynthSpec(
            kind="gaussian", seed=args.seed, n=args.n, mu=args.mu, sigma=args.sigma,
            start_date=start_date, p0=args.p0,
        )
        series = synth.to_prices(synth.gaussian_returns(spec), args.p0, start_date, args.symbol)
    else:
        spec = synth.SynthSpec(
            kind="regime_switch", seed=args.seed, n1=args.n1, n2=args.n2, mu=args.mu,
            sigma1=args.sigma1, sigma2=args.sigma2, start_date=start_date, p0=args.p0,
        )
        spec.validate()
        series = synth.to_prices(
            synth.regime_switch_returns(spec), args.p0, start_date, args.symbol
        )
    csv_text = series.to_csv()
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
        print(f"wrote {len(series)} prices to {args.out}")
    else:
        sys.stdout.write(csv_text)
    return 0


def _cmd_fetch(args, cfg) -> int:
    endpoint = _resolve("endpoint", args.endpoint, cfg)
    if not endpoint:
        raise EntrovolError(
            "no fetch endpoint configured (use --endpoint, ENTROVOL_ENDPOINT or a config file)"
        )
    start = ingest.parse_date(args.start)
    end = ingest.parse_date(args.end)
    body = ingest.fetch_history(endpoint, args.symbol, start, end)
    # validate before writing so a broken feed fails loudly
    ingest.parse_price_csv(body, args.symbol)
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
        print(f"wrote {args.symbol} history to {args.out}")
    else:
        sys.stdout.write(body)
    return 0


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entrovol",
        description="Entropy and standard-deviation volatility analysis around shock events.",
    )
    parser.add_argument("--config", help="key=value configuration file")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, event_required=True):
        p.add_argument("--event-date", required=event_required, help="ISO-8601 or MM/DD/YYYY")
        p.add_argument("--span-days", type=int, help="window span in calendar days (default 365)")
        p.add_argument("--bins", type=int, help="histogram bin count (default 20)")
        p.add_argument("--base", choices=sorted(_BASES), help="log base: e, 2 or 10 (default e)")
        p.add_argument("--mode", choices=("log", "simple"), help="return form (default log)")

    p = sub.add_parser("analyze", help="before/after comparison table for a universe")
    common(p)
    p.add_argument("--data", required=True, help="directory of SYMBOL.csv price files")
    p.add_argument("--universe", help="universe file (default: bundled WIG20)")
    p.add_argument("--out", required=True, help="output directory for the report bundle")
    p.add_argument("--jobs", type=int, help="parallel CSV loads (default 4)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("scan", help="entropy over variable window lengths")
    common(p)
    p.add_argument("--data", required=True, help="price CSV file")
    p.add_argument("--symbol", help="ticker (default: file stem)")
    p.add_argument("--side", choices=("before", "after", "both"), default="both")
    p.add_argument("--lengths", help="comma-separated window lengths in trading days")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("hist", help="discrete return distribution of one asset")
    common(p, event_required=False)
    p.add_argument("--data", required=True, help="price CSV file")
    p.add_argument("--symbol", help="ticker (default: file stem)")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_hist)

    p = sub.add_parser("synth", help="generate a seeded synthetic price CSV")
    p.add_argument("--kind", choices=("gaussian", "regime_switch"), default="gaussian")
    p.add_argument("--n", type=int, help="return count (gaussian)")
    p.add_argument("--n1", type=int, help="returns in regime 1")
    p.add_argument("--n2", type=int, help="returns in regime 2")
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--sigma", type=float, help="return std (gaussian)")
    p.add_argument("--sigma1", type=float)
    p.add_argument("--sigma2", type=float)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--start-date", default="2021-01-04")
    p.add_argument("--p0", type=float, default=100.0)
    p.add_argument("--symbol", default="SYN")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("fetch", help="download a price CSV over HTTP")
    p.add_argument("--endpoint", help="URL template with {symbol},{start},{end}")
    p.add_argument("--symbol", required=True)
    p.add_argument("--start", required=True)
    p.add_argument("--end", required=True)
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(func=_cmd_fetch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config_file(args.config)
        return args.func(args, cfg)
    except EntrovolError as exc:
        print(f"entrovol: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"entrovol: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
