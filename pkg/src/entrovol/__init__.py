"""entrovol: entropy- and standard-deviation-based volatility analysis of
financial time series around shock events."""

from .errors import EntrovolError
from .event_study import (
    ComparisonRow,
    ComparisonTable,
    EventSplit,
    WindowScanResult,
    compare_universe,
    split_at_event,
    window_scan,
)
from .ingest import (
    AssetMeta,
    AssetUniverse,
    default_universe,
    fetch_history,
    load_universe,
    parse_price_csv,
    slice_by_dates,
)
from .measures import (
    EntropyValue,
    Histogram,
    MeasureSet,
    build_histogram,
    measure_set,
    pct_difference,
    shannon_entropy,
    std_dev,
)
from .report import ReportBundle, render_histogram_svg, render_scan_plot, render_table, write_report_bundle
from .series import PriceSeries, ReturnSeries, log_returns
from .synth import SynthSpec, gaussian_returns, regime_switch_series, to_prices

__version__ = "0.1.0"
