"""Rendering of comparison tables, histograms and window scans.

All renderers are pure functions of their inputs: identical inputs produce
byte-identical text, CSV, JSON and SVG output. SVG is generated directly on
a fixed 960x540 canvas, with the effective configuration embedded as an XML
comment, so no plotting dependency is needed.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .errors import EmptyScan
from .event_study import ComparisonRow, ComparisonTable, WindowScanResult
from .measures import Histogram

SCHEMA_VERSION = 1

#: default before/after plot colors
DEFAULT_COLORS = {"before": "#1f77b4", "after": "#ff7f0e"}

_CANVAS_W, _CANVAS_H = 960, 540
_MARGIN = {"left": 70, "right": 30, "top": 50, "bottom": 50}


@dataclass(frozen=True)
class ReportBundle:
    """Everything one analysis run produces, plus the configuration echo
    needed to reproduce every number in it."""

    table: ComparisonTable
    histograms: dict[tuple[str, str], Histogram] = field(default_factory=dict)
    scans: tuple[WindowScanResult, ...] = ()
    config_echo: dict = field(default_factory=dict)


# --- number formatting -------------------------------------------------------

def _disp(x: float | None) -> str:
    """Display rounding used by the text/csv formats: three decimals."""
    return "" if x is None else f"{x:.3f}"


def _num(x: float) -> str:
    """Deterministic full-precision float formatting for SVG coordinates."""
    return f"{x:.6g}"


_COLUMNS = (
    "symbol", "name", "std_before", "std_after", "std_pct_diff",
    "entropy_before", "entropy_after", "entropy_pct_diff", "group", "flags",
)


def _row_cells(row: ComparisonRow) -> list[str]:
    return [
        row.symbol,
        row.full_name,
        _disp(row.before.std if row.before else None),
        _disp(row.after.std if row.after else None),
        _disp(row.std_pct_diff),
        _disp(row.before.entropy.value if row.before else None),
        _disp(row.after.entropy.value if row.after else None),
        _disp(row.entropy_pct_diff),
        row.group,
        " ".join(row.flags),
    ]


def _row_json(row: ComparisonRow) -> dict:
    def side(ms):
        if ms is None:
            return None
        return {"std": ms.std, "entropy": ms.entropy.value, "unit": ms.entropy.unit,
                "n": ms.n, "m": ms.m}

    return {
        "symbol": row.symbol,
        "name": row.full_name,
        "group": row.group,
        "before": side(row.before),
        "after": side(row.after),
        "std_pct_diff": row.std_pct_diff,
        "entropy_pct_diff": row.entropy_pct_diff,
        "flags": list(row.flags),
        "display": dict(zip(_COLUMNS, _row_cells(row))),
    }


def render_table(table: ComparisonTable, format: str = "text") -> str:
    """Render a ComparisonTable as text, csv or json.

    Text and CSV round to three decimals; JSON carries full precision plus
    the rounded display strings.
    """
    all_rows = [table.index_row, *table.rows]
    if format == "csv":
        lines = [",".join(_COLUMNS)]
        lines += [",".join(_row_cells(r)) for r in all_rows]
        return "\n".join(lines) + "\n"
    if format == "text":
        cells = [list(_COLUMNS)] + [_row_cells(r) for r in all_rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(_COLUMNS))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
        lines.insert(1, "-" * len(lines[0]))
        return "\n".join(lines) + "\n"
    if format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "event_date": table.event_date.isoformat(),
            "m": table.m,
            "base": table.base,
            "index": _row_json(table.index_row),
            "rows": [_row_json(r) for r in table.rows],
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown table format {format!r}")


# --- SVG ---------------------------------------------------------------------

def _svg_header(title: str, metadata: dict | None) -> list[str]:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_CANVAS_W}" height="{_CANVAS_H}" '
        f'viewBox="0 0 {_CANVAS_W} {_CANVAS_H}">',
    ]
    if metadata:
        blob = json.dumps(metadata, sort_keys=True).replace("--", "- -")
        parts.append(f"<!-- config: {blob} -->")
    parts.append(f'<rect width="{_CANVAS_W}" height="{_CANVAS_H}" fill="white"/>')
    if title:
        parts.append(
            f'<text x="{_CANVAS_W / 2:.0f}" y="28" text-anchor="middle" '
            f'font-family="sans-serif" font-size="18">{_escape(title)}</text>'
        )
    return parts


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _axes(x_lo, x_hi, y_lo, y_hi, x_label, y_label) -> tuple[list[str], callable, callable]:
    left, right = _MARGIN["left"], _CANVAS_W - _MARGIN["right"]
    top, bottom = _MARGIN["top"], _CANVAS_H - _MARGIN["bottom"]

    def sx(x):
        return left + (x - x_lo) / (x_hi - x_lo) * (right - left)

    def sy(y):
        return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top)

    parts = [
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="black"/>',
    ]
    for i in range(5):
        xv = x_lo + (x_hi - x_lo) * i / 4
        yv = y_lo + (y_hi - y_lo) * i / 4
        parts.append(
            f'<text x="{_num(sx(xv))}" y="{bottom + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{_num(xv)}</text>'
        )
        parts.append(
            f'<text x="{left - 8}" y="{_num(sy(yv) + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{_num(yv)}</text>'
        )
    parts.append(
        f'<text x="{(left + right) / 2:.0f}" y="{_CANVAS_H - 10}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{_escape(x_label)}</text>'
    )
    parts.append(
        f'<text x="16" y="{(top + bottom) / 2:.0f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 16 {(top + bottom) / 2:.0f})">{_escape(y_label)}</text>'
    )
    return parts, sx, sy


def render_histogram_svg(
    h: Histogram,
    overlay: Histogram | None = None,
    title: str = "",
    metadata: dict | None = None,
    colors: dict[str, str] = DEFAULT_COLORS,
) -> str:
    """Standalone SVG bar chart of one histogram, optionally overlaid with a
    second (before/after comparison). One bar per bin, empty bins included."""
    hists = [(h, colors["before"], "before")]
    if overlay is not None:
        hists.append((overlay, colors["after"], "after"))

    x_lo = min(hh.edges[0] for hh, _, _ in hists)
    x_hi = max(hh.edges[-1] for hh, _, _ in hists)
    if x_lo == x_hi:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    y_hi = max(max(hh.probabilities) for hh, _, _ in hists) * 1.05

    parts = _svg_header(title, metadata)
    axes, sx, sy = _axes(x_lo, x_hi, 0.0, y_hi, "return", "probability")
    bottom = _CANVAS_H - _MARGIN["bottom"]
    for hh, color, side in hists:
        opacity = "0.65" if overlay is not None else "1"
        for i, p in enumerate(hh.probabilities):
            lo_edge, hi_edge = hh.edges[i], hh.edges[i + 1]
            if lo_edge == hi_edge:  # degenerate single-bin case
                lo_edge, hi_edge = lo_edge - 0.25, hi_edge + 0.25
            x = sx(lo_edge)
            w = max(sx(hi_edge) - x, 0.0)
            y = sy(p)
            parts.append(
                f'<rect class="bar {side}" x="{_num(x)}" y="{_num(y)}" width="{_num(w)}" '
                f'height="{_num(bottom - y)}" fill="{color}" fill-opacity="{opacity}" '
                f'stroke="black" stroke-width="0.5"/>'
            )
    parts.extend(axes)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_scan_plot(
    scans: list[WindowScanResult] | tuple[WindowScanResult, ...],
    title: str = "",
    metadata: dict | None = None,
    colors: dict[str, str] = DEFAULT_COLORS,
) -> str:
    """SVG line plot of entropy versus window length, one polyline per scan."""
    scans = [s for s in scans if s.points]
    if not scans:
        raise EmptyScan("no scan points to plot")

    xs = [length for s in scans for length, _ in s.points]
    ys = [e.value for s in scans for _, e in s.points]
    x_lo, x_hi = min(xs), max(xs)
    if x_lo == x_hi:
        x_lo, x_hi = x_lo - 1, x_hi + 1
    y_span = max(ys) - min(ys)
    pad = 0.05 * y_span if y_span else 0.05 * max(abs(max(ys)), 1.0)
    y_lo, y_hi = min(ys) - pad, max(ys) + pad

    parts = _svg_header(title, metadata)
    axes, sx, sy = _axes(x_lo, x_hi, y_lo, y_hi, "window length (trading days)", "entropy")
    parts.extend(axes)
    for idx, s in enumerate(scans):
        color = colors.get(s.side, "#555555")
        pts = [(sx(length), sy(e.value)) for length, e in s.points]
        if len(pts) > 1:
            path = " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)
            parts.append(
                f'<polyline class="scan {s.side}" points="{path}" fill="none" '
                f'stroke="{color}" stroke-width="2"/>'
            )
        for x, y in pts:
            parts.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="3.5" fill="{color}"/>')
        ly = _MARGIN["top"] + 16 + 18 * idx
        lx = _CANVAS_W - _MARGIN["right"] - 120
        parts.append(f'<rect x="{lx}" y="{ly - 9}" width="12" height="12" fill="{color}"/>')
        parts.append(
            f'<text x="{lx + 18}" y="{ly + 1}" font-family="sans-serif" '
            f'font-size="12">{_escape(s.side)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# --- bundle writing ----------------------------------------------------------

def write_report_bundle(bundle: ReportBundle, output_directory) -> dict:
    """Write every artifact of a bundle plus a manifest with content hashes.

    Returns the manifest dict. File contents depend only on the bundle, so
    writing the same bundle twice yields identical hashes.
    """
    from pathlib import Path

    out = Path(output_directory)
    out.mkdir(parents=True, exist_ok=True)

    meta = bundle.config_echo or None
    files: dict[str, str] = {}
    for fmt, ext in (("text", "txt"), ("csv", "csv"), ("json", "json")):
        files[f"table.{ext}"] = render_table(bundle.table, fmt)
    for (symbol, side), hist in sorted(bundle.histograms.items()):
        files[f"hist_{symbol}_{side}.csv"] = hist.to_csv()
        files[f"hist_{symbol}_{side}.svg"] = render_histogram_svg(
            hist, title=f"{symbol} ({side})", metadata=meta
        )
    if bundle.scans:
        files["scan.svg"] = render_scan_plot(bundle.scans, title="entropy window scan", metadata=meta)
        scan_doc = {
            "schema_version": SCHEMA_VERSION,
            "scans": [
                {
                    "side": s.side,
                    "skipped": list(s.skipped),
                    "points": [
                        {"window_length": length, "entropy": e.value, "unit": e.unit}
                        for length, e in s.points
                    ],
                }
                for s in bundle.scans
            ],
        }
        files["scan.json"] = json.dumps(scan_doc, indent=2, sort_keys=True) + "\n"
    files["config.json"] = json.dumps(bundle.config_echo, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    manifest = {
        "schema_version": SCHEMA_VERSION,
        "files": [
            {
                "path": name,
                "bytes": len(content.encode("utf-8")),
                "sha256": hashlib.sha256(content.encode("utf-8")).hexdigest(),
            }
            for name, content in sorted(files.items())
        ],
    }
    try:
        for name, content in files.items():
            (out / name).write_text(content, encoding="utf-8")
        (out / "manifest.json").write_text(
            json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    except OSError as exc:
        raise OSError(f"failed writing report to {out}: {exc}") from exc
    return manifest
