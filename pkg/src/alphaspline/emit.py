"""CSV and SVG writers for :class:`SampleSeries`; output is byte-stable."""

from __future__ import annotations

import csv
import io
import math
from xml.sax.saxutils import escape

from .sampling import SampleSeries

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)  # fmt: skip

WIDTH, HEIGHT = 800, 500
MARGIN = 40
LEGEND_WIDTH = 170


def fmt17(value: float) -> str:
    return format(value, ".17g")


def emit_csv(series: SampleSeries) -> bytes:
    """Header row then one row per sample, 17 significant digits, ``\\n`` line ends."""
    if len(series) == 0:
        raise ValueError("empty series")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([series.x_name, *series.names])
    cols = list(series.columns.values())
    for r, x in enumerate(series.xs):
        writer.writerow([fmt17(x), *(fmt17(c[r]) for c in cols)])
    return buf.getvalue().encode("ascii")


def parse_csv(data: bytes) -> SampleSeries:
    rows = list(csv.reader(io.StringIO(data.decode("ascii"))))
    if len(rows) < 2:
        raise ValueError("CSV holds no samples")
    header, body = rows[0], rows[1:]
    xs = [float(r[0]) for r in body]
    cols = {name: [float(r[c + 1]) for r in body] for c, name in enumerate(header[1:])}
    return SampleSeries(xs, cols, x_name=header[0])


def _bounds(values):
    finite = [v for v in values if math.isfinite(v)]
    if not finite:
        return -1.0, 1.0
    lo, hi = min(finite), max(finite)
    if lo == hi:
        pad = max(1.0, abs(lo)) * 0.5
        return lo - pad, hi + pad
    pad = 0.04 * (hi - lo)
    return lo - pad, hi + pad


def emit_svg(series: SampleSeries, style: str = "graph", title: str | None = None) -> bytes:
    """Plot the series as polylines.

    ``graph`` draws every column against the abscissae.  ``parametric`` pairs
    consecutive columns as ``(x, y)`` traces, as used for planar curves.
    """
    if len(series) == 0:
        raise ValueError("empty series")
    names = series.names
    if style == "graph":
        traces = [(name, list(series.xs), list(series.columns[name])) for name in names]
    elif style == "parametric":
        if len(names) % 2:
            raise ValueError("parametric style needs an even number of columns")
        traces = []
        for a, b in zip(names[::2], names[1::2]):
            label = a[1:] if a.startswith("x") else a
            label = label.strip("[]") or "curve"
            traces.append((label, list(series.columns[a]), list(series.columns[b])))
    else:
        raise ValueError(f"unknown SVG style {style!r}")

    x_lo, x_hi = _bounds([v for _, xs, _ in traces for v in xs])
    y_lo, y_hi = _bounds([v for _, _, ys in traces for v in ys])
    plot_w = WIDTH - 2 * MARGIN - LEGEND_WIDTH
    plot_h = HEIGHT - 2 * MARGIN

    def px(x):
        return MARGIN + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y):
        return HEIGHT - MARGIN - (y - y_lo) / (y_hi - y_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#999999" stroke-width="1"/>',
    ]
    if title:
        out.append(f'<text x="{MARGIN}" y="{MARGIN - 12}" font-family="sans-serif" '
                   f'font-size="14">{escape(title)}</text>')
    out.append(f'<text x="{MARGIN}" y="{HEIGHT - 12}" font-family="sans-serif" font-size="11">'
               f'{escape(series.x_name if style == "graph" else "x")}: [{x_lo:.4g}, {x_hi:.4g}]  '
               f'y: [{y_lo:.4g}, {y_hi:.4g}]</text>')
    for idx, (label, xs, ys) in enumerate(traces):
        color = PALETTE[idx % len(PALETTE)]
        pts = " ".join(f"{px(x):.3f},{py(y):.3f}" for x, y in zip(xs, ys) if math.isfinite(y))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                   f'points="{pts}"><title>{escape(label)}</title></polyline>')
    lx = WIDTH - MARGIN - LEGEND_WIDTH + 15
    for idx, (label, _, _) in enumerate(traces):
        color = PALETTE[idx % len(PALETTE)]
        ly = MARGIN + 14 + 16 * idx
        out.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 20}" y2="{ly - 4}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly}" font-family="sans-serif" '
                   f'font-size="11">{escape(label)}</text>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
