"""Standalone SVG line charts with no plotting dependency."""

from __future__ import annotations

import math
from typing import Sequence, TextIO
from xml.sax.saxutils import escape

from .errors import DomainError

COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]

WIDTH, HEIGHT = 800, 500
LEFT, RIGHT, TOP, BOTTOM = 80, 180, 50, 60

Series = tuple[str, Sequence[float], Sequence[float]]


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    """Round tick positions covering [lo, hi]."""
    if hi == lo:
        pad = abs(lo) * 0.1 or 1.0
        lo, hi = lo - pad, hi + pad
    raw = (hi - lo) / max(1, target - 1)
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.floor(lo / step) * step
    ticks = []
    k = 0
    while True:
        t = start + k * step
        ticks.append(round(t, 12))
        if t >= hi - 1e-12 * abs(step):
            break
        k += 1
    return ticks


def _label(v: float) -> str:
    s = f"{v:.6g}"
    return "0" if s == "-0" else s


def render_line_chart(
    series: Sequence[Series],
    title: str,
    sink: TextIO,
    x_label: str = "",
    y_label: str = "",
) -> None:
    """Write an SVG 1.1 document with one polyline per (name, xs, ys) series."""
    if not series:
        raise DomainError("no series to plot")
    for name, xs, ys in series:
        if len(xs) == 0 or len(xs) != len(ys):
            raise DomainError(f"series {name!r} is empty or has mismatched x/y lengths")
        if not all(math.isfinite(v) for v in list(xs) + list(ys)):
            raise DomainError(f"series {name!r} contains non-finite values")

    all_x = [float(x) for _, xs, _ in series for x in xs]
    all_y = [float(y) for _, _, ys in series for y in ys]
    xt = nice_ticks(min(all_x), max(all_x))
    yt = nice_ticks(min(all_y), max(all_y))
    x0, x1, y0, y1 = xt[0], xt[-1], yt[0], yt[-1]
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def px(x: float) -> float:
        return LEFT + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return TOP + ph - (y - y0) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{WIDTH / 2:.1f}" y="28" text-anchor="middle" font-family="sans-serif" '
        f'font-size="18">{escape(title)}</text>',
    ]
    for t in yt:
        y = py(t)
        out.append(
            f'<line x1="{LEFT}" y1="{y:.2f}" x2="{LEFT + pw}" y2="{y:.2f}" stroke="#e0e0e0"/>'
        )
        out.append(
            f'<text x="{LEFT - 8}" y="{y + 4:.2f}" text-anchor="end" font-family="sans-serif" '
            f'font-size="11">{_label(t)}</text>'
        )
    for t in xt:
        x = px(t)
        out.append(
            f'<line x1="{x:.2f}" y1="{TOP + ph}" x2="{x:.2f}" y2="{TOP + ph + 5}" stroke="#000000"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{TOP + ph + 18}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="11">{_label(t)}</text>'
        )
    out.append(
        f'<line x1="{LEFT}" y1="{TOP + ph}" x2="{LEFT + pw}" y2="{TOP + ph}" stroke="#000000"/>'
    )
    out.append(f'<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{TOP + ph}" stroke="#000000"/>')
    if x_label:
        out.append(
            f'<text x="{LEFT + pw / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{escape(x_label)}</text>'
        )
    if y_label:
        cy = TOP + ph / 2
        out.append(
            f'<text x="20" y="{cy:.1f}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="13" transform="rotate(-90 20 {cy:.1f})">{escape(y_label)}</text>'
        )

    for k, (name, xs, ys) in enumerate(series):
        color = COLORS[k % len(COLORS)]
        pts = " ".join(f"{px(float(x)):.2f},{py(float(y)):.2f}" for x, y in zip(xs, ys))
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>'
        )
        ly = TOP + 10 + 20 * k
        lx = LEFT + pw + 15
        out.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{lx + 26}" y="{ly + 4}" font-family="sans-serif" font-size="12">'
            f"{escape(name)}</text>"
        )
    out.append("</svg>")
    sink.write("\n".join(out) + "\n")
