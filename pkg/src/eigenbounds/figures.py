"""Deterministic SVG 1.1 figures (no plotting dependency).

Figures are written directly as SVG text with fixed canvas geometry and
``%.3f`` coordinates, so identical inputs give identical bytes.
"""

from __future__ import annotations

import math
from pathlib import Path

__all__ = ["scatter_svg"]

WIDTH, HEIGHT = 640.0, 480.0
MARGIN = 56.0


def _ticks(lo: float, hi: float, n: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / n
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    start = math.ceil(lo / step) * step
    out = []
    t = start
    while t <= hi + 1e-12 * step:
        out.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return out


def scatter_svg(
    path: str | Path,
    points: list[tuple[float, float]],
    envelopes: list[list[tuple[float, float]]] | None = None,
    circle_radius: float | None = None,
    title: str = "",
) -> None:
    """Scatter of complex eigenvalues with optional envelope curves and a
    disk-split circle, written as a standalone SVG file."""
    envelopes = envelopes or []
    xs = [p[0] for p in points] + [q[0] for env in envelopes for q in env]
    ys = [p[1] for p in points] + [q[1] for env in envelopes for q in env]
    if circle_radius:
        xs += [-circle_radius, circle_radius]
        ys += [-circle_radius, circle_radius]
    if not xs:
        xs, ys = [-1.0, 1.0], [-1.0, 1.0]
    pad = lambda lo, hi: ((hi - lo) or 1.0) * 0.08
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_lo, x_hi = x_lo - pad(x_lo, x_hi), x_hi + pad(x_lo, x_hi)
    y_lo, y_hi = y_lo - pad(y_lo, y_hi), y_hi + pad(y_lo, y_hi)

    def sx(x: float) -> float:
        return MARGIN + (x - x_lo) / (x_hi - x_lo) * (WIDTH - 2 * MARGIN)

    def sy(y: float) -> float:
        return HEIGHT - MARGIN - (y - y_lo) / (y_hi - y_lo) * (HEIGHT - 2 * MARGIN)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH:.0f}" height="{HEIGHT:.0f}" '
        f'viewBox="0 0 {WIDTH:.0f} {HEIGHT:.0f}">',
        f'<rect x="0" y="0" width="{WIDTH:.0f}" height="{HEIGHT:.0f}" fill="white"/>',
        f'<rect x="{MARGIN:.1f}" y="{MARGIN:.1f}" width="{WIDTH - 2 * MARGIN:.1f}" '
        f'height="{HEIGHT - 2 * MARGIN:.1f}" fill="none" stroke="black" stroke-width="1"/>',
    ]
    if title:
        parts.append(
            f'<text x="{WIDTH / 2:.1f}" y="{MARGIN - 16:.1f}" text-anchor="middle" '
            f'font-family="monospace" font-size="14">{title}</text>'
        )
    for t in _ticks(x_lo, x_hi):
        parts.append(
            f'<line x1="{sx(t):.3f}" y1="{HEIGHT - MARGIN:.1f}" x2="{sx(t):.3f}" '
            f'y2="{HEIGHT - MARGIN + 5:.1f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{sx(t):.3f}" y="{HEIGHT - MARGIN + 18:.1f}" text-anchor="middle" '
            f'font-family="monospace" font-size="10">{t:.4g}</text>'
        )
    for t in _ticks(y_lo, y_hi):
        parts.append(
            f'<line x1="{MARGIN - 5:.1f}" y1="{sy(t):.3f}" x2="{MARGIN:.1f}" '
            f'y2="{sy(t):.3f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{MARGIN - 8:.1f}" y="{sy(t):.3f}" text-anchor="end" '
            f'font-family="monospace" font-size="10">{t:.4g}</text>'
        )
    # half-line [0, inf) marker on the real axis
    if y_lo < 0 < y_hi and x_hi > 0:
        parts.append(
            f'<line x1="{sx(max(0.0, x_lo)):.3f}" y1="{sy(0):.3f}" '
            f'x2="{WIDTH - MARGIN:.1f}" y2="{sy(0):.3f}" '
            f'stroke="gray" stroke-width="2" stroke-dasharray="4,3"/>'
        )
    if circle_radius:
        cx, cy = sx(0.0), sy(0.0)
        rx = circle_radius / (x_hi - x_lo) * (WIDTH - 2 * MARGIN)
        ry = circle_radius / (y_hi - y_lo) * (HEIGHT - 2 * MARGIN)
        parts.append(
            f'<ellipse cx="{cx:.3f}" cy="{cy:.3f}" rx="{rx:.3f}" ry="{ry:.3f}" '
            f'fill="none" stroke="blue" stroke-width="1" stroke-dasharray="6,3"/>'
        )
    for env in envelopes:
        pts = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in env)
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="red" stroke-width="1.2"/>'
        )
    for x, y in points:
        parts.append(f'<circle cx="{sx(x):.3f}" cy="{sy(y):.3f}" r="2.4" fill="black"/>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")
