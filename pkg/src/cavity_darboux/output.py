"""CSV traces and self-contained SVG line plots."""

from __future__ import annotations

import math

import numpy as np

WIDTH, HEIGHT = 800, 500
LEFT, RIGHT, TOP, BOTTOM = 80, 24, 40, 60
NTICKS = 6


def write_csv(path, t, y, column):
    """Two-column CSV, header ``t,<column>``, 17 significant digits."""
    rows = [f"t,{column}"]
    rows.extend(f"{a:.17g},{b:.17g}" for a, b in zip(np.asarray(t, float), np.asarray(y, float)))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(rows) + "\n")


def read_csv(path):
    """Returns ``(column_name, t, y)``."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
        data = [line.split(",") for line in fh.read().splitlines() if line]
    if len(header) != 2 or header[0] != "t":
        raise ValueError(f"{path}: unexpected header {header}")
    arr = np.array(data, dtype=float).reshape(-1, 2)
    return header[1], arr[:, 0], arr[:, 1]


def _range(v):
    lo, hi = float(np.min(v)), float(np.max(v))
    if hi == lo:
        pad = abs(lo) * 0.05 or 1.0
    else:
        pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def render_svg(t, y, title="", xlabel="t", ylabel="", logy=False):
    """Single-polyline plot on a fixed 800x500 canvas, returned as text."""
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if logy:
        positive = y[y > 0]
        floor = positive.min() if positive.size else 1e-300
        y = np.log10(np.maximum(y, floor))
    x0, x1 = _range(t)
    y0, y1 = _range(y)
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM
    px = LEFT + (t - x0) / (x1 - x0) * pw
    py = TOP + (y1 - y) / (y1 - y0) * ph
    pts = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for i in range(NTICKS):
        f = i / (NTICKS - 1)
        xv = x0 + f * (x1 - x0)
        xp = LEFT + f * pw
        out.append(f'<line x1="{xp:.2f}" y1="{TOP + ph}" x2="{xp:.2f}" y2="{TOP + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{xp:.2f}" y="{TOP + ph + 20}" text-anchor="middle">{_fmt(xv)}</text>')
        yv = y0 + f * (y1 - y0)
        yp = TOP + ph - f * ph
        label = _fmt(10.0**yv) if logy else _fmt(yv)
        out.append(f'<line x1="{LEFT - 5}" y1="{yp:.2f}" x2="{LEFT}" y2="{yp:.2f}" stroke="black"/>')
        out.append(f'<text x="{LEFT - 8}" y="{yp + 4:.2f}" text-anchor="end">{label}</text>')
    out.append(f'<polyline fill="none" stroke="#1f4e9c" stroke-width="1" points="{pts}"/>')
    out.append(f'<text x="{WIDTH / 2:.0f}" y="24" text-anchor="middle" font-size="15">{_esc(title)}</text>')
    out.append(f'<text x="{LEFT + pw / 2:.0f}" y="{HEIGHT - 14}" text-anchor="middle">{_esc(xlabel)}</text>')
    out.append(f'<text x="18" y="{TOP + ph / 2:.0f}" text-anchor="middle" '
               f'transform="rotate(-90 18 {TOP + ph / 2:.0f})">{_esc(ylabel)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path, *args, **kwargs):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg(*args, **kwargs))


def _fmt(v):
    if v == 0 or not math.isfinite(v):
        return "0" if v == 0 else str(v)
    return f"{v:.4g}"


def _esc(s):
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
