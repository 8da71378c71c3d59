"""Deterministic SVG rendering of a curve with frame vectors.

All geometry is evaluated in exact rational arithmetic; floating point
enters only when coordinates are written into the SVG text, so the drawing
layer cannot contaminate any exact result.  Identical inputs yield
byte-identical output: fixed sampling, fixed formatting, no timestamps.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .vectors import PolyMatrix, PolyVector

_PALETTE = ("#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085")
_SAMPLES = 128


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def render_plot(
    curve: PolyVector,
    frame: PolyMatrix,
    params: Sequence[Fraction],
    axes: tuple[int, int] = (0, 1),
) -> str:
    """Projected curve polyline with frame-vector arrows at each parameter."""
    if not params:
        raise ValueError("at least one parameter value is required")
    if frame.nrows != curve.dim or frame.ncols != curve.dim:
        raise ValueError("frame shape does not match the curve")
    ax, ay = axes
    if ax == ay or not (0 <= ax < curve.dim and 0 <= ay < curve.dim):
        raise ValueError("projection axes must be distinct and in range")

    lo = min(params) - 1
    hi = max(params) + 1
    step = Fraction(hi - lo, _SAMPLES)
    # y is negated so the drawing keeps mathematical orientation.
    curve_pts = []
    for i in range(_SAMPLES + 1):
        point = curve.evaluate(lo + i * step)
        curve_pts.append((float(point[ax]), -float(point[ay])))

    arrows = []
    for t0 in params:
        base = curve.evaluate(t0)
        columns = frame.evaluate(t0)
        x0, y0 = float(base[ax]), -float(base[ay])
        for j in range(frame.ncols):
            dx = float(columns[ax][j])
            dy = -float(columns[ay][j])
            arrows.append((j, x0, y0, x0 + dx, y0 + dy))

    xs = [p[0] for p in curve_pts] + [a[1] for a in arrows] + [a[3] for a in arrows]
    ys = [p[1] for p in curve_pts] + [a[2] for a in arrows] + [a[4] for a in arrows]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    width = max(xmax - xmin, 1e-9)
    height = max(ymax - ymin, 1e-9)
    pad_x, pad_y = 0.05 * width, 0.05 * height
    view = (
        f"{_fmt(xmin - pad_x)} {_fmt(ymin - pad_y)} "
        f"{_fmt(width + 2 * pad_x)} {_fmt(height + 2 * pad_y)}"
    )
    stroke = max(width, height) / 200.0

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="640" height="480" viewBox="{view}">',
        "<defs>",
        '<marker id="tip" markerWidth="8" markerHeight="8" refX="6" refY="3" '
        'orient="auto" markerUnits="strokeWidth">'
        '<path d="M0,0 L6,3 L0,6 z" fill="#333333"/></marker>',
        "</defs>",
        '<polyline fill="none" stroke="#222222" '
        f'stroke-width="{_fmt(stroke)}" points="'
        + " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in curve_pts)
        + '"/>',
    ]
    for j, x0, y0, x1, y1 in arrows:
        color = _PALETTE[j % len(_PALETTE)]
        lines.append(
            f'<line class="frame-col-{j}" x1="{_fmt(x0)}" y1="{_fmt(y0)}" '
            f'x2="{_fmt(x1)}" y2="{_fmt(y1)}" stroke="{color}" '
            f'stroke-width="{_fmt(stroke)}" marker-end="url(#tip)"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
