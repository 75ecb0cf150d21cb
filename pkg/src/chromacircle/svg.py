"""Static SVG rendering of instances and solutions.

One <circle> element per disk plus one for the solution circle;
realization points are drawn as small squares so the circle count stays
meaningful.  The viewport fits the drawing's bounding box with a 10%
margin.  The y axis is flipped so figures read in math orientation.
"""

from __future__ import annotations

from .geometry import Circle, ColoredDisk, ColoredPoint, DISK_RADIUS
from .files import fmt_num

__all__ = ["PALETTE", "render_svg"]

PALETTE = [
    "#d62728",  # red (color 0 in the gadget conventions)
    "#1f77b4",  # blue (color 1)
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
]


def _color(c: int) -> str:
    return PALETTE[c % len(PALETTE)]


def render_svg(
    solution: Circle,
    disks: list[ColoredDisk] | None = None,
    points: list[ColoredPoint] | None = None,
    realization: list[ColoredPoint] | None = None,
) -> str:
    """Render disks (or precise points), the solution circle, and an
    optional realization overlay.  Deterministic output."""
    xs: list[float] = []
    ys: list[float] = []

    def grow(x: float, y: float, r: float) -> None:
        xs.extend((x - r, x + r))
        ys.extend((-y - r, -y + r))

    for d in disks or []:
        grow(d.center[0], d.center[1], DISK_RADIUS)
    for p in points or []:
        grow(p.point[0], p.point[1], 0.0)
    grow(solution.center[0], solution.center[1], max(solution.radius, 0.05))

    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    extent = max(maxx - minx, maxy - miny, 1.0)
    margin = 0.1 * extent
    view = (minx - margin, miny - margin, (maxx - minx) + 2 * margin, (maxy - miny) + 2 * margin)
    stroke = 0.005 * extent
    marker = 0.012 * extent

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="720" height="720">'.format(
            *(fmt_num(v) for v in view)
        ),
    ]
    for d in disks or []:
        parts.append(
            '<circle cx="{}" cy="{}" r="{}" fill="{}" fill-opacity="0.18" '
            'stroke="{}" stroke-width="{}"/>'.format(
                fmt_num(d.center[0]),
                fmt_num(-d.center[1]),
                fmt_num(DISK_RADIUS),
                _color(d.color),
                _color(d.color),
                fmt_num(stroke),
            )
        )
    for p in points or []:
        parts.append(
            '<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>'.format(
                fmt_num(p.point[0] - marker),
                fmt_num(-p.point[1] - marker),
                fmt_num(2 * marker),
                fmt_num(2 * marker),
                _color(p.color),
            )
        )
    for p in realization or []:
        parts.append(
            '<rect x="{}" y="{}" width="{}" height="{}" fill="{}" stroke="#000" '
            'stroke-width="{}"/>'.format(
                fmt_num(p.point[0] - marker),
                fmt_num(-p.point[1] - marker),
                fmt_num(2 * marker),
                fmt_num(2 * marker),
                _color(p.color),
                fmt_num(0.3 * stroke),
            )
        )
    parts.append(
        '<circle cx="{}" cy="{}" r="{}" fill="none" stroke="#000" stroke-width="{}"/>'.format(
            fmt_num(solution.center[0]),
            fmt_num(-solution.center[1]),
            fmt_num(solution.radius),
            fmt_num(1.5 * stroke),
        )
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
