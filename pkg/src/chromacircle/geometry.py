"""Planar primitives: points, circles, colored unit disks, and the single
absolute tolerance policy shared by every solver in the package.

All operations are pure functions on immutable values, so they can be
called from any number of workers without coordination.  Containment is
closed everywhere: boundary points count as inside, resolved with
``Tolerance.eps`` of absolute slack on distances.
"""

from __future__ import annotations

import math
from typing import NamedTuple

__all__ = [
    "DEFAULT_EPS",
    "DISK_RADIUS",
    "Tolerance",
    "DEFAULT_TOL",
    "Point",
    "Circle",
    "ColoredDisk",
    "ColoredPoint",
    "CollinearError",
    "dist",
    "diametral_circle",
    "circumcircle",
    "contains",
    "pull_toward",
]

DEFAULT_EPS = 1e-9

# Uncertainty regions are closed disks of diameter 1, so the radius is a
# package-wide constant rather than per-disk data.
DISK_RADIUS = 0.5


class Tolerance(NamedTuple):
    """Absolute slack applied to distance comparisons (eps must be > 0)."""

    eps: float = DEFAULT_EPS


DEFAULT_TOL = Tolerance()


class Point(NamedTuple):
    x: float
    y: float


class Circle(NamedTuple):
    center: Point
    radius: float


class ColoredDisk(NamedTuple):
    """An imprecise point: known only to lie somewhere in the closed
    unit-diameter disk around ``center``."""

    center: Point
    color: int


class ColoredPoint(NamedTuple):
    """A concrete colored point.  ``disk_index`` records which disk of an
    instance it realizes; it is None for precise (disk-free) inputs."""

    point: Point
    color: int
    disk_index: int | None = None


class CollinearError(ValueError):
    """The three points are collinear within tolerance: no circumcircle.
    Candidate enumerators catch this and skip the triple."""


def dist(p: Point, q: Point) -> float:
    """Euclidean distance."""
    return math.hypot(p[0] - q[0], p[1] - q[1])


def diametral_circle(p: Point, q: Point) -> Circle:
    """Smallest circle through ``p`` and ``q``: they span a diameter."""
    center = Point((p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0)
    return Circle(center, dist(p, q) / 2.0)


def circumcircle(p: Point, q: Point, r: Point, eps: float = DEFAULT_EPS) -> Circle:
    """Circle through three points.

    Inputs are sorted before any arithmetic, so the result is bit-stable
    under argument reordering.  Raises :class:`CollinearError` when the
    triangle is degenerate, i.e. its area is below ``eps`` times its
    longest side (scale-aware test).
    """
    a, b, c = sorted((Point(*p), Point(*q), Point(*r)))
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    cross = bx * cy - by * cx
    longest = max(
        math.hypot(bx, by), math.hypot(cx, cy), math.hypot(cx - bx, cy - by)
    )
    if longest <= 0.0 or abs(cross) / 2.0 < eps * longest:
        raise CollinearError(f"points are collinear within tolerance: {p}, {q}, {r}")
    d = 2.0 * cross
    nb = bx * bx + by * by
    nc = cx * cx + cy * cy
    ux = (cy * nb - by * nc) / d
    uy = (bx * nc - cx * nb) / d
    return Circle(Point(a[0] + ux, a[1] + uy), math.hypot(ux, uy))


def contains(c: Circle, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Closed containment: ``p`` is within ``radius + eps`` of the center."""
    return dist(c.center, p) <= c.radius + tol.eps


def pull_toward(source: Point, target: Point, max_step: float) -> Point:
    """Move ``source`` toward ``target`` by at most ``max_step``.

    Returns ``target`` when it is within reach, otherwise the point on the
    segment at exactly ``max_step`` from ``source``.
    """
    gap = dist(source, target)
    if gap <= max_step:
        return Point(target[0], target[1])
    t = max_step / gap
    return Point(
        source[0] + t * (target[0] - source[0]),
        source[1] + t * (target[1] - source[1]),
    )
