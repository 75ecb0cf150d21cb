"""Certified approximation for the largest possible minimum color spanning
circle (the adversarial placement problem, which is NP-hard to solve
exactly).

Three ingredients:

- an upper bound: no realization's spanning radius can exceed the centers'
  spanning radius plus the disk radius, because that inflated circle
  swallows one whole disk of every color;
- a floor: snapping two colors onto a half-unit lattice (a square grid
  rotated 45 degrees, alternating colors by diagonal) keeps every snapped
  cross-color pair at least 1/2 apart, forcing any spanning circle of the
  realization to radius >= 1/4;
- the approximation: return the centers themselves when their radius is
  already >= 1/4, else the snapped realization.  Either branch achieves at
  least a third of the upper bound, and at least half of it when no two
  disks of different colors intersect.

A seeded sampling oracle provides an independent lower-bound probe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    DISK_RADIUS,
    Circle,
    ColoredPoint,
    Point,
    Tolerance,
    dist,
)
from .mcsc import PrecisePointSet, batch_mcsc_radius, mcsc_exact
from .smcsc import Instance, centers_mcsc

__all__ = [
    "SNAP_STEP",
    "ColorAbsent",
    "GridRealization",
    "Certificate",
    "LmcscResult",
    "grid_realization",
    "lmcsc_approx",
    "upper_bound",
    "is_color_disjoint",
    "sample_realizations",
    "lmcsc_sampling_oracle",
]

# Lattice basis component: u = (s, s) and v = (s, -s) span a square grid of
# cell side 1/2 rotated by 45 degrees.
SNAP_STEP = math.sqrt(2.0) / 4.0


class ColorAbsent(ValueError):
    def __init__(self, color: int):
        super().__init__(f"color {color} absent from instance")
        self.color = color


@dataclass(frozen=True)
class GridRealization:
    """A realization whose points of the two snapped colors sit on lattice
    points ``a*u + b*v + anchor`` with parity(a+b) encoding the color, so
    distinct snapped colors are never closer than 1/2."""

    realization: list[ColoredPoint]
    snapped_colors: tuple[int, int]
    anchor: Point


@dataclass(frozen=True)
class Certificate:
    """Bound bundle for one approximation run.

    ``factor = achieved / upper`` is a provable lower bound on the ratio
    attained: >= 1/3 always, >= 1/2 for color-disjoint instances.
    """

    r_c: float  # spanning radius of the disk centers
    upper: float  # r_c + disk radius; no realization can beat this
    achieved: float  # radius of the returned circle
    factor: float
    branch: str  # "centers" | "grid"


class LmcscResult(NamedTuple):
    realization: list[ColoredPoint]
    circle: Circle
    certificate: Certificate


def _lattice_point(anchor: Point, a: int, b: int) -> Point:
    return Point(
        anchor[0] + SNAP_STEP * (a + b), anchor[1] + SNAP_STEP * (a - b)
    )


def grid_realization(
    inst: Instance,
    color_a: int,
    color_b: int,
    anchor: Point = Point(0.0, 0.0),
    tol: Tolerance = DEFAULT_TOL,
) -> GridRealization:
    """Snap the disks of two chosen colors onto the rotated lattice.

    Each affected disk snaps to a corner of the lattice cell containing its
    center whose parity matches the disk's color (color_a on even a+b,
    color_b on odd).  Centers on cell boundaries resolve to the cell with
    the lexicographically largest index pair, and when both matching
    corners lie in the closed disk the one with the lexicographically
    larger index pair wins; at least one always does, since the two
    matching corners are diagonal and the cell diagonal equals the disk
    diameter.  Disks of other colors keep their centers.
    """
    if color_a == color_b:
        raise ValueError("snapped colors must differ")
    present = {d.color for d in inst.disks}
    for c in (color_a, color_b):
        if c not in present:
            raise ColorAbsent(c)
    out = []
    for i, d in enumerate(inst.disks):
        if d.color not in (color_a, color_b):
            out.append(ColoredPoint(d.center, d.color, i))
            continue
        want = 0 if d.color == color_a else 1
        dx = d.center[0] - anchor[0]
        dy = d.center[1] - anchor[1]
        cell_a = math.floor((dx + dy) / (2.0 * SNAP_STEP))
        cell_b = math.floor((dx - dy) / (2.0 * SNAP_STEP))
        if (cell_a + cell_b) % 2 == want:
            corners = ((cell_a + 1, cell_b + 1), (cell_a, cell_b))
        else:
            corners = ((cell_a + 1, cell_b), (cell_a, cell_b + 1))
        chosen = None
        for la, lb in corners:
            pt = _lattice_point(anchor, la, lb)
            if dist(pt, d.center) <= DISK_RADIUS + tol.eps:
                chosen = pt
                break
        if chosen is None:
            raise RuntimeError(
                f"no matching lattice corner inside disk {i}; broken invariant"
            )
        out.append(ColoredPoint(chosen, d.color, i))
    return GridRealization(out, (color_a, color_b), Point(*anchor))


def lmcsc_approx(
    inst: Instance, tol: Tolerance = DEFAULT_TOL, anchor: Point = Point(0.0, 0.0)
) -> LmcscResult:
    """Certified approximation of the adversarial optimum.

    If the centers' spanning radius is at least 1/4, the centers realize
    it directly; otherwise the realization snapped to the rotated lattice
    (on the two smallest color ids) forces a radius of at least 1/4.
    Needs at least two colors; single-color instances raise
    :class:`ColorAbsent`.
    """
    inst.validate()
    centers_result = centers_mcsc(inst, tol)
    r_c = centers_result.circle.radius
    if r_c >= 0.25:
        realization = [
            ColoredPoint(d.center, d.color, i) for i, d in enumerate(inst.disks)
        ]
        circle = centers_result.circle
        branch = "centers"
    else:
        grid = grid_realization(inst, 0, 1, anchor, tol)
        realization = grid.realization
        circle = mcsc_exact(PrecisePointSet(realization, inst.k), tol).circle
        branch = "grid"
    upper = r_c + DISK_RADIUS
    certificate = Certificate(r_c, upper, circle.radius, circle.radius / upper, branch)
    return LmcscResult(realization, circle, certificate)


def upper_bound(inst: Instance, tol: Tolerance = DEFAULT_TOL) -> float:
    """Radius no realization of ``inst`` can exceed."""
    inst.validate()
    return centers_mcsc(inst, tol).circle.radius + DISK_RADIUS


def is_color_disjoint(inst: Instance, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff closed disks of different colors are pairwise disjoint.

    Disks are closed, so tangency counts as intersecting: disjoint means
    center distance strictly above 1 (beyond tolerance) for every
    distinct-color pair.
    """
    xy = np.array([(d.center[0], d.center[1]) for d in inst.disks], dtype=float)
    colors = np.array([d.color for d in inst.disks])
    i, j = np.triu_indices(len(inst.disks), k=1)
    cross = colors[i] != colors[j]
    if not cross.any():
        return True
    d = np.hypot(xy[i, 0] - xy[j, 0], xy[i, 1] - xy[j, 1])[cross]
    return bool((d > 1.0 + tol.eps).all())


def sample_realizations(inst: Instance, samples: int, seed: int) -> np.ndarray:
    """Draw color-preserving random realizations, shape (samples, n, 2).

    Each disk's point is uniform on the disk boundary with probability 1/2
    and uniform inside otherwise; extreme realizations live on boundaries,
    so the bias finds large spanning radii at equal sample cost.
    """
    rng = np.random.default_rng(seed)
    n = len(inst.disks)
    centers = np.array([(d.center[0], d.center[1]) for d in inst.disks], dtype=float)
    on_boundary = rng.random((samples, n)) < 0.5
    theta = rng.random((samples, n)) * (2.0 * math.pi)
    radius = np.where(
        on_boundary, DISK_RADIUS, DISK_RADIUS * np.sqrt(rng.random((samples, n)))
    )
    offsets = np.stack([radius * np.cos(theta), radius * np.sin(theta)], axis=2)
    return centers[None, :, :] + offsets


def lmcsc_sampling_oracle(
    inst: Instance, samples: int, seed: int, tol: Tolerance = DEFAULT_TOL
) -> tuple[list[ColoredPoint], float]:
    """Lower-bound probe: the best of ``samples`` random realizations.

    Returns the realization with the largest exact spanning radius and
    that radius.  Deterministic for a fixed seed.  This is only a lower
    bound on the true adversarial optimum; it makes no assumption that
    the optimum uses boundary points.
    """
    inst.validate()
    if samples < 1:
        raise ValueError("samples must be at least 1")
    pts = sample_realizations(inst, samples, seed)
    colors = np.array([d.color for d in inst.disks])
    radii = batch_mcsc_radius(pts, colors, inst.k, tol)
    best = int(np.argmax(radii))
    realization = [
        ColoredPoint(Point(float(x), float(y)), int(c), i)
        for i, ((x, y), c) in enumerate(zip(pts[best], colors))
    ]
    return realization, float(radii[best])
