"""Rigid building blocks for adversarial (largest-case) instances, with
checkers and Monte-Carlo probes.

The constructions are engineered around a separation target of 9/8 for
red-blue point pairs:

- a *stack* of three aligned alternating-color unit disks with centers
  3/8 apart admits exactly two placements keeping all cross-color
  distances at 9/8 (middle disk at its leftmost or rightmost point, outer
  points pushed straight away from it);
- a *clause* gadget (three red disks near the corners of an equilateral
  triangle of side 7/2, one blue disk at its center) lets the blue disk
  escape to distance 9/8 from all three red points unless every red disk
  sits at its inner anchor;
- a *tightness* instance (one blue disk covered by a fine grid of red
  disks, other blue disks far away) caps every realization's spanning
  radius at 1/4 + epsilon, showing the 1/4 floor cannot be raised.

Generators are pure and translation-equivariant; probes are seeded and
deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    DISK_RADIUS,
    ColoredDisk,
    ColoredPoint,
    Point,
    Tolerance,
    dist,
)
from .smcsc import Instance

__all__ = [
    "RED",
    "BLUE",
    "STACK_GAP",
    "DELTA_DEFAULT",
    "CLAUSE_SIDE",
    "CLAUSE_CORNER_OFFSET",
    "StackGadget",
    "StackExtremes",
    "ClauseGadget",
    "PDeltaReport",
    "make_stack",
    "stack_extreme_realizations",
    "pdelta_check",
    "stack_rigidity_probe",
    "make_clause_gadget",
    "clause_feasibility",
    "make_tightness_instance",
]

RED = 0
BLUE = 1

# Center spacing between consecutive disks of a stack.
STACK_GAP = 0.375

# Cross-color separation every gadget is engineered around.  It is the
# largest separation a stack admits: from the middle disk's side point, the
# far point of an outer disk is hypot(1/2, 3/8) + 1/2 = 5/8 + 1/2 away.
DELTA_DEFAULT = 1.125

CLAUSE_SIDE = 3.5

# Distance from a triangle corner to its red disk center, along the
# corner-center line.  Not forced by the geometry; calibrated so that the
# clause truth table below holds (see the derivation test in
# tests/test_gadgets.py).  With 0.5 the outer anchors land exactly on the
# triangle corners and the truth table has comfortable margins on both
# sides (admissible window is roughly 0.40 .. 0.73).
CLAUSE_CORNER_OFFSET = 0.5

_PATTERN_COLORS = {"BRB": (BLUE, RED, BLUE), "RBR": (RED, BLUE, RED)}


@dataclass(frozen=True)
class StackGadget:
    """Three aligned alternating-color unit disks: [top, middle, bottom],
    centers ``mid_center +/- STACK_GAP * axis`` and ``mid_center``."""

    mid_center: Point
    axis: Point  # unit direction from middle toward the top disk
    pattern: str  # "BRB" or "RBR", top to bottom
    disks: list[ColoredDisk]


@dataclass(frozen=True)
class StackExtremes:
    """The only two maximally separated placements of a stack."""

    left: list[ColoredPoint]
    right: list[ColoredPoint]


@dataclass(frozen=True)
class PDeltaReport:
    """Outcome of a cross-color separation check.

    ``min_cross_color_distance`` is +inf when no cross-color pair exists;
    ``violating_pair`` gives the offending point indices when failing.
    """

    min_cross_color_distance: float
    passed: bool
    violating_pair: tuple[int, int] | None


@dataclass(frozen=True)
class ClauseGadget:
    center: Point  # triangle center, also the blue disk's center
    side: float
    corner_offset: float
    corners: list[Point]
    disks: list[ColoredDisk]  # [red, red, red, blue]
    t_anchors: list[Point]  # per red disk: farthest disk point from center
    f_anchors: list[Point]  # per red disk: nearest disk point to center


def _unit(p: Point) -> Point:
    norm = math.hypot(p[0], p[1])
    if norm == 0.0:
        raise ValueError("zero-length axis")
    return Point(p[0] / norm, p[1] / norm)


def make_stack(
    mid_center: Point, pattern: str, axis: Point = Point(0.0, 1.0)
) -> StackGadget:
    """Build a stack of disks at ``mid_center`` along ``axis``."""
    if pattern not in _PATTERN_COLORS:
        raise ValueError(f"pattern must be BRB or RBR, got {pattern!r}")
    mid = Point(*mid_center)
    direction = _unit(Point(*axis))
    top = Point(mid[0] + STACK_GAP * direction[0], mid[1] + STACK_GAP * direction[1])
    bottom = Point(mid[0] - STACK_GAP * direction[0], mid[1] - STACK_GAP * direction[1])
    colors = _PATTERN_COLORS[pattern]
    disks = [
        ColoredDisk(top, colors[0]),
        ColoredDisk(mid, colors[1]),
        ColoredDisk(bottom, colors[2]),
    ]
    return StackGadget(mid, direction, pattern, disks)


def _extreme(s: StackGadget, side_dir: Point) -> list[ColoredPoint]:
    mid_pt = Point(
        s.mid_center[0] + DISK_RADIUS * side_dir[0],
        s.mid_center[1] + DISK_RADIUS * side_dir[1],
    )
    out = []
    for idx, d in enumerate(s.disks):
        if idx == 1:
            out.append(ColoredPoint(mid_pt, d.color, idx))
            continue
        away = _unit(Point(d.center[0] - mid_pt[0], d.center[1] - mid_pt[1]))
        pt = Point(
            d.center[0] + DISK_RADIUS * away[0], d.center[1] + DISK_RADIUS * away[1]
        )
        out.append(ColoredPoint(pt, d.color, idx))
    return out


def stack_extreme_realizations(s: StackGadget) -> StackExtremes:
    """The two placements with all cross-color distances equal to 9/8.

    In each, the middle disk uses one of its two side points (perpendicular
    to the axis) and the outer disks use the points diametrically away from
    it, which puts every cross-color pair at hypot(1/2, 3/8) + 1/2 = 9/8
    exactly.  Any other placement brings some cross-color pair strictly
    closer.
    """
    left_dir = Point(-s.axis[1], s.axis[0])
    right_dir = Point(s.axis[1], -s.axis[0])
    return StackExtremes(_extreme(s, left_dir), _extreme(s, right_dir))


def pdelta_check(
    points: list[ColoredPoint], delta: float, tol: Tolerance = DEFAULT_TOL
) -> PDeltaReport:
    """Check that all cross-color pairs are at least ``delta`` apart.

    Works for any number of colors: same-color pairs are exempt.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    n = len(points)
    best = math.inf
    worst_pair = None
    if n >= 2:
        xy = np.array([(p.point[0], p.point[1]) for p in points], dtype=float)
        colors = np.array([p.color for p in points])
        i, j = np.triu_indices(n, k=1)
        cross = colors[i] != colors[j]
        if cross.any():
            i, j = i[cross], j[cross]
            d = np.hypot(xy[i, 0] - xy[j, 0], xy[i, 1] - xy[j, 1])
            w = int(np.argmin(d))
            best = float(d[w])
            worst_pair = (int(i[w]), int(j[w]))
    passed = best >= delta - tol.eps
    return PDeltaReport(best, passed, None if passed else worst_pair)


def _clip_to_disks(pts: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """Project points radially back into their closed disks."""
    offs = pts - centers[None, :, :]
    r = np.hypot(offs[..., 0], offs[..., 1])
    factor = np.ones_like(r)
    over = r > DISK_RADIUS
    factor[over] = DISK_RADIUS / r[over]
    return centers[None, :, :] + offs * factor[..., None]


def stack_rigidity_probe(
    s: StackGadget,
    samples: int,
    seed: int,
    neighborhood: float,
    delta: float = DELTA_DEFAULT,
    tol: Tolerance = DEFAULT_TOL,
) -> bool:
    """Monte-Carlo probe of the stack's two-placement rigidity.

    Samples random realizations of the stack (boundary-biased, plus a
    small deterministic block of jittered copies of the two extreme
    placements so the non-vacuous path is exercised) and returns True iff
    every sample that keeps all cross-color distances >= ``delta - eps``
    has its middle point within ``neighborhood`` of the middle disk's
    leftmost or rightmost point.  One-sided: a False refutes rigidity at
    this ``delta``; True is evidence, not proof.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if neighborhood <= 0:
        raise ValueError("neighborhood must be positive")
    from .lmcsc import sample_realizations

    inst = Instance(list(s.disks), 2)
    pts = sample_realizations(inst, samples, seed)
    centers = np.array([(d.center[0], d.center[1]) for d in s.disks], dtype=float)

    extremes = stack_extreme_realizations(s)
    exact = np.array(
        [[(p.point[0], p.point[1]) for p in real] for real in (extremes.left, extremes.right)],
        dtype=float,
    )
    jitter_rng = np.random.default_rng([seed, 1])
    sigmas = np.repeat([0.0, 1e-7, 1e-6, 1e-5, 1e-4], 8)
    jittered = np.concatenate(
        [
            exact[e][None, :, :] + sig * jitter_rng.standard_normal((1, 3, 2))
            for e in (0, 1)
            for sig in sigmas
        ]
    )
    pts = np.concatenate([pts, _clip_to_disks(jittered, centers)])

    colors = [d.color for d in s.disks]
    pairs = [
        (i, j) for i in range(3) for j in range(i + 1, 3) if colors[i] != colors[j]
    ]
    passing = np.ones(len(pts), dtype=bool)
    for i, j in pairs:
        d = np.hypot(pts[:, i, 0] - pts[:, j, 0], pts[:, i, 1] - pts[:, j, 1])
        passing &= d >= delta - tol.eps
    if not passing.any():
        return True
    mids = pts[passing, 1, :]
    side = np.array([-s.axis[1], s.axis[0]]) * DISK_RADIUS
    mid_center = np.array([s.mid_center[0], s.mid_center[1]])
    d_left = np.hypot(*(mids - (mid_center + side)).T)
    d_right = np.hypot(*(mids - (mid_center - side)).T)
    return bool((np.minimum(d_left, d_right) <= neighborhood).all())


def make_clause_gadget(
    g: Point, corner_offset: float = CLAUSE_CORNER_OFFSET
) -> ClauseGadget:
    """Clause gadget at center ``g``: red disks aligned with ``g`` and the
    corners of an equilateral triangle of side 7/2 (corner distance
    ``corner_offset`` along that line, toward ``g``), plus a blue disk at
    ``g``.  Anchors are each red disk's farthest/nearest point from ``g``
    on its alignment line."""
    if corner_offset < 0:
        raise ValueError("corner_offset must be non-negative")
    gx, gy = float(g[0]), float(g[1])
    circumradius = CLAUSE_SIDE / math.sqrt(3.0)
    corners = [
        Point(gx, gy + circumradius),
        Point(gx - CLAUSE_SIDE / 2.0, gy - circumradius / 2.0),
        Point(gx + CLAUSE_SIDE / 2.0, gy - circumradius / 2.0),
    ]
    disks = []
    t_anchors = []
    f_anchors = []
    center_dist = circumradius - corner_offset
    for corner in corners:
        direction = _unit(Point(corner[0] - gx, corner[1] - gy))
        disks.append(
            ColoredDisk(
                Point(gx + center_dist * direction[0], gy + center_dist * direction[1]),
                RED,
            )
        )
        t_anchors.append(
            Point(
                gx + (center_dist + DISK_RADIUS) * direction[0],
                gy + (center_dist + DISK_RADIUS) * direction[1],
            )
        )
        f_anchors.append(
            Point(
                gx + (center_dist - DISK_RADIUS) * direction[0],
                gy + (center_dist - DISK_RADIUS) * direction[1],
            )
        )
    disks.append(ColoredDisk(Point(gx, gy), BLUE))
    return ClauseGadget(
        Point(gx, gy), CLAUSE_SIDE, corner_offset, corners, disks, t_anchors, f_anchors
    )


def clause_feasibility(
    cg: ClauseGadget,
    choices,
    samples: int = 2000,
    seed: int = 0,
    delta: float = DELTA_DEFAULT,
    tol: Tolerance = DEFAULT_TOL,
    pitch: float = 1e-3,
) -> bool:
    """Can the blue disk escape the three pinned red points?

    ``choices`` assigns each red disk its outer ('t') or inner ('f')
    anchor.  Returns True iff some point of the closed blue disk is at
    distance >= ``delta - eps`` from all three anchors, searching a
    deterministic grid of the given pitch plus ``samples`` seeded random
    points.
    """
    choices = tuple(choices)
    if len(choices) != 3 or any(c not in ("t", "f") for c in choices):
        raise ValueError("choices must be three of 't'/'f'")
    anchors = [
        cg.t_anchors[i] if choices[i] == "t" else cg.f_anchors[i] for i in range(3)
    ]
    gx, gy = cg.center
    npts = int(round(2.0 * DISK_RADIUS / pitch)) + 1
    axis = np.linspace(-DISK_RADIUS, DISK_RADIUS, npts)
    X, Y = np.meshgrid(axis, axis)
    inside = X * X + Y * Y <= (DISK_RADIUS + tol.eps) ** 2
    qx = X[inside] + gx
    qy = Y[inside] + gy
    if samples >= 1:
        rng = np.random.default_rng(seed)
        theta = rng.random(samples) * (2.0 * math.pi)
        radius = DISK_RADIUS * np.sqrt(rng.random(samples))
        qx = np.concatenate([qx, gx + radius * np.cos(theta)])
        qy = np.concatenate([qy, gy + radius * np.sin(theta)])
    clear = np.ones(len(qx), dtype=bool)
    for ax, ay in anchors:
        clear &= np.hypot(qx - ax, qy - ay) >= delta - tol.eps
        if not clear.any():
            return False
    return bool(clear.any())


def make_tightness_instance(epsilon: float, far_blue: int = 3) -> Instance:
    """Instance whose every realization has spanning radius <= 1/4 + epsilon.

    One blue disk at the origin, red disks centered on a square grid of
    pitch 2*sqrt(2)*epsilon covering the blue disk inflated by one grid
    cell (so every possible blue point is within 2*epsilon of a red
    center), and ``far_blue`` extra blue disks at distance >= 100.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if far_blue < 0:
        raise ValueError("far_blue must be non-negative")
    pitch = 2.0 * math.sqrt(2.0) * epsilon
    extent = int(math.ceil((DISK_RADIUS + pitch) / pitch))
    disks = [ColoredDisk(Point(0.0, 0.0), BLUE)]
    for i in range(-extent, extent + 1):
        for j in range(-extent, extent + 1):
            disks.append(ColoredDisk(Point(i * pitch, j * pitch), RED))
    for j in range(far_blue):
        disks.append(ColoredDisk(Point(100.0 + 2.0 * j, 0.0), BLUE))
    return Instance(disks, 2)
