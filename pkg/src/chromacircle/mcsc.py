"""Exact minimum color spanning circles (MCSC) of precise colored points.

``mcsc_exact`` enumerates every circle that can determine an optimum --
single points (radius 0), diametral circles of point pairs, and
circumcircles of non-collinear triples -- keeps the feasible ones (every
color covered within tolerance), and returns the lexicographic minimum by
``(radius, center.x, center.y)``.  Pair and triple candidates are built
from coordinate-sorted generators, which makes the winning circle
independent of input order and of how candidate evaluation is split
across workers.

``mcsc_grid_oracle`` brackets the optimal radius by scanning the
1-Lipschitz coverage function on a dense grid.  It shares no code with
the exact solver, so the two can cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .geometry import DEFAULT_TOL, Circle, ColoredPoint, Point, Tolerance

__all__ = [
    "EmptyInput",
    "MissingColor",
    "PrecisePointSet",
    "McscResult",
    "mcsc_exact",
    "mcsc_radius",
    "batch_mcsc_radius",
    "feasible",
    "mcsc_grid_oracle",
]


class EmptyInput(ValueError):
    """The point set (or disk instance) is empty."""


class MissingColor(ValueError):
    """Some color id below k has no member."""

    def __init__(self, color: int):
        super().__init__(f"no member of color {color}")
        self.color = color


@dataclass(frozen=True)
class PrecisePointSet:
    """A colored point set with colors 0..k-1, every color present."""

    points: list[ColoredPoint]
    k: int

    @classmethod
    def from_points(cls, points: list[ColoredPoint]) -> "PrecisePointSet":
        k = max((p.color for p in points), default=-1) + 1
        return cls(list(points), k)

    def validate(self) -> None:
        if not self.points:
            raise EmptyInput("empty point set")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        seen: set[int] = set()
        for p in self.points:
            if not 0 <= p.color < self.k:
                raise ValueError(f"color {p.color} outside [0, {self.k})")
            seen.add(p.color)
        for c in range(self.k):
            if c not in seen:
                raise MissingColor(c)


@dataclass(frozen=True)
class McscResult:
    """circle: the optimum; witness: its <= 3 determining boundary points;
    per_color_cover: one contained point per color (index = color)."""

    circle: Circle
    witness: list[ColoredPoint]
    per_color_cover: list[ColoredPoint]


def _arrays(points: list[ColoredPoint]) -> tuple[np.ndarray, np.ndarray]:
    xy = np.array([(p.point[0], p.point[1]) for p in points], dtype=float)
    colors = np.array([p.color for p in points], dtype=np.int64)
    return xy, colors


@lru_cache(maxsize=None)
def _triple_indices(n: int) -> np.ndarray:
    """All index triples i<j<l of range(n), shape (C(n,3), 3)."""
    i2, j2 = np.triu_indices(n, k=1)
    reps = (n - 1) - j2
    keep = reps > 0
    i2, j2, reps = i2[keep], j2[keep], reps[keep]
    total = int(reps.sum())
    if total == 0:
        return np.empty((0, 3), dtype=np.int64)
    starts = np.cumsum(reps) - reps
    seg = np.arange(total) - np.repeat(starts, reps)
    i = np.repeat(i2, reps)
    j = np.repeat(j2, reps)
    l = j + 1 + seg
    out = np.stack([i, j, l], axis=1)
    out.setflags(write=False)
    return out


def _single_block(xy: np.ndarray):
    n = len(xy)
    gens = np.stack(
        [np.arange(n), np.full(n, -1, np.int64), np.full(n, -1, np.int64)], axis=1
    )
    return xy, np.zeros(n), gens


def _pair_block(xy: np.ndarray):
    n = len(xy)
    i, j = np.triu_indices(n, k=1)
    centers = (xy[i] + xy[j]) / 2.0
    radii = 0.5 * np.hypot(xy[i, 0] - xy[j, 0], xy[i, 1] - xy[j, 1])
    gens = np.stack([i, j, np.full(i.shape, -1, np.int64)], axis=1)
    return centers, radii, gens


def _triple_block(xy: np.ndarray, eps: float, radius_cap: float | None):
    """Circumcircles of non-degenerate triples, each triple sorted by
    coordinates first so the arithmetic is order-independent."""
    tri = _triple_indices(len(xy))
    if len(tri) == 0:
        return np.empty((0, 2)), np.empty(0), np.empty((0, 3), np.int64)
    pts = xy[tri]
    z = pts[:, :, 0] + 1j * pts[:, :, 1]
    order = np.argsort(z, axis=1, kind="stable")
    pts = np.take_along_axis(pts, order[:, :, None], axis=1)
    tri = np.take_along_axis(tri, order, axis=1)
    a, b, c = pts[:, 0], pts[:, 1], pts[:, 2]
    bx, by = b[:, 0] - a[:, 0], b[:, 1] - a[:, 1]
    cx, cy = c[:, 0] - a[:, 0], c[:, 1] - a[:, 1]
    cross = bx * cy - by * cx
    longest = np.maximum(
        np.hypot(bx, by), np.maximum(np.hypot(cx, cy), np.hypot(cx - bx, cy - by))
    )
    ok = (longest > 0.0) & (np.abs(cross) / 2.0 >= eps * longest)
    with np.errstate(divide="ignore", invalid="ignore"):
        d = 2.0 * cross
        nb = bx * bx + by * by
        nc = cx * cx + cy * cy
        ux = (cy * nb - by * nc) / d
        uy = (bx * nc - cx * nb) / d
        radii = np.hypot(ux, uy)
    ok &= np.isfinite(radii)
    if radius_cap is not None:
        ok &= radii <= radius_cap
    centers = a + np.stack([ux, uy], axis=1)
    return centers[ok], radii[ok], tri[ok]


def _feasible_mask(centers, radii, xy, colors, k, eps):
    """Which candidate circles contain at least one point of every color."""
    m = len(centers)
    out = np.zeros(m, dtype=bool)
    if m == 0:
        return out
    lim = (radii + eps) ** 2
    groups = [xy[colors == c] for c in range(k)]
    step = max(1, 4_000_000 // max(1, len(xy)))
    for s in range(0, m, step):
        e = min(m, s + step)
        sub = np.ones(e - s, dtype=bool)
        cc = centers[s:e]
        for pts in groups:
            d2 = ((cc[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2).min(axis=1)
            sub &= d2 <= lim[s:e]
            if not sub.any():
                break
        out[s:e] = sub
    return out


def _best_of(centers, radii, gens, feas):
    idx = np.flatnonzero(feas)
    if len(idx) == 0:
        return None
    order = np.lexsort((centers[idx, 1], centers[idx, 0], radii[idx]))
    w = idx[order[0]]
    return float(radii[w]), float(centers[w, 0]), float(centers[w, 1]), gens[w]


def _enumerate_best(xy, colors, k, eps):
    """Lexicographic-minimum feasible candidate over the full family."""
    n = len(xy)
    blocks = [_single_block(xy)]
    if n >= 2:
        blocks.append(_pair_block(xy))
    centers = np.concatenate([b[0] for b in blocks])
    radii = np.concatenate([b[1] for b in blocks])
    gens = np.concatenate([b[2] for b in blocks])
    best = _best_of(centers, radii, gens, _feasible_mask(centers, radii, xy, colors, k, eps))
    if n >= 3:
        # Triples with a larger radius than the best single/pair candidate
        # can never win the lexicographic comparison, so cap early.
        cap = best[0] if best is not None else None
        c3, r3, g3 = _triple_block(xy, eps, cap)
        best3 = _best_of(c3, r3, g3, _feasible_mask(c3, r3, xy, colors, k, eps))
        if best3 is not None and (best is None or best3[:3] < best[:3]):
            best = best3
    if best is None:
        raise RuntimeError("no feasible candidate circle; input violates invariants")
    return best


def mcsc_exact(ps: PrecisePointSet, tol: Tolerance = DEFAULT_TOL) -> McscResult:
    """Exact minimum color spanning circle of ``ps``.

    The returned circle covers every color (closed containment within
    ``tol.eps``); no enumerated candidate is feasible with a smaller
    radius; equal-radius candidates resolve to the smallest
    ``(center.x, center.y)``.
    """
    ps.validate()
    xy, colors = _arrays(ps.points)
    radius, ctr_x, ctr_y, gen = _enumerate_best(xy, colors, ps.k, tol.eps)
    circle = Circle(Point(ctr_x, ctr_y), radius)
    witness = [ps.points[int(g)] for g in gen if g >= 0]
    d = np.hypot(xy[:, 0] - ctr_x, xy[:, 1] - ctr_y)
    inside = d <= radius + tol.eps
    cover = []
    for c in range(ps.k):
        idx = np.flatnonzero(inside & (colors == c))
        sub = xy[idx]
        pick = idx[np.lexsort((sub[:, 1], sub[:, 0]))[0]]
        cover.append(ps.points[int(pick)])
    return McscResult(circle, witness, cover)


def _exact_radius(xy, colors, k, eps):
    """Radius-only solve with closed-form shortcuts for k <= 2."""
    if k == 1:
        return 0.0
    if k == 2:
        a = xy[colors == 0]
        b = xy[colors == 1]
        d2 = ((a[:, None, :] - b[None, :, :]) ** 2).sum(axis=2)
        # the spanning circle must contain one point of each color, so the
        # optimum is exactly half of the closest cross-color distance
        return 0.5 * math.sqrt(float(d2.min()))
    return _enumerate_best(xy, colors, k, eps)[0]


def mcsc_radius(ps: PrecisePointSet, tol: Tolerance = DEFAULT_TOL) -> float:
    """Radius of the exact MCSC, skipping witness construction."""
    ps.validate()
    xy, colors = _arrays(ps.points)
    return _exact_radius(xy, colors, ps.k, tol.eps)


def batch_mcsc_radius(
    pts: np.ndarray, colors: np.ndarray, k: int, tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Exact MCSC radius of each realization in a (batch, n, 2) array."""
    count = len(pts)
    if k == 1:
        return np.zeros(count)
    if k == 2:
        a = pts[:, colors == 0, :]
        b = pts[:, colors == 1, :]
        out = np.empty(count)
        step = max(1, 2_000_000 // max(1, a.shape[1] * b.shape[1]))
        for s in range(0, count, step):
            d2 = ((a[s : s + step, :, None, :] - b[s : s + step, None, :, :]) ** 2).sum(-1)
            out[s : s + step] = 0.5 * np.sqrt(d2.min(axis=(1, 2)))
        return out
    return np.array([_exact_radius(pts[s], colors, k, tol.eps) for s in range(count)])


def feasible(c: Circle, ps: PrecisePointSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff every color of ``ps`` has a point inside the closed circle."""
    if not ps.points:
        return ps.k == 0
    xy, colors = _arrays(ps.points)
    inside = np.hypot(xy[:, 0] - c.center[0], xy[:, 1] - c.center[1]) <= c.radius + tol.eps
    return all(bool(inside[colors == col].any()) for col in range(ps.k))


def mcsc_grid_oracle(ps: PrecisePointSet, resolution: float) -> tuple[float, float]:
    """Bracket ``[lo, hi]`` around the exact MCSC radius, solver-free.

    Evaluates f(x) = max over colors of the distance from x to the nearest
    point of that color, on a grid of pitch ``resolution`` covering the
    bounding box of ``ps`` inflated by the box diameter on every side.
    f is 1-Lipschitz and minimized at the optimal center, which lies in the
    covered region, so with m = min f over the grid:

        lo = m - resolution * sqrt(2) / 2   <=   exact radius   <=   m = hi
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    ps.validate()
    xy, colors = _arrays(ps.points)
    h = float(resolution)
    minx, miny = xy.min(axis=0)
    maxx, maxy = xy.max(axis=0)
    diam = math.hypot(maxx - minx, maxy - miny)
    x0, y0 = minx - diam, miny - diam
    nx = int(math.ceil((maxx + diam - x0) / h)) + 1
    ny = int(math.ceil((maxy + diam - y0) / h)) + 1
    xs = x0 + h * np.arange(nx)
    groups = [xy[colors == c] for c in range(ps.k)]
    # squared x-offsets are row-independent: precompute once per point
    dx2 = [[(xs - px) ** 2 for px, _ in pts] for pts in groups]
    best = math.inf
    rows_per = max(1, 4_000_000 // max(1, nx))
    for s in range(0, ny, rows_per):
        ys = y0 + h * np.arange(s, min(ny, s + rows_per))
        worst = None
        for pts, dx2_group in zip(groups, dx2):
            nearest = None
            for (_, py), ddx2 in zip(pts, dx2_group):
                d2 = ddx2[None, :] + ((ys - py) ** 2)[:, None]
                nearest = d2 if nearest is None else np.minimum(nearest, d2)
            worst = nearest if worst is None else np.maximum(worst, nearest)
        best = min(best, float(worst.min()))
    hi = math.sqrt(best)
    return hi - h * math.sqrt(2.0) / 2.0, hi
