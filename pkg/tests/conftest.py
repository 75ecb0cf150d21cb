"""Shared generators for randomized test corpora (all seeded by callers)."""

import numpy as np

from chromacircle import ColoredDisk, ColoredPoint, Instance, Point, PrecisePointSet


def random_instance(rng, n, k, width=8.0) -> Instance:
    """n uniform disks in [0, width]^2; every color in [0, k) present."""
    colors = np.concatenate([np.arange(k), rng.integers(0, k, n - k)])
    rng.shuffle(colors)
    xy = rng.uniform(0.0, width, (n, 2))
    disks = [
        ColoredDisk(Point(float(x), float(y)), int(c)) for (x, y), c in zip(xy, colors)
    ]
    return Instance(disks, k)


def random_points(rng, n, k, width=5.0) -> PrecisePointSet:
    colors = np.concatenate([np.arange(k), rng.integers(0, k, n - k)])
    rng.shuffle(colors)
    xy = rng.uniform(0.0, width, (n, 2))
    pts = [
        ColoredPoint(Point(float(x), float(y)), int(c)) for (x, y), c in zip(xy, colors)
    ]
    return PrecisePointSet(pts, k)


def clustered_instance(rng, n, k, radius=0.1, width=8.0) -> Instance:
    """All disk centers inside a disk of the given radius: forces the
    centers' spanning radius below 1/4 for radius < 1/4."""
    cx, cy = rng.uniform(1.0, width - 1.0, 2)
    colors = np.concatenate([np.arange(k), rng.integers(0, k, n - k)])
    rng.shuffle(colors)
    theta = rng.uniform(0.0, 2.0 * np.pi, n)
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    disks = [
        ColoredDisk(
            Point(float(cx + rr * np.cos(t)), float(cy + rr * np.sin(t))), int(c)
        )
        for rr, t, c in zip(r, theta, colors)
    ]
    return Instance(disks, k)


def disjoint_instance(rng, n, k) -> Instance:
    """Disks on a jittered coarse grid: every pairwise center distance is
    at least 3 - sqrt(2) > 1, so distinct-color disks never intersect."""
    assert n <= 36
    cells = [(i, j) for i in range(6) for j in range(6)]
    picks = rng.permutation(len(cells))[:n]
    colors = np.concatenate([np.arange(k), rng.integers(0, k, n - k)])
    rng.shuffle(colors)
    disks = []
    for c, p in zip(colors, picks):
        i, j = cells[int(p)]
        x = 3.0 * i + float(rng.uniform(-0.5, 0.5))
        y = 3.0 * j + float(rng.uniform(-0.5, 0.5))
        disks.append(ColoredDisk(Point(x, y), int(c)))
    return Instance(disks, k)
