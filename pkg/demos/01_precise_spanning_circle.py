"""Exact minimum color spanning circles of precise points, cross-checked.

A minimum color spanning circle (MCSC) is the smallest circle containing
at least one point of every color.  The exact solver enumerates candidate
circles; the grid oracle brackets the optimum independently, so we can
watch the two agree without trusting either one alone.
"""

import math

import numpy as np

from chromacircle import (
    ColoredPoint,
    Point,
    PrecisePointSet,
    feasible,
    mcsc_exact,
    mcsc_grid_oracle,
)

print("== a tiny hand-made instance ==")
ps = PrecisePointSet(
    [
        ColoredPoint(Point(0.0, 0.0), 0),
        ColoredPoint(Point(1.0, 0.0), 1),
        ColoredPoint(Point(0.5, math.sqrt(3) / 2), 2),
    ],
    k=3,
)
res = mcsc_exact(ps)
print(f"three colors at the corners of a unit triangle")
print(f"  circle: center=({res.circle.center.x:.6f}, {res.circle.center.y:.6f}) "
      f"radius={res.circle.radius:.6f}  (circumradius 1/sqrt(3) = {1/math.sqrt(3):.6f})")
print(f"  witness points on the boundary: {len(res.witness)}")
print(f"  covers every color: {feasible(res.circle, ps)}")

print()
print("== random instance, bracketed by the independent grid oracle ==")
rng = np.random.default_rng(2024)
points = [
    ColoredPoint(Point(float(x), float(y)), int(c))
    for (x, y), c in zip(
        rng.uniform(0, 5, (12, 2)), np.concatenate([np.arange(3), rng.integers(0, 3, 9)])
    )
]
ps = PrecisePointSet(points, k=3)
res = mcsc_exact(ps)
lo, hi = mcsc_grid_oracle(ps, resolution=0.005)
print(f"  exact radius      : {res.circle.radius:.6f}")
print(f"  oracle bracket    : [{lo:.6f}, {hi:.6f}]  (width {hi - lo:.6f})")
assert lo - 1e-9 <= res.circle.radius <= hi + 1e-9
print("  exact value sits inside the bracket, as it must")

print()
print("== input order never matters ==")
base = mcsc_exact(ps).circle
for seed in range(3):
    perm = np.random.default_rng(seed).permutation(len(points))
    shuffled = PrecisePointSet([points[i] for i in perm], 3)
    assert mcsc_exact(shuffled).circle == base
print("  three shuffles, bit-identical circles")
