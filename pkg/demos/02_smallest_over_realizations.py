"""The smallest spanning circle an imprecise instance can achieve.

Each colored point is only known to lie in a closed unit-diameter disk.
Among all realizations (one point per disk), the smallest possible MCSC
has a closed form: the spanning radius of the disk centers minus the disk
radius, clamped at zero.  This script solves an instance, inspects the
witnessing realization, and fails to beat the optimum by random search.
"""

import numpy as np

from chromacircle import (
    ColoredDisk,
    Instance,
    Point,
    PrecisePointSet,
    batch_mcsc_radius,
    dist,
    mcsc_radius,
    sample_realizations,
    smcsc,
)

print("== two far-apart disks ==")
inst = Instance([ColoredDisk(Point(0, 0), 0), ColoredDisk(Point(2, 0), 1)], 2)
res = smcsc(inst)
print(f"  centers' spanning radius r_c = {res.centers_circle.radius}")
print(f"  optimal radius = r_c - 1/2  = {res.circle.radius}")
print(f"  witness points: {[tuple(p.point) for p in res.realization]}")

print()
print("== random instance: identity, witness, and a sampling challenge ==")
rng = np.random.default_rng(7)
colors = np.concatenate([np.arange(4), rng.integers(0, 4, 16)])
rng.shuffle(colors)
disks = [
    ColoredDisk(Point(float(x), float(y)), int(c))
    for (x, y), c in zip(rng.uniform(0, 8, (20, 2)), colors)
]
inst = Instance(disks, 4)
res = smcsc(inst)
r_c = res.centers_circle.radius
print(f"  r_c = {r_c:.6f}, optimum = max(0, r_c - 1/2) = {res.circle.radius:.6f}")

witness_radius = mcsc_radius(PrecisePointSet(res.realization, 4))
print(f"  the witness realization achieves {witness_radius:.6f}")
for d, p in zip(inst.disks, res.realization):
    assert dist(d.center, p.point) <= 0.5 + 1e-9  # stays inside its disk

pts = sample_realizations(inst, 2000, seed=1)
radii = batch_mcsc_radius(pts, np.array([d.color for d in disks]), 4)
print(f"  2000 random realizations: best attempt to go lower reaches "
      f"{radii.min():.6f} >= optimum")
assert radii.min() >= res.circle.radius - 1e-9

print()
print("== when disks of every color overlap, the optimum collapses ==")
inst = Instance([ColoredDisk(Point(0, 0), 0), ColoredDisk(Point(0.6, 0), 1)], 2)
res = smcsc(inst)
print(f"  r_c = {res.centers_circle.radius}, optimum = {res.circle.radius} "
      f"(a single point shared by both disks)")
