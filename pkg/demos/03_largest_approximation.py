"""Approximating the largest spanning circle an adversary can force.

Maximizing the MCSC over realizations is NP-hard, so the package ships a
certified approximation instead: every answer carries a Certificate
relating the achieved radius to the universal upper bound r_c + 1/2.
The factor is provably >= 1/3, improving to >= 1/2 when no two disks of
different colors intersect.  A seeded sampling oracle gives an
independent lower bound on what the adversary can actually do.
"""

import numpy as np

from chromacircle import (
    ColoredDisk,
    Instance,
    Point,
    is_color_disjoint,
    lmcsc_approx,
    lmcsc_sampling_oracle,
    upper_bound,
)


def show(tag, inst):
    res = lmcsc_approx(inst)
    c = res.certificate
    print(f"  {tag}: branch={c.branch!r} r_c={c.r_c:.4f} upper={c.upper:.4f} "
          f"achieved={c.achieved:.4f} factor={c.factor:.4f}")
    return res


print("== the two branches ==")
show("far apart ", Instance([ColoredDisk(Point(0, 0), 0), ColoredDisk(Point(2, 0), 1)], 2))
show("concentric", Instance([ColoredDisk(Point(0, 0), 0), ColoredDisk(Point(0, 0), 1)], 2))
print("  (concentric disks force the rotated-grid realization: two colors")
print("   snapped to a half-unit lattice can never be closer than 1/2,")
print("   so the spanning radius is at least 1/4 no matter what)")

print()
print("== random instances keep the certificate honest ==")
rng = np.random.default_rng(123)
worst = 1.0
for _ in range(200):
    k = int(rng.integers(2, 5))
    n = int(rng.integers(k, 30))
    colors = np.concatenate([np.arange(k), rng.integers(0, k, n - k)])
    rng.shuffle(colors)
    disks = [
        ColoredDisk(Point(float(x), float(y)), int(c))
        for (x, y), c in zip(rng.uniform(0, 8, (n, 2)), colors)
    ]
    cert = lmcsc_approx(Instance(disks, k)).certificate
    worst = min(worst, cert.factor)
    assert cert.factor >= 1 / 3 - 1e-9
print(f"  200 instances, worst certified factor: {worst:.4f} (never below 1/3)")

print()
print("== color-disjoint instances get the better factor ==")
disks = []
rng = np.random.default_rng(5)
for idx, (i, j) in enumerate([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (2, 1)]):
    disks.append(
        ColoredDisk(
            Point(3.0 * i + float(rng.uniform(-0.5, 0.5)),
                  3.0 * j + float(rng.uniform(-0.5, 0.5))),
            idx % 3,
        )
    )
inst = Instance(disks, 3)
print(f"  disks pairwise separated, color-disjoint: {is_color_disjoint(inst)}")
res = show("disjoint  ", inst)
assert res.certificate.factor >= 0.5 - 1e-9

print()
print("== sandwiching the true optimum ==")
realization, sampled = lmcsc_sampling_oracle(inst, samples=2000, seed=9)
print(f"  sampling oracle lower bound : {sampled:.4f}")
print(f"  achieved by the approximation: {res.circle.radius:.4f}")
print(f"  universal upper bound        : {upper_bound(inst):.4f}")
assert sampled <= upper_bound(inst) + 1e-9
