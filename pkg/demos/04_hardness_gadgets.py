"""The rigid building blocks behind the hardness of the largest-case
problem, exercised end to end.

Everything here revolves around keeping red-blue point pairs at distance
at least 9/8.  Stacks admit exactly two such placements (a binary state),
a clause gadget is satisfiable unless all three of its red disks pick
their inner anchors (a 3-way OR), and the tightness instance shows the
1/4 grid floor cannot be improved.
"""

from chromacircle import (
    Point,
    batch_mcsc_radius,
    clause_feasibility,
    dist,
    make_clause_gadget,
    make_stack,
    make_tightness_instance,
    pdelta_check,
    sample_realizations,
    stack_extreme_realizations,
    stack_rigidity_probe,
)
import numpy as np

DELTA = 9 / 8

print("== stack of disks: a binary state ==")
stack = make_stack(Point(0, 0), "BRB")
ex = stack_extreme_realizations(stack)
print(f"  left placement : {[tuple(p.point) for p in ex.left]}")
print(f"  right placement: {[tuple(p.point) for p in ex.right]}")
for name, realization in (("left", ex.left), ("right", ex.right)):
    gaps = sorted(
        dist(p.point, q.point)
        for i, p in enumerate(realization)
        for q in realization[i + 1 :]
        if p.color != q.color
    )
    print(f"  {name}: cross-color distances {gaps} (all exactly 9/8)")
    assert pdelta_check(realization, DELTA).passed

print()
print("  probing rigidity with 100000 random placements:")
ok = stack_rigidity_probe(stack, samples=100_000, seed=0, neighborhood=1e-3)
print(f"    at separation 9/8 every surviving placement hugs an extreme: {ok}")
relaxed = stack_rigidity_probe(stack, samples=100_000, seed=0, neighborhood=1e-3, delta=1.0)
print(f"    relaxing the separation to 1.0 breaks the binary structure: {relaxed}")

print()
print("== clause gadget: a 3-way OR ==")
clause = make_clause_gadget(Point(0, 0))
print("  anchors chosen per red disk: t = outer, f = inner; the blue disk")
print("  must find a point at distance >= 9/8 from all three red points")
for a in "tf":
    for b in "tf":
        for c in "tf":
            sat = clause_feasibility(clause, (a, b, c), samples=1000, seed=1)
            print(f"    choices ({a},{b},{c}): {'satisfiable' if sat else 'UNSATISFIABLE'}")

print()
print("== tightness: the 1/4 floor is the best possible ==")
for epsilon in (0.05, 0.02):
    inst = make_tightness_instance(epsilon, far_blue=3)
    colors = np.array([d.color for d in inst.disks])
    pts = sample_realizations(inst, 500, seed=4)
    radii = batch_mcsc_radius(pts, colors, 2)
    print(f"  epsilon={epsilon}: {len(inst.disks)} disks, max sampled spanning "
          f"radius {radii.max():.4f} <= 1/4 + epsilon = {0.25 + epsilon}")
    assert radii.max() <= 0.25 + epsilon + 1e-6
