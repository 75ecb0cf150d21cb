import math

import numpy as np
import pytest

from chromacircle import (
    BLUE,
    CLAUSE_CORNER_OFFSET,
    RED,
    ColoredPoint,
    Point,
    clause_feasibility,
    dist,
    make_clause_gadget,
    make_stack,
    make_tightness_instance,
    pdelta_check,
    stack_extreme_realizations,
    stack_rigidity_probe,
)

DELTA = 9 / 8
ALL_CHOICES = [
    (a, b, c) for a in "tf" for b in "tf" for c in "tf"
]


def cross_distances(points):
    return [
        dist(p.point, q.point)
        for i, p in enumerate(points)
        for q in points[i + 1 :]
        if p.color != q.color
    ]


def test_make_stack_brb():
    s = make_stack(Point(0, 0), "BRB")
    assert [tuple(d.center) for d in s.disks] == [(0.0, 0.375), (0.0, 0.0), (0.0, -0.375)]
    assert [d.color for d in s.disks] == [BLUE, RED, BLUE]


def test_make_stack_rbr_translated():
    s = make_stack(Point(5, 5), "RBR")
    assert [tuple(d.center) for d in s.disks] == [(5.0, 5.375), (5.0, 5.0), (5.0, 4.625)]
    assert [d.color for d in s.disks] == [RED, BLUE, RED]


def test_stack_extremes_exact_points():
    s = make_stack(Point(0, 0), "BRB")
    ex = stack_extreme_realizations(s)
    assert [tuple(p.point) for p in ex.left] == [(0.4, 0.675), (-0.5, 0.0), (0.4, -0.675)]
    assert [tuple(p.point) for p in ex.right] == [(-0.4, 0.675), (0.5, 0.0), (-0.4, -0.675)]


@pytest.mark.parametrize("pattern", ["BRB", "RBR"])
@pytest.mark.parametrize("axis", [Point(0, 1), Point(1, 0), Point(0.6, 0.8), Point(3, -4)])
def test_stack_extremes_all_cross_distances_nine_eighths(pattern, axis):
    s = make_stack(Point(2.5, -1.25), pattern, axis=axis)
    ex = stack_extreme_realizations(s)
    for realization in (ex.left, ex.right):
        for d in cross_distances(realization):
            assert d == pytest.approx(DELTA, abs=1e-12)
        assert pdelta_check(realization, DELTA).passed


def test_stack_translation_equivariance():
    base = stack_extreme_realizations(make_stack(Point(0, 0), "BRB")).left
    moved = stack_extreme_realizations(make_stack(Point(7, -3), "BRB")).left
    for p, q in zip(base, moved):
        assert q.point.x - p.point.x == pytest.approx(7, abs=1e-12)
        assert q.point.y - p.point.y == pytest.approx(-3, abs=1e-12)


def test_two_far_stacks_pass_jointly():
    left_a = stack_extreme_realizations(make_stack(Point(0, 0), "BRB")).left
    left_b = stack_extreme_realizations(make_stack(Point(100, 0), "BRB")).left
    combined = list(left_a) + list(left_b)
    assert pdelta_check(combined, DELTA).passed


def test_pdelta_examples():
    ok = pdelta_check(
        [ColoredPoint(Point(0, 0), RED), ColoredPoint(Point(9 / 8, 0), BLUE)], DELTA
    )
    assert ok.passed and ok.min_cross_color_distance == DELTA
    bad = pdelta_check(
        [ColoredPoint(Point(0, 0), RED), ColoredPoint(Point(1, 0), BLUE)], DELTA
    )
    assert not bad.passed
    assert bad.violating_pair == (0, 1)
    same = pdelta_check(
        [ColoredPoint(Point(0, 0), RED), ColoredPoint(Point(0, 5), RED)], DELTA
    )
    assert same.passed and math.isinf(same.min_cross_color_distance)


def test_rigidity_probe_quick():
    s = make_stack(Point(0, 0), "BRB")
    assert stack_rigidity_probe(s, samples=20_000, seed=3, neighborhood=1e-3)
    # a generous neighborhood is vacuously fine
    assert stack_rigidity_probe(s, samples=2_000, seed=3, neighborhood=2.0)
    # relaxing the separation breaks the two-placement structure
    assert not stack_rigidity_probe(s, samples=20_000, seed=3, neighborhood=1e-3, delta=1.0)


def test_clause_gadget_geometry():
    cg = make_clause_gadget(Point(0, 0))
    circumradius = 3.5 / math.sqrt(3)
    for corner in cg.corners:
        assert dist(corner, cg.center) == pytest.approx(circumradius, abs=1e-12)
    for i in range(3):
        for j in range(i + 1, 3):
            assert dist(cg.corners[i], cg.corners[j]) == pytest.approx(3.5, abs=1e-12)
    for red, t, f, corner in zip(cg.disks[:3], cg.t_anchors, cg.f_anchors, cg.corners):
        assert red.color == RED
        assert dist(red.center, cg.center) == pytest.approx(
            circumradius - CLAUSE_CORNER_OFFSET, abs=1e-12
        )
        assert dist(t, cg.center) == pytest.approx(
            dist(red.center, cg.center) + 0.5, abs=1e-12
        )
        assert dist(f, cg.center) == pytest.approx(
            dist(red.center, cg.center) - 0.5, abs=1e-12
        )
        # anchors sit on the corner-center line
        area = abs(
            (corner.x - cg.center.x) * (t.y - cg.center.y)
            - (corner.y - cg.center.y) * (t.x - cg.center.x)
        )
        assert area <= 1e-12
    assert cg.disks[3].color == BLUE and tuple(cg.disks[3].center) == (0.0, 0.0)


def test_clause_translation_equivariance():
    base = make_clause_gadget(Point(0, 0))
    moved = make_clause_gadget(Point(10, 10))
    for a, b in zip(base.disks, moved.disks):
        assert b.center.x - a.center.x == pytest.approx(10, abs=1e-12)
        assert b.center.y - a.center.y == pytest.approx(10, abs=1e-12)


def test_clause_truth_table_quick():
    cg = make_clause_gadget(Point(0, 0))
    for choices in ALL_CHOICES:
        expected = choices != ("f", "f", "f")
        assert clause_feasibility(cg, choices, samples=500, seed=1, pitch=4e-3) == expected


def test_clause_offset_calibration_window():
    # the shipped corner offset works; values outside the admissible window
    # break the truth table on one side or the other
    assert not clause_feasibility(
        make_clause_gadget(Point(0, 0), 0.5), "fff", samples=500, seed=1, pitch=4e-3
    )
    # offset too small: red anchors too far out, (f,f,f) becomes satisfiable
    assert clause_feasibility(
        make_clause_gadget(Point(0, 0), 0.2), "fff", samples=500, seed=1, pitch=4e-3
    )
    # offset too large: red anchors crowd the blue disk, (t,f,f) fails
    assert not clause_feasibility(
        make_clause_gadget(Point(0, 0), 0.9), ("t", "f", "f"), samples=500, seed=1, pitch=4e-3
    )


def test_tightness_instance_covering():
    eps = 0.05
    inst = make_tightness_instance(eps, far_blue=4)
    reds = np.array(
        [tuple(d.center) for d in inst.disks if d.color == RED], dtype=float
    )
    # every possible location of the central blue point is within 2*eps of
    # some red center; check a dense sample of the closed unit-diameter disk
    theta = np.linspace(0.0, 2 * math.pi, 181)
    for radius in np.linspace(0.0, 0.5, 26):
        probe = np.stack([radius * np.cos(theta), radius * np.sin(theta)], axis=1)
        d = np.hypot(
            probe[:, None, 0] - reds[None, :, 0], probe[:, None, 1] - reds[None, :, 1]
        ).min(axis=1)
        assert (d <= 2 * eps + 1e-12).all()
    far = [d for d in inst.disks if d.color == BLUE and tuple(d.center) != (0.0, 0.0)]
    assert len(far) == 4
    assert all(dist(d.center, Point(0, 0)) >= 100.0 for d in far)


def test_tightness_grid_pitch():
    inst = make_tightness_instance(0.05, far_blue=0)
    reds = sorted(
        tuple(d.center) for d in inst.disks if d.color == RED
    )
    xs = sorted({x for x, _ in reds})
    gaps = {round(b - a, 12) for a, b in zip(xs, xs[1:])}
    assert gaps == {round(2 * math.sqrt(2) * 0.05, 12)}
