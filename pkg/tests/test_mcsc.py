import math

import numpy as np
import pytest

from conftest import random_points
from chromacircle import (
    Circle,
    ColoredPoint,
    EmptyInput,
    MissingColor,
    Point,
    PrecisePointSet,
    feasible,
    mcsc_exact,
    mcsc_grid_oracle,
    mcsc_radius,
)


def cp(x, y, c):
    return ColoredPoint(Point(x, y), c)


def test_single_point():
    res = mcsc_exact(PrecisePointSet([cp(0, 0, 0)], 1))
    assert res.circle == Circle(Point(0.0, 0.0), 0.0)
    assert res.per_color_cover == [cp(0, 0, 0)]


def test_diametral_pair():
    ps = PrecisePointSet([cp(0, 0, 0), cp(1, 0, 1)], 2)
    res = mcsc_exact(ps)
    assert res.circle == Circle(Point(0.5, 0.0), 0.5)
    assert len(res.witness) == 2
    assert feasible(res.circle, ps)


def test_equilateral_triple():
    ps = PrecisePointSet([cp(0, 0, 0), cp(1, 0, 1), cp(0.5, math.sqrt(3) / 2, 2)], 3)
    res = mcsc_exact(ps)
    assert res.circle.radius == pytest.approx(1 / math.sqrt(3), abs=1e-12)
    assert res.circle.center.x == pytest.approx(0.5, abs=1e-12)
    assert res.circle.center.y == pytest.approx(math.sqrt(3) / 6, abs=1e-12)
    assert len(res.witness) == 3


def test_feasible_examples():
    ps = PrecisePointSet([cp(0, 0, 0), cp(1, 0, 1)], 2)
    assert feasible(Circle(Point(0.5, 0), 0.5), ps)
    assert not feasible(Circle(Point(0, 0), 0.4), ps)
    assert not feasible(Circle(Point(0.5, 0), 0.5 - 1e-6), ps)


def test_validation_errors():
    with pytest.raises(EmptyInput):
        mcsc_exact(PrecisePointSet([], 0))
    with pytest.raises(MissingColor) as exc:
        mcsc_exact(PrecisePointSet([cp(0, 0, 0), cp(1, 1, 2)], 3))
    assert exc.value.color == 1


def test_radius_fast_path_matches_enumeration():
    rng = np.random.default_rng(5)
    for k in (2, 3):
        for _ in range(20):
            ps = random_points(rng, int(rng.integers(k, 12)), k)
            assert mcsc_radius(ps) == pytest.approx(
                mcsc_exact(ps).circle.radius, abs=1e-12
            )


def test_duplicate_points_coincident_colors():
    # all colors stacked on one location: radius 0 there
    ps = PrecisePointSet([cp(2, 3, 0), cp(2, 3, 1), cp(2, 3, 2), cp(9, 9, 0)], 3)
    res = mcsc_exact(ps)
    assert res.circle == Circle(Point(2.0, 3.0), 0.0)


def test_grid_oracle_two_points():
    ps = PrecisePointSet([cp(0, 0, 0), cp(1, 0, 1)], 2)
    lo, hi = mcsc_grid_oracle(ps, 0.01)
    assert lo <= 0.5 <= hi
    assert hi - lo == pytest.approx(0.01 * math.sqrt(2) / 2, abs=1e-12)


def test_grid_oracle_single_point():
    lo, hi = mcsc_grid_oracle(PrecisePointSet([cp(4, 2, 0)], 1), 0.25)
    assert lo <= 0.0 <= hi


def test_grid_oracle_equilateral():
    ps = PrecisePointSet([cp(0, 0, 0), cp(1, 0, 1), cp(0.5, math.sqrt(3) / 2, 2)], 3)
    lo, hi = mcsc_grid_oracle(ps, 0.005)
    assert lo <= 1 / math.sqrt(3) <= hi


def test_exact_within_oracle_bracket_10x10():
    rng = np.random.default_rng(77)
    ps = random_points(rng, 12, 3, width=10.0)
    r = mcsc_exact(ps).circle.radius
    lo, hi = mcsc_grid_oracle(ps, 0.005)
    assert lo - 1e-9 <= r <= hi + 1e-9


def test_determinism_under_permutation():
    rng = np.random.default_rng(13)
    ps = random_points(rng, 14, 3)
    base = mcsc_exact(ps).circle
    for seed in range(4):
        perm = np.random.default_rng(seed).permutation(len(ps.points))
        shuffled = PrecisePointSet([ps.points[i] for i in perm], ps.k)
        c = mcsc_exact(shuffled).circle
        assert c == base  # bit-identical radius and center


def test_monotonicity():
    rng = np.random.default_rng(21)
    for _ in range(10):
        ps = random_points(rng, 10, 3)
        r = mcsc_radius(ps)
        extra = ColoredPoint(
            Point(float(rng.uniform(0, 5)), float(rng.uniform(0, 5))),
            int(rng.integers(0, 3)),
        )
        grown = PrecisePointSet(ps.points + [extra], 3)
        assert mcsc_radius(grown) <= r + 1e-12
        dropped = PrecisePointSet([p for p in ps.points if p.color != 2], 2)
        assert mcsc_radius(dropped) <= r + 1e-12


def test_global_optimality_probe():
    # f(x) = max over colors of min distance to that color is everywhere
    # at least the exact radius; check on random centers
    rng = np.random.default_rng(3)
    ps = random_points(rng, 12, 4)
    r = mcsc_radius(ps)
    xy = np.array([(p.point.x, p.point.y) for p in ps.points])
    colors = np.array([p.color for p in ps.points])
    probes = rng.uniform(-5.0, 10.0, (1000, 2))
    for q in probes:
        f = max(
            math.sqrt(((xy[colors == c] - q) ** 2).sum(axis=1).min()) for c in range(4)
        )
        assert f >= r - 1e-9


def test_result_cover_and_witness_contained():
    rng = np.random.default_rng(42)
    for _ in range(10):
        ps = random_points(rng, 13, 4)
        res = mcsc_exact(ps)
        assert feasible(res.circle, ps)
        assert len(res.per_color_cover) == 4
        for c, p in enumerate(res.per_color_cover):
            assert p.color == c
            assert math.hypot(
                p.point.x - res.circle.center.x, p.point.y - res.circle.center.y
            ) <= res.circle.radius + 1e-9
        assert 1 <= len(res.witness) <= 3
