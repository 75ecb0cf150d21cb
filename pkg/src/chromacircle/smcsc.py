"""Smallest possible minimum color spanning circle over all realizations
of a colored unit-disk instance, with a witnessing realization.

The optimum has a closed form: take the MCSC of the disk centers (radius
``r_c``) and shrink it by the disk radius, clamping at zero.  Shrinking
stays feasible because every disk whose center the centers' circle covers
can reach inward by up to the disk radius; nothing smaller is possible,
since inflating a better solution back by the disk radius would beat the
centers' circle.  When ``r_c`` is at most the disk radius, the shrunk
circle degenerates to a point common to one disk of every color.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    DEFAULT_TOL,
    DISK_RADIUS,
    Circle,
    ColoredDisk,
    ColoredPoint,
    Tolerance,
    contains,
    pull_toward,
)
from .mcsc import McscResult, PrecisePointSet, mcsc_exact

__all__ = ["Instance", "SmcscResult", "center_points", "centers_mcsc", "smcsc"]


@dataclass(frozen=True)
class Instance:
    """A finite multiset of colored unit disks; colors are 0..k-1."""

    disks: list[ColoredDisk]
    k: int

    @classmethod
    def from_disks(cls, disks: list[ColoredDisk]) -> "Instance":
        k = max((d.color for d in disks), default=-1) + 1
        return cls(list(disks), k)

    def validate(self) -> None:
        from .mcsc import EmptyInput, MissingColor

        if not self.disks:
            raise EmptyInput("empty instance")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        seen: set[int] = set()
        for d in self.disks:
            if not 0 <= d.color < self.k:
                raise ValueError(f"color {d.color} outside [0, {self.k})")
            seen.add(d.color)
        for c in range(self.k):
            if c not in seen:
                raise MissingColor(c)


def center_points(inst: Instance) -> PrecisePointSet:
    """The disk centers as a precise colored point set, index-tagged."""
    pts = [ColoredPoint(d.center, d.color, i) for i, d in enumerate(inst.disks)]
    return PrecisePointSet(pts, inst.k)


def centers_mcsc(inst: Instance, tol: Tolerance = DEFAULT_TOL) -> McscResult:
    """Exact MCSC of the disk centers."""
    return mcsc_exact(center_points(inst), tol)


@dataclass(frozen=True)
class SmcscResult:
    """circle: the optimum over all realizations; realization: one point
    per disk achieving it; centers_circle: the MCSC of the disk centers."""

    circle: Circle
    realization: list[ColoredPoint]
    centers_circle: Circle


def smcsc(inst: Instance, tol: Tolerance = DEFAULT_TOL) -> SmcscResult:
    """Solve the smallest-case problem exactly.

    The returned radius is ``max(0, r_c - 1/2)`` where ``r_c`` is the
    centers' spanning radius.  Disks whose centers lie in the centers'
    circle contribute the in-disk point pulled toward its center by up to
    the disk radius; all other disks contribute their centers (any in-disk
    point would do; centers keep the construction deterministic).
    """
    inst.validate()
    centers_result = centers_mcsc(inst, tol)
    centers_circle = centers_result.circle
    r_opt = max(0.0, centers_circle.radius - DISK_RADIUS)
    realization = []
    for i, d in enumerate(inst.disks):
        if contains(centers_circle, d.center, tol):
            pt = pull_toward(d.center, centers_circle.center, DISK_RADIUS)
        else:
            pt = d.center
        realization.append(ColoredPoint(pt, d.color, i))
    return SmcscResult(Circle(centers_circle.center, r_opt), realization, centers_circle)
