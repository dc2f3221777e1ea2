"""Reflection-symmetric point sets and membership in their extension family.

A reflection-symmetric set S has 2m + 1 points on a unit circle: a pivot
s_0 and m mirror pairs (s_i, s_i') about the line through the center and
s_0. Each pair is described by its half-angle theta_i, the central angle
between s_0 and s_i. The Weber point of S is the pivot iff
``2 * sum sin(theta_i / 2) - 1 <= 0`` (Condition A).

The extension of S consists of every set obtained by sliding the non-pivot
points along their lines through s_0 without crossing s_0. Unit vectors
toward the pivot never change under that sliding, so neither does the
verdict of Condition A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .geometry import (
    ZERO_TOL,
    DegenerateInputError,
    Point2,
    Ray,
    angle_between,
    as_points,
    bisector_direction,
    convex_hull,
    distance,
    polar_angle,
    radial_sort,
    ray_circle_intersection,
)

BISECTOR_TOL = 1e-9
RADIAL_TIE_TOL = 1e-12


class ParityError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricSpec:
    pivot: Point2
    center: Point2
    half_angles: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "half_angles", tuple(float(t) for t in self.half_angles))
        if not self.half_angles:
            raise ValueError("a reflection-symmetric set needs at least one mirror pair")
        if abs(distance(self.pivot, self.center) - 1.0) > 1e-12:
            raise ValueError("pivot must lie on the unit circle about center")
        if any(not 0.0 < t < math.pi for t in self.half_angles):
            raise ValueError("half-angles must lie in (0, pi)")
        if any(b <= a for a, b in zip(self.half_angles, self.half_angles[1:])):
            raise ValueError("half-angles must be strictly increasing")

    @property
    def m(self) -> int:
        return len(self.half_angles)

    @property
    def k(self) -> int:
        return 2 * self.m + 1

    @property
    def axis(self) -> Point2:
        """Unit vector from the center toward the pivot."""
        return (self.pivot - self.center).unit()


@dataclass(frozen=True)
class DetectionReport:
    # axis_direction points from the reconstructed center toward the pivot
    is_extension_member: bool
    pivot: Point2 | None = None
    axis_direction: Point2 | None = None
    base_set: tuple[Point2, ...] | None = None
    condition_a_value: float | None = None
    weber_at_pivot: bool | None = None
    pivot_index: int | None = None
    spec: SymmetricSpec | None = None
    hull_size: int = 0
    candidates_tried: int = field(default=0, compare=False)


def materialize(spec: SymmetricSpec) -> list[Point2]:
    """Pivot first, then each pair as (upper, lower) in order of half-angle."""
    e1 = spec.axis
    e2 = Point2(-e1.y, e1.x)
    pts = [spec.pivot]
    for t in spec.half_angles:
        c, s = math.cos(t), math.sin(t)
        pts.append(spec.center + e1 * c + e2 * s)
        pts.append(spec.center + e1 * c - e2 * s)
    return pts


def condition_a(spec: SymmetricSpec) -> float:
    """``2 * sum sin(theta_i / 2) - 1``; the pivot is the Weber point iff <= 0."""
    return 2.0 * math.fsum(math.sin(0.5 * t) for t in spec.half_angles) - 1.0


def _try_pivot(pivot: Point2, others: list[Point2]):
    """(axis, center, spec, base points) if ``pivot`` works, else None."""
    m = len(others) // 2
    cx = math.fsum(p.x for p in others) / len(others)
    cy = math.fsum(p.y for p in others) / len(others)
    inward = Point2(cx, cy) - pivot
    if inward.norm() == 0.0:
        return None
    # Cut the angular order on the outward side so the cone of points is contiguous.
    cut = -inward.unit()
    ordered = radial_sort(pivot, others, start=cut)
    angles = [polar_angle(pivot, p, cut) for p in ordered]
    if any(b - a <= RADIAL_TIE_TOL for a, b in zip(angles, angles[1:])):
        return None

    bisectors = []
    for i in range(m):
        try:
            bisectors.append(bisector_direction(pivot, ordered[i], ordered[-1 - i]))
        except DegenerateInputError:
            return None
    if any(angle_between(b, bisectors[0]) > BISECTOR_TOL for b in bisectors[1:]):
        return None
    axis = Point2(math.fsum(b.x for b in bisectors), math.fsum(b.y for b in bisectors)).unit()

    # every point must sit strictly on the circle's side of the pivot
    dirs = [(p - pivot).unit() for p in ordered]
    if any(d.dot(axis) <= 0.0 for d in dirs):
        return None
    center = pivot + axis
    try:
        base = [ray_circle_intersection(Ray(pivot, d), center, 1.0) for d in dirs]
    except DegenerateInputError:
        return None

    to_pivot = pivot - center
    thetas = []
    for i in range(m):
        a = angle_between(base[i] - center, to_pivot)
        b = angle_between(base[-1 - i] - center, to_pivot)
        thetas.append(0.5 * (a + b))
    thetas.sort()
    try:
        spec = SymmetricSpec(pivot, center, tuple(thetas))
    except ValueError:
        return None
    return -axis, center, spec, base


def _validate(points: Sequence[Point2]) -> list[Point2]:
    pts = as_points(points)
    k = len(pts)
    if k % 2 == 0:
        raise ParityError(f"detection needs an odd number of points, got {k}")
    if k < 3:
        raise ValueError(f"detection needs at least 3 points, got {k}")
    if len(set(pts)) != k:
        raise DegenerateInputError("duplicate points")
    return pts


def extension_pivots(points: Sequence[Point2]) -> list[tuple[Point2, SymmetricSpec]]:
    """Every hull vertex that works as a pivot, with its rebuilt base spec.

    Hull vertices are visited counterclockwise from the lowest point. A
    candidate is rejected when two other points are collinear with it, since
    their mirror pairing would be ambiguous. With three points every vertex
    qualifies.
    """
    pts = _validate(points)
    out = []
    for pivot in convex_hull(pts):
        found = _try_pivot(pivot, [p for p in pts if p != pivot])
        if found is not None:
            out.append((pivot, found[2]))
    return out


def detect_extension(points: Sequence[Point2]) -> DetectionReport:
    """Decide whether ``points`` lies in the extension of a reflection-symmetric set.

    Membership is existential and one set can qualify for several pivots
    with different verdicts (any triangle; co-circular sets such as a regular
    chain, where each end vertex also works). The report keeps the accepted
    pivot with the smallest Condition A value, first in hull order on ties.
    The Weber point is unique, so ``weber_at_pivot`` is true iff the Weber
    point sits at some valid pivot.
    """
    pts = _validate(points)
    hull = convex_hull(pts)
    best = None
    for pivot in hull:
        found = _try_pivot(pivot, [p for p in pts if p != pivot])
        if found is None:
            continue
        value = condition_a(found[2])
        if best is None or value < best[0]:
            best = (value, pivot, found)
    if best is None:
        return DetectionReport(False, hull_size=len(hull), candidates_tried=len(hull))

    value, pivot, (axis, _center, spec, base) = best
    return DetectionReport(
        is_extension_member=True,
        pivot=pivot,
        axis_direction=axis,
        base_set=(pivot, *base),
        condition_a_value=value,
        weber_at_pivot=value <= ZERO_TOL,
        pivot_index=pts.index(pivot),
        spec=spec,
        hull_size=len(hull),
        candidates_tried=len(hull),
    )


def weber_at_pivot(points: Sequence[Point2]) -> bool:
    """Whether the Weber point of an extension-family member is its pivot."""
    report = detect_extension(points)
    if not report.is_extension_member:
        raise DegenerateInputError("point set is not in the extension of a reflection-symmetric set")
    return bool(report.weber_at_pivot)
