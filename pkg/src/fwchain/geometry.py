"""Planar primitives: points, hulls, radial order, bisectors, ray/circle hits."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

# Absolute tolerances at unit-circle scale.
COLLINEAR_TOL = 1e-12
UNIT_TOL = 1e-12
# Float rounding of an exact zero in sign tests (e.g. 2*sin(pi/6) - 1).
ZERO_TOL = 1e-13


class DegenerateInputError(ValueError):
    """Input geometry for which the requested construction is undefined."""


@dataclass(frozen=True, slots=True)
class Point2:
    """A point (or free vector) in the plane."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates: ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> Point2:
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def dot(self, other: Point2) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point2) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> Point2:
        r = self.norm()
        if r == 0.0:
            raise DegenerateInputError("cannot normalize the zero vector")
        return Point2(self.x / r, self.y / r)

    def rotated(self, angle: float) -> Point2:
        c, s = math.cos(angle), math.sin(angle)
        return Point2(c * self.x - s * self.y, s * self.x + c * self.y)


@dataclass(frozen=True, slots=True)
class Ray:
    origin: Point2
    direction: Point2

    def __post_init__(self) -> None:
        if abs(self.direction.norm() - 1.0) > UNIT_TOL:
            raise ValueError("ray direction must be a unit vector")

    @classmethod
    def through(cls, origin: Point2, target: Point2) -> Ray:
        return cls(origin, (target - origin).unit())

    def at(self, t: float) -> Point2:
        return self.origin + self.direction * t


def as_points(coords: Iterable[Sequence[float]]) -> list[Point2]:
    return [p if isinstance(p, Point2) else Point2(float(p[0]), float(p[1])) for p in coords]


def distance(a: Point2, b: Point2) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def orientation(o: Point2, a: Point2, b: Point2) -> float:
    """Twice the signed area of triangle o-a-b; positive when CCW."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Sequence[Point2]) -> list[Point2]:
    """Hull vertices in counterclockwise order (Andrew's monotone chain).

    The first vertex is the lowest point, leftmost among ties. Collinear
    boundary points are dropped, so coincident input yields one vertex and
    collinear input yields the two extreme endpoints.
    """
    if not points:
        raise ValueError("convex hull of an empty point set")
    pts = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(pts) == 1:
        return pts

    def half(seq):
        out: list[Point2] = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    # Tolerance is applied after the scan; inside it, near-ties in x can drop true vertices.
    changed = True
    while changed and len(hull) > 2:
        changed = False
        for i in range(len(hull)):
            if orientation(hull[i - 1], hull[i], hull[(i + 1) % len(hull)]) <= COLLINEAR_TOL:
                if len(hull) == 3:
                    # a flat triangle: every corner tests alike, keep the farthest pair
                    hull = list(max(itertools.combinations(hull, 2), key=lambda ab: distance(*ab)))
                else:
                    del hull[i]
                changed = True
                break
    start = min(range(len(hull)), key=lambda i: (hull[i].y, hull[i].x))
    return hull[start:] + hull[:start]


def polar_angle(pivot: Point2, p: Point2, start: Point2 | None = None) -> float:
    """CCW angle of ``p`` about ``pivot`` in [0, 2*pi), measured from ``start``.

    ``start`` defaults to the positive x direction.
    """
    v = p - pivot
    if start is None:
        a = math.atan2(v.y, v.x)
    else:
        a = math.atan2(start.cross(v), start.dot(v))
    return a + 2 * math.pi if a < 0 else a


def radial_sort(pivot: Point2, points: Sequence[Point2], start: Point2 | None = None) -> list[Point2]:
    """Sort ``points`` counterclockwise about ``pivot``; ties go nearest first."""
    for p in points:
        if p == pivot:
            raise DegenerateInputError("radial sort: a point coincides with the pivot")
    return sorted(points, key=lambda p: (polar_angle(pivot, p, start), distance(pivot, p)))


def bisector_direction(pivot: Point2, a: Point2, b: Point2) -> Point2:
    """Unit direction of the internal bisector of angle a-pivot-b."""
    if a == pivot or b == pivot:
        raise DegenerateInputError("bisector: arm endpoint coincides with the pivot")
    s = (a - pivot).unit() + (b - pivot).unit()
    if s.norm() <= COLLINEAR_TOL:
        raise DegenerateInputError("bisector undefined: pivot lies between a and b")
    return s.unit()


def angle_between(u: Point2, v: Point2) -> float:
    """Unsigned angle in [0, pi] between two nonzero vectors."""
    return math.atan2(abs(u.cross(v)), u.dot(v))


def ray_circle_intersection(ray: Ray, center: Point2, radius: float) -> Point2:
    """First point past the origin where ``ray`` meets the circle.

    A ray starting on the circle skips the trivial hit at its own origin and
    returns the opposite end of the chord.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    w = ray.origin - center
    b = ray.direction.dot(w)
    c = w.dot(w) - radius * radius
    disc = b * b - c
    if disc < 0:
        raise DegenerateInputError("ray misses the circle")
    root = math.sqrt(disc)
    # Roots of t^2 + 2bt + c; the stable pair avoids cancellation.
    if b > 0:
        q = -(b + root)
        ts = sorted((q, c / q) if q != 0 else (0.0, 0.0))
    else:
        q = -b + root
        ts = sorted((c / q, q) if q != 0 else (0.0, 0.0))
    eps = UNIT_TOL * max(1.0, radius)
    for t in ts:
        if t > eps:
            return ray.at(t)
    raise DegenerateInputError("no forward intersection between ray and circle")
