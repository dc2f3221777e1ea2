"""Iterative Fermat-Weber (geometric median) solver for planar point sets.

Weiszfeld's weighted-average iteration, started at the centroid. The update
is undefined at an input point, and the minimizer frequently *is* an input
point (the obtuse vertex of a wide triangle, the root vertex of a long odd
chain), so each step also checks the nearest input point with the exact
optimality test: input point ``a`` is the minimizer iff the resultant of
unit vectors from ``a`` to the other points has norm <= 1. A non-optimal
point that the iteration lands on is escaped along that resultant, as in the
Vardi-Zhang modification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import COLLINEAR_TOL, Point2, as_points


@dataclass(frozen=True)
class SolveConfig:
    tolerance: float = 1e-12
    max_iterations: int = 1_000_000
    vertex_snap_radius: float = 1e-9
    # slack on the anchor test for float noise around an exact tie
    anchor_tolerance: float = 1e-12

    def __post_init__(self) -> None:
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.vertex_snap_radius < 0:
            raise ValueError("vertex_snap_radius must be non-negative")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")


@dataclass(frozen=True)
class WeberSolution:
    location: Point2
    objective: float
    iterations: int
    converged: bool
    at_fixed_point_index: int | None = None


def _array(points: Sequence[Point2] | np.ndarray) -> np.ndarray:
    if isinstance(points, np.ndarray):
        arr = np.asarray(points, dtype=float)
    else:
        arr = np.array([tuple(p) for p in as_points(points)], dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("points must be an (n, 2) array of coordinates")
    if not np.isfinite(arr).all():
        raise ValueError("points must have finite coordinates")
    return arr


def sum_of_distances(points, location) -> float:
    arr = _array(points)
    return math.fsum(np.hypot(arr[:, 0] - location[0], arr[:, 1] - location[1]))


def _resultant(arr: np.ndarray, j: int) -> np.ndarray:
    diff = np.delete(arr, j, axis=0) - arr[j]
    d = np.hypot(diff[:, 0], diff[:, 1])
    mask = d > 0.0
    return (diff[mask] / d[mask, None]).sum(axis=0)


def descent_test_at_anchor(points, anchor_index: int) -> float:
    """``|sum of unit vectors from the anchor to the others| - 1``.

    Non-positive iff the anchor is the Fermat-Weber point. Exact duplicates
    of the anchor contribute nothing.
    """
    arr = _array(points)
    if not 0 <= anchor_index < len(arr):
        raise IndexError(f"anchor index {anchor_index} out of range")
    r = _resultant(arr, anchor_index)
    return float(math.hypot(r[0], r[1]) - 1.0)


def _collinear_direction(arr: np.ndarray) -> np.ndarray | None:
    """Unit direction of the common line if all points are collinear, else None."""
    base = arr[0]
    spread = arr - base
    far = int(np.argmax(np.hypot(spread[:, 0], spread[:, 1])))
    span = np.hypot(*spread[far])
    if span == 0.0:
        return np.array([1.0, 0.0])
    u = spread[far] / span
    off = np.abs(spread[:, 0] * u[1] - spread[:, 1] * u[0])
    return u if off.max() <= COLLINEAR_TOL * max(1.0, span) else None


def _solve_collinear(arr: np.ndarray, u: np.ndarray) -> np.ndarray:
    # 1-D median; for an even count the midpoint of the optimal segment.
    s = np.sort((arr - arr[0]) @ u)
    n = len(s)
    t = s[n // 2] if n % 2 else 0.5 * (s[n // 2 - 1] + s[n // 2])
    return arr[0] + t * u


def _escape_step(arr: np.ndarray, j: int, objective: float) -> np.ndarray | None:
    """Descent step away from non-optimal input point j, or None if none found."""
    a = arr[j]
    r = _resultant(arr, j)
    rn = math.hypot(r[0], r[1])
    if rn <= 1.0:
        return None
    others = np.delete(arr, j, axis=0) - a
    d = np.hypot(others[:, 0], others[:, 1])
    step = (rn - 1.0) / (1.0 / d[d > 0]).sum()
    direction = r / rn
    for _ in range(60):
        y = a + step * direction
        if sum_of_distances(arr, y) < objective:
            return y
        step *= 0.5
    return None


def solve_weber(points, config: SolveConfig | None = None, callback=None) -> WeberSolution:
    """Fermat-Weber point of a planar point set.

    Collinear input has no unique minimizer; the 1-D median is returned
    (midpoint of the median segment for an even count). ``callback``, if
    given, is called as ``callback(iteration, location, objective)`` after
    every accepted step.
    """
    config = config or SolveConfig()
    arr = _array(points)
    if len(arr) == 0:
        raise ValueError("cannot solve for an empty point set")

    def finish(y, it, converged, idx=None):
        loc = Point2(float(y[0]), float(y[1]))
        return WeberSolution(loc, sum_of_distances(arr, y), it, converged, idx)

    def anchored(j, it):
        return finish(arr[j], it, True, j)

    if len(arr) == 1:
        return anchored(0, 0)
    u = _collinear_direction(arr)
    if u is not None:
        y = _solve_collinear(arr, u)
        hit = np.flatnonzero(np.hypot(*(arr - y).T) == 0.0)
        return finish(y, 0, True, int(hit[0]) if len(hit) else None)

    y = arr.mean(axis=0)
    for it in range(1, config.max_iterations + 1):
        diff = arr - y
        d = np.hypot(diff[:, 0], diff[:, 1])
        j = int(np.argmin(d))
        if descent_test_at_anchor(arr, j) <= config.anchor_tolerance:
            return anchored(j, it)
        if d[j] <= config.vertex_snap_radius:
            y_new = _escape_step(arr, j, sum_of_distances(arr, arr[j]))
            if y_new is None:
                return anchored(j, it)
        else:
            w = 1.0 / d
            y_new = (w[:, None] * arr).sum(axis=0) / w.sum()
        moved = math.hypot(*(y_new - y))
        y = y_new
        if callback is not None:
            callback(it, y.copy(), sum_of_distances(arr, y))
        if moved < config.tolerance:
            return finish(y, it, True)
    return finish(y, config.max_iterations, False)
