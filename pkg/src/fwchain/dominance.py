"""The threshold N(k) past which the root vertex is the Fermat-Weber point.

For an odd chain k = 2m + 1 the Weber point of C_n(k) sits on the root vertex
iff ``2 * sum_{i=1..m} sin(i*pi/n) - 1 <= 0``. N(k) is the smallest n >= k
satisfying that, found here by binary search between k and an explicit
quadratic upper bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chain import build_chain, minimize_on_axis
from .geometry import ZERO_TOL


class EvenChainError(ValueError):
    """N(k) does not exist (is infinite) for even k."""

    def __init__(self, k: int):
        super().__init__(f"N(k) undefined (infinite) for even k (k={k})")
        self.k = k


@dataclass(frozen=True)
class ThresholdResult:
    k: int
    n_threshold: int
    certificate_low: float
    certificate_high: float
    iterations: int = 0


def _half(k: int) -> int:
    if k % 2 == 0:
        raise EvenChainError(k)
    if k < 3:
        raise ValueError(f"k must be an odd integer >= 3, got {k}")
    return (k - 1) // 2


def root_condition_direct(m: int, t: int) -> float:
    """``2 * sum sin(i*pi/t) - 1`` by explicit summation, O(m)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return 2.0 * math.fsum(math.sin(i * math.pi / t) for i in range(1, m + 1)) - 1.0


def root_condition_value(m: int, t: int) -> float:
    """``2 * sum_{i=1..m} sin(i*pi/t) - 1`` in O(1).

    Uses the Lagrange identity
    ``sum sin(i*a) = sin(m*a/2) * sin((m+1)*a/2) / sin(a/2)`` with a = pi/t.
    Monotone decreasing in t for t >= 2m.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if m < 1:
        return -1.0
    a = math.pi / (2 * t)
    return 2.0 * math.sin(m * a) * math.sin((m + 1) * a) / math.sin(a) - 1.0


def root_dominates(m: int, t: int) -> bool:
    # an exact zero (m=1, t=6) counts as dominated
    return root_condition_value(m, t) <= ZERO_TOL


def upper_bound(k: int) -> int:
    """ceil(pi*m*(m+1) + 1), an upper bound on N(2m+1)."""
    m = _half(k)
    return math.ceil(math.pi * m * (m + 1) + 1)


def compute_threshold(k: int) -> ThresholdResult:
    """N(k) by first-true binary search over [k, upper_bound(k)]."""
    m = _half(k)
    lo, hi = max(k, 2 * m), upper_bound(k)
    if not root_dominates(m, hi):
        raise ArithmeticError(f"upper bound {hi} does not satisfy the root condition for k={k}")
    iterations = 0
    while lo < hi:
        iterations += 1
        mid = (lo + hi) // 2
        if root_dominates(m, mid):
            hi = mid
        else:
            lo = mid + 1
    n = lo
    return ThresholdResult(
        k=k,
        n_threshold=n,
        certificate_low=root_condition_value(m, n - 1),
        certificate_high=root_condition_value(m, n),
        iterations=iterations,
    )


def verify_threshold_by_solver(k: int, n: int) -> bool:
    """Whether the axis solver puts the Weber point of C_n(k) on the root vertex."""
    _half(k)
    return minimize_on_axis(build_chain(n, k)).at_root
