"""Regular polygonal chains and their Fermat-Weber point on the symmetry axis.

A k-chain of a regular n-gon, C_n(k), is k consecutive vertices of the
n-gon inscribed in the unit circle. Every computation here happens in the
canonical frame: circumcenter at the origin, line of symmetry along the
positive x-axis. For odd k the root vertex sits at (1, 0).

Distances to the vertices are evaluated through half-angle sines,
``|(x, 0) - v|^2 = (1 - x)^2 + 4 x sin^2(phi/2)`` for a vertex at angle phi,
which keeps full relative precision for very large n where ``1 - cos(phi)``
would cancel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .geometry import ZERO_TOL, Point2

BISECTION_WIDTH = 1e-12


class InvalidChainError(ValueError):
    pass


@dataclass(frozen=True)
class RegularChain:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3 or not 1 <= self.k <= self.n:
            raise InvalidChainError(f"need n >= 3 and 1 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def m(self) -> int:
        return self.k // 2

    @property
    def is_odd(self) -> bool:
        return self.k % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    @cached_property
    def half_angles(self) -> tuple[float, ...]:
        """Angles of the upper vertices above the axis, nearest first."""
        if self.is_odd:
            return tuple(2 * i * math.pi / self.n for i in range(1, self.m + 1))
        return tuple((2 * i - 1) * math.pi / self.n for i in range(1, self.m + 1))

    @cached_property
    def _half_sines(self) -> tuple[float, ...]:
        # sin(phi/2) for each upper vertex
        if self.is_odd:
            return tuple(math.sin(i * math.pi / self.n) for i in range(1, self.m + 1))
        return tuple(math.sin((2 * i - 1) * math.pi / (2 * self.n)) for i in range(1, self.m + 1))

    @cached_property
    def vertices(self) -> tuple[Point2, ...]:
        """Vertices in counterclockwise order, starting from the lowest one."""
        upper = [Point2(math.cos(a), math.sin(a)) for a in self.half_angles]
        lower = [Point2(p.x, -p.y) for p in reversed(upper)]
        mid = [Point2(1.0, 0.0)] if self.is_odd else []
        return tuple(lower + mid + upper)

    @property
    def root_vertex(self) -> Point2:
        if not self.is_odd:
            raise InvalidChainError("even chains have no root vertex")
        return Point2(1.0, 0.0)


@dataclass(frozen=True)
class AxisSolveResult:
    x_star: float
    psi_star: float
    at_root: bool


def build_chain(n: int, k: int) -> RegularChain:
    return RegularChain(int(n), int(k))


def _check_domain(x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")


def objective(chain: RegularChain, x: float) -> float:
    """Sum of distances from (x, 0) to the chain vertices."""
    _check_domain(x)
    u = 1.0 - x
    terms = [2.0 * math.sqrt(u * u + 4.0 * x * h * h) for h in chain._half_sines]
    if chain.is_odd:
        terms.append(u)
    return math.fsum(terms)


def objective_derivative(chain: RegularChain, x: float) -> float:
    """d/dx of :func:`objective`."""
    _check_domain(x)
    u = 1.0 - x
    terms = []
    for h in chain._half_sines:
        r = math.sqrt(u * u + 4.0 * x * h * h)
        terms.append(2.0 * (2.0 * h * h - u) / r)
    if chain.is_odd:
        terms.append(-1.0)
    return math.fsum(terms)


def minimize_on_axis(chain: RegularChain) -> AxisSolveResult:
    """Minimize the strictly convex axis objective over [0, 1].

    The root-vertex case is settled before any iteration so that it comes
    back as exactly ``x_star == 1``. For k == 2 every point of the segment
    between the two vertices is optimal; the midpoint is returned.
    """
    if chain.k == 1:
        return AxisSolveResult(1.0, 0.0, True)
    if chain.k == 2:
        x = math.cos(math.pi / chain.n)
        return AxisSolveResult(x, objective(chain, x), False)

    if chain.is_odd and objective_derivative(chain, 1.0) <= ZERO_TOL:
        return AxisSolveResult(1.0, objective(chain, 1.0), True)
    if objective_derivative(chain, 0.0) >= -ZERO_TOL:
        return AxisSolveResult(0.0, objective(chain, 0.0), False)

    lo, hi = 0.0, 1.0
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        if objective_derivative(chain, mid) < 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    return AxisSolveResult(x, objective(chain, x), False)


def weber_point_chain(chain: RegularChain) -> Point2:
    return Point2(minimize_on_axis(chain).x_star, 0.0)
