import math
import random

import pytest

from fwchain.geometry import Point2
from fwchain.symmetry import SymmetricSpec, condition_a

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240601, help="seed for randomized tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_frame(rng):
    """Random circle center and pivot on the unit circle about it."""
    center = Point2(rng.uniform(-2, 2), rng.uniform(-2, 2))
    phi = rng.uniform(-math.pi, math.pi)
    return center + Point2(math.cos(phi), math.sin(phi)), center


def random_spec(rng, m=None, separation=1e-3):
    """Half-angles in (sep, pi - sep), pairwise at least ``separation`` apart.

    m defaults to 2..6: with a single pair every vertex of the triangle is a
    valid pivot, so the pivot cannot be recovered uniquely.
    """
    m = m or rng.randint(2, 6)
    while True:
        thetas = sorted(rng.uniform(separation, math.pi - separation) for _ in range(m))
        if all(b - a >= separation for a, b in zip(thetas, thetas[1:])):
            break
    pivot, center = random_frame(rng)
    return SymmetricSpec(pivot, center, tuple(thetas))


def spec_with_budget(rng, m, budget):
    """Spec whose half-angle sines sin(theta/2) sum to ``budget`` (< 1)."""
    while True:
        w = [rng.uniform(0.2, 1.0) for _ in range(m)]
        scale = budget / sum(w)
        s = sorted(x * scale for x in w)
        if all(b - a > 1e-4 for a, b in zip(s, s[1:])):
            break
    pivot, center = random_frame(rng)
    return SymmetricSpec(pivot, center, tuple(2 * math.asin(x) for x in s))


def satisfying_spec(rng, m):
    return spec_with_budget(rng, m, rng.uniform(0.02, 0.5))


def violating_spec(rng, m):
    while True:
        spec = random_spec(rng, m=m)
        if condition_a(spec) > 0:
            return spec


def slide_along_rays(rng, points, pivot, low=0.1, high=3.0):
    """Move every non-pivot point to a random distance from the pivot on its ray."""
    out = []
    for p in points:
        if p == pivot:
            out.append(p)
            continue
        d = (p - pivot).unit()
        out.append(pivot + d * rng.uniform(low, high))
    return out
