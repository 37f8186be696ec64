import math
import random
from fractions import Fraction as F

import pytest

from halfcover.errors import CapExceeded, SubsetViolation
from halfcover.geometry import Point, convex_hull
from halfcover.kernel import (directional_width, is_epsilon_kernel,
                              optimal_kernel_bruteforce)

SQUARE = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]
SQUARE_C = SQUARE + [Point(F(1, 2), F(1, 2))]


def test_directional_width_examples():
    hull = convex_hull(SQUARE)
    assert directional_width(hull, (1, 0)) == 1
    assert directional_width(hull, (1, 1)) == 2
    assert directional_width(convex_hull([Point(3, 4)]), (5, -7)) == 0


def test_is_epsilon_kernel_examples():
    ok, _ = is_epsilon_kernel(SQUARE, SQUARE_C, F(1, 10))
    assert ok
    ok, u = is_epsilon_kernel([Point(0, 0), Point(1, 0), Point(0, 1)],
                              SQUARE_C, F(1, 10))
    assert not ok
    # at direction (1,1) the width ratio is 1/2 < 9/10
    assert directional_width(convex_hull([Point(0, 0), Point(1, 0), Point(0, 1)]), (1, 1)) \
        * 2 == directional_width(convex_hull(SQUARE_C), (1, 1))
    ok, _ = is_epsilon_kernel(SQUARE_C, SQUARE_C, F(999, 1000))
    assert ok


def test_subset_violation():
    with pytest.raises(SubsetViolation):
        is_epsilon_kernel([Point(9, 9)], SQUARE, F(1, 2))


def test_collinear_and_single():
    col = [Point(0, 0), Point(1, 1), Point(2, 2)]
    ok, _ = is_epsilon_kernel([Point(0, 0), Point(2, 2)], col, F(1, 2))
    assert ok
    ok, _ = is_epsilon_kernel([Point(0, 0), Point(1, 1)], col, F(1, 2))
    assert ok  # extent 1 >= (1/2) * 2
    ok, _ = is_epsilon_kernel([Point(0, 0), Point(1, 1)], col, F(1, 4))
    assert not ok
    ok, _ = is_epsilon_kernel([Point(5, 5)], [Point(5, 5), Point(5, 5)], F(1, 2))
    assert ok


def test_optimal_kernel_examples():
    sol = optimal_kernel_bruteforce(SQUARE_C, F(1, 10))
    assert sol.size == 4
    col = [Point(0, 0), Point(1, 1), Point(2, 2)]
    sol = optimal_kernel_bruteforce(col, F(1, 2))
    assert sol.size == 2
    assert is_epsilon_kernel([col[i] for i in sol.chosen], col, F(1, 2))[0]
    # a tighter epsilon forces the extremes
    sol = optimal_kernel_bruteforce(col, F(1, 4))
    assert sol.chosen == (0, 2)
    assert optimal_kernel_bruteforce([Point(7, -2)], F(1, 2)).size == 1
    with pytest.raises(CapExceeded):
        optimal_kernel_bruteforce([Point(i, 0) for i in range(20)], F(1, 2))


def test_epsilon_zero_edge():
    # a 0-kernel must reproduce every width exactly: the hull itself
    sol = optimal_kernel_bruteforce(SQUARE_C, 0)
    assert sol.size == 4
    ok, _ = is_epsilon_kernel(SQUARE, SQUARE_C, 0)
    assert ok


def test_monotone_in_subset():
    rnd = random.Random(8)
    for _ in range(120):
        n = rnd.randint(2, 9)
        Q = [Point(rnd.randint(-9, 9), rnd.randint(-9, 9)) for _ in range(n)]
        eps = F(rnd.randint(1, 8), 10)
        idx = sorted(rnd.sample(range(n), rnd.randint(1, n)))
        ok, _ = is_epsilon_kernel([Q[i] for i in idx], Q, eps)
        if ok and len(idx) < n:
            extra = sorted(set(idx) | {rnd.randrange(n)})
            ok2, _ = is_epsilon_kernel([Q[i] for i in extra], Q, eps)
            assert ok2


def sampled_kernel_check(subset, points, eps, directions=2000):
    """Float sampling reference: may miss violations, never invents them."""
    if not points:
        return True
    hp = convex_hull(subset) if subset else ()
    hq = convex_hull(points)
    for t in range(directions):
        ang = 2 * math.pi * t / directions
        u = (math.cos(ang), math.sin(ang))
        wq = max(u[0] * p.x + u[1] * p.y for p in hq) - \
            min(u[0] * p.x + u[1] * p.y for p in hq)
        if not hp:
            if wq > 1e-9:
                return False
            continue
        wp = max(u[0] * p.x + u[1] * p.y for p in hp) - \
            min(u[0] * p.x + u[1] * p.y for p in hp)
        if wp < (1 - float(eps)) * wq - 1e-9:
            return False
    return True


def test_exact_never_contradicted_by_sampling():
    rnd = random.Random(3)
    for _ in range(150):
        n = rnd.randint(1, 10)
        Q = [Point(rnd.randint(-9, 9), rnd.randint(-9, 9)) for _ in range(n)]
        eps = F(rnd.choice((1, 2, 4)), 10)
        idx = sorted(rnd.sample(range(n), rnd.randint(1, n)))
        subset = [Q[i] for i in idx]
        exact, _ = is_epsilon_kernel(subset, Q, eps)
        sampled = sampled_kernel_check(subset, Q, eps, directions=500)
        # sampling can only miss violations: exact True must never be refuted
        if exact:
            assert sampled
