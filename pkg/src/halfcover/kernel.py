"""Exact epsilon-kernel verification and small-instance optimal kernels.

A subset is an epsilon-kernel when its hull's directional extent is at least
(1 - eps) of the full set's in every direction.  Between consecutive critical
directions (edge normals of either hull, both signs) both extents are linear
forms, so the extent ratio is monotone there and the exact decision only
evaluates the critical directions.  Degenerate hulls are settled directly on
their carrier line.
"""

from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .errors import CapExceeded, InvalidInstance, SubsetViolation
from .geometry import Point, convex_hull, extreme_point_query
from .solution import optimal


def directional_width(hull: Sequence[Point], direction) -> Fraction:
    """max<u,p> - min<u,p> over hull vertices (unnormalized in |u|)."""
    dx, dy = direction
    hi = extreme_point_query(hull, (dx, dy))
    lo = extreme_point_query(hull, (-dx, -dy))
    return (dx * hi.x + dy * hi.y) - (dx * lo.x + dy * lo.y)


def _edge_normals(hull: Sequence[Point]):
    """Outward normals of hull edges, both signs; degenerate hulls give the
    perpendiculars of their carrier."""
    k = len(hull)
    if k <= 1:
        return []
    out = []
    if k == 2:
        dx, dy = hull[1].x - hull[0].x, hull[1].y - hull[0].y
        out.extend([(dy, -dx), (-dy, dx)])
        return out
    for i in range(k):
        a, b = hull[i], hull[(i + 1) % k]
        dx, dy = b.x - a.x, b.y - a.y
        out.append((dy, -dx))
        out.append((-dy, dx))
    return out


def _validate_eps(eps):
    if not (0 <= eps < 1):
        raise InvalidInstance(f"epsilon must lie in [0, 1), got {eps}")


def is_epsilon_kernel(subset: Sequence[Point], points: Sequence[Point], eps) -> Tuple[bool, Optional[tuple]]:
    """Exact kernel decision; on failure also a violating direction."""
    _validate_eps(eps)
    universe = {(Fraction(p.x), Fraction(p.y)) for p in points}
    for q in subset:
        if (Fraction(q.x), Fraction(q.y)) not in universe:
            raise SubsetViolation(f"{q} is not a point of the ground set")
    if not points:
        return True, None
    if not subset:
        hull_q = convex_hull(points)
        if len(hull_q) == 1:
            return True, None
        a, b = hull_q[0], hull_q[1]
        return False, (b.x - a.x, b.y - a.y)
    hull_q = convex_hull(points)
    hull_p = convex_hull(subset)
    if len(hull_q) == 1:
        return True, None
    if len(hull_q) == 2:
        # collinear ground set: compare extents along the carrier
        u = (hull_q[1].x - hull_q[0].x, hull_q[1].y - hull_q[0].y)
        wq = directional_width(hull_q, u)
        wp = directional_width(hull_p, u)
        if wp >= (1 - Fraction(eps)) * wq:
            return True, None
        return False, u
    one_minus = 1 - Fraction(eps)
    for u in _edge_normals(hull_q) + _edge_normals(hull_p):
        wq = directional_width(hull_q, u)
        wp = directional_width(hull_p, u)
        if wq == 0:
            continue
        if wp < one_minus * wq:
            return False, u
    return True, None


def optimal_kernel_bruteforce(Q: Sequence[Point], eps, cap: int = 16):
    """Smallest kernel by exhaustive enumeration (lexicographically least witness).

    Returns a CoverSolution whose chosen holds the selected point indices.
    """
    _validate_eps(eps)
    n = len(Q)
    if n > cap:
        raise CapExceeded(f"|Q| = {n} exceeds the cap {cap}")
    if n == 0:
        return optimal(())
    for k in range(1, n + 1):
        for sub in combinations(range(n), k):
            ok, _ = is_epsilon_kernel([Q[i] for i in sub], Q, eps)
            if ok:
                return optimal(sub)
    raise AssertionError("the full set is always a kernel")


def solve_via_star_reduction(points: Sequence[Point], eps, reduction):
    """Plug point for the external reduction to star-shaped polygon coverage.

    reduction(points, eps) must return (poly, halfplanes, index_map) with
    poly a StarPolygon, halfplanes not containing its center, and
    index_map[j] the input-point index selected when halfplane j is chosen.
    The reduction is not shipped here; whether its output polygon always
    passes StarPolygon validation is up to the supplier.
    """
    from .star import solve_star_cover

    _validate_eps(eps)
    poly, halfplanes, index_map = reduction(points, eps)
    sol = solve_star_cover(poly, halfplanes)
    if not sol.is_optimal:
        return sol
    return optimal(sorted({index_map[j] for j in sol.chosen}))
