"""General halfplane coverage.

Dispatch: if some point is strictly outside every halfplane, the problem is a
cyclic analogue of the lower-only case (candidate arcs around that point);
otherwise at most three halfplanes cover the whole plane and the optimum is
settled by a one-cover hull query, a two-cover dual-envelope scan, and the
Helly certificate triple.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .cover1d import RankCircle, circular_point_cover
from .errors import EmptyInput
from .geometry import (ConvexRegion, Halfplane, HellyCertificate,
                       InteriorWitness, Line, Point, angle_key, convex_hull,
                       cross, dominated_flags, extreme_point_query,
                       generic_rotation, halfplane_intersection,
                       max_slack_point)
from .lower import solve_lower_only
from .rangetree import RangeOutsideTree, maximal_run
from .solution import CoverSolution, infeasible, optimal


# ---------------------------------------------------------------------------
# point/line duality: p = (p1, p2) <-> line y = p1*x - p2


def dual_line_of_point(p: Point) -> Line:
    return Line(p.x, -p.y)


def dual_point_of_line(l: Line) -> Point:
    if l.vertical:
        raise ValueError("vertical lines have no dual point")
    return Point(l.m, -l.t)


@dataclass(frozen=True)
class KRegionQuery:
    """Dual region of upper halfplanes covering everything one lower halfplane misses.

    Membership: dual point weakly above the upper envelope of the dual lines
    of the missed points; an empty missed set accepts everything.
    """

    envelope: Optional[object]  # EnvelopeChain | None


def build_k_region(missed_points: Sequence[Point]) -> KRegionQuery:
    if not missed_points:
        return KRegionQuery(None)
    from .geometry import upper_envelope

    lines = [dual_line_of_point(p) for p in missed_points]
    return KRegionQuery(upper_envelope(lines))


def k_region_membership(q: KRegionQuery, dual_pt: Point) -> bool:
    if q.envelope is None:
        return True
    return dual_pt.y >= q.envelope.value_at(dual_pt.x)


# ---------------------------------------------------------------------------
# tau* = 1 and tau* = 2


def solve_size_one(points, halfplanes) -> Optional[int]:
    """Smallest index of a halfplane containing every point, or None."""
    if not halfplanes:
        return None
    if not points:
        return 0
    hull = convex_hull(points)
    for i, h in enumerate(halfplanes):
        ex = extreme_point_query(hull, (h.a, h.b))
        if h.a * ex.x + h.b * ex.y <= h.c:
            return i
    return None


def solve_two_cover(points, halfplanes) -> Optional[Tuple[int, int]]:
    """A pair of halfplane indices whose union covers the points, or None.

    Tries lower+lower and upper+upper via the lower-only solver, then the
    mixed case by scanning, per lower halfplane, the dual envelope of the
    points it misses.  The returned pair is the first hit in (lower index,
    upper index) order; indices coincide only when one halfplane suffices.
    """
    if not halfplanes:
        return None
    if not points:
        return (0, 0)
    rot = generic_rotation(points, halfplanes)
    P, H = rot.points, rot.halfplanes
    lower = [i for i, h in enumerate(H) if h.b > 0]
    upper = [i for i, h in enumerate(H) if h.b < 0]

    if lower:
        sol = solve_lower_only(P, [H[i] for i in lower])
        if sol.is_optimal and 1 <= sol.size <= 2:
            idx = [lower[j] for j in sol.chosen]
            return (idx[0], idx[-1]) if len(idx) > 1 else (idx[0], idx[0])
    if upper:
        refl_pts = [Point(p.x, -p.y) for p in P]
        refl_hps = [Halfplane(H[i].a, -H[i].b, H[i].c) for i in upper]
        sol = solve_lower_only(refl_pts, refl_hps)
        if sol.is_optimal and 1 <= sol.size <= 2:
            idx = [upper[j] for j in sol.chosen]
            return (idx[0], idx[-1]) if len(idx) > 1 else (idx[0], idx[0])
    if lower and upper:
        for li in lower:
            hl = H[li]
            missed = [p for p in P if not hl.contains(p)]
            if not missed:
                return tuple(sorted((li, upper[0])))
            q = build_k_region(missed)
            for ui in upper:
                dp = dual_point_of_line(H[ui].boundary_line())
                if k_region_membership(q, dp):
                    return tuple(sorted((li, ui)))
    return None


# ---------------------------------------------------------------------------
# the interior case: cyclic candidate arcs around o


class _Fan:
    """Boundary edges of the complement region with spans and norms around o."""

    def __init__(self, region: ConvexRegion, o: Point):
        self.region = region
        self.o = o
        walks = []      # walk vector per edge, boundary order
        spans = []      # (d_from, d_to) ccw angular span per edge
        self.vertex_after = []  # region vertex shared by edge i and i+1 (None at the opening)
        V = region.vertices
        if region.kind == "polygon":
            k = len(V)
            for i in range(k):
                a, b = V[i], V[(i + 1) % k]
                walks.append((b.x - a.x, b.y - a.y))
                spans.append(((a.x - o.x, a.y - o.y), (b.x - o.x, b.y - o.y)))
                self.vertex_after.append(V[(i + 1) % k])
        elif region.kind == "chain":
            k = len(V)
            ds, de = region.dir_start, region.dir_end
            walks.append((-ds[0], -ds[1]))
            spans.append((ds, (V[0].x - o.x, V[0].y - o.y)))
            self.vertex_after.append(V[0])
            for i in range(1, k):
                a, b = V[i - 1], V[i]
                walks.append((b.x - a.x, b.y - a.y))
                spans.append(((a.x - o.x, a.y - o.y), (b.x - o.x, b.y - o.y)))
                self.vertex_after.append(V[i] if i < k else None)
            walks.append(de)
            spans.append(((V[-1].x - o.x, V[-1].y - o.y), de))
            self.vertex_after.append(None)  # the opening: no vertex
        elif region.kind == "halfplane":
            d = region.dir_end
            walks.append(d)
            spans.append(((-d[0], -d[1]), d))
            self.vertex_after.append(None)
        elif region.kind == "slab":
            d = region.dir_end
            walks.append(d)
            spans.append(((-d[0], -d[1]), d))
            self.vertex_after.append(None)
            walks.append((-d[0], -d[1]))
            spans.append((d, (-d[0], -d[1])))
            self.vertex_after.append(None)
        else:
            raise AssertionError(f"unexpected region kind {region.kind!r}")
        self.spans = spans
        self.norms = [(w[1], -w[0]) for w in walks]
        order = sorted(range(len(self.norms)), key=lambda i: angle_key(*self.norms[i]))
        self._order = order
        self._keys = [angle_key(*self.norms[i]) for i in order]

    def locate_vertex(self, direction) -> Optional[Point]:
        i = bisect_right(self._keys, angle_key(*direction)) - 1
        return self.vertex_after[self._order[i % len(self._order)]]


def interior_candidate_arcs(points, halfplanes, o: Point):
    """Angularly sorted points and the pruned candidate arcs around o.

    Returns (sorted_points, kept_indices, arcs); arcs carry original
    halfplane indices, at most three per halfplane: the normal-fan selection
    plus the runs at the two boundary directions of the halfplane's covered
    halfcircle (the latter catch runs wrapping the angular gap opposite the
    halfplane, which the fan selection provably misses).
    """
    n = len(points)
    flags = dominated_flags(halfplanes)
    kept = [i for i in range(len(halfplanes)) if not flags[i]]

    def full_key(p: Point):
        dx, dy = p.x - o.x, p.y - o.y
        ak = angle_key(dx, dy)
        return (*ak, dx * dx + dy * dy)

    order = sorted(range(n), key=lambda i: full_key(points[i]))
    pts = [points[i] for i in order]
    keys = [full_key(p) for p in pts]
    akeys = [k[:3] for k in keys]
    tree = RangeOutsideTree(pts, cyclic=True)

    region = halfplane_intersection([halfplanes[i].complement() for i in kept])
    if not region.is_full_dim:
        raise AssertionError("witness point must put the complement region in the full-dim case")
    fan = _Fan(region, o)
    edge_span_of = {}
    for e, src in enumerate(region.edge_sources):
        edge_span_of[src] = fan.spans[e]

    def find_in_span(d1, d2) -> Optional[int]:
        k1, k2 = angle_key(*d1), angle_key(*d2)
        i = bisect_left(keys, k1)
        if k1 <= k2:
            if i < n and akeys[i] <= k2:
                return i
            return None
        if i < n:
            return i
        if akeys[0] <= k2:
            return 0
        return None

    arcs = []
    for pos, hi_orig in enumerate(kept):
        h = halfplanes[hi_orig]
        anchors = []
        span = edge_span_of.get(pos)
        if span is not None:
            d1, d2 = span
            anchor = find_in_span(d1, d2)
            if anchor is None:
                k1 = angle_key(*d1)
                pl = (bisect_left(keys, k1) - 1) % n
                pr = bisect_left(keys, k1) % n
                if tree.covers(h, pl) and tree.covers(h, pr):
                    anchor = pl
            if anchor is not None:
                anchors.append(anchor)
        else:
            v = fan.locate_vertex((-h.a, -h.b))
            if v is None:
                raise AssertionError("norm located in the fan opening")
            val_o = h.a * o.x + h.b * o.y - h.c
            val_v = h.a * v.x + h.b * v.y - h.c
            if val_v < val_o:
                dirv = (v.x - o.x, v.y - o.y)
                key_hi = (*angle_key(*dirv), float("inf"))
                j = bisect_right(keys, key_hi)
                for cand in ((j - 1) % n, j % n):
                    if tree.covers(h, cand):
                        anchors.append(cand)
                        break
        # points covered by h all have directions in an open halfcircle; a run
        # adjacent to its boundary directions can wrap past the angular gap
        # opposite h, and no fan vertex selects it.  Anchor both extremes.
        for bd in ((h.b, -h.a), (-h.b, h.a)):
            j = bisect_right(keys, (*angle_key(*bd), float("inf")))
            for cand in ((j - 1) % n, j % n):
                if tree.covers(h, cand):
                    anchors.append(cand)
                    break
        seen_runs = set()
        for anchor in anchors:
            run = maximal_run(tree, anchor, h, hi_orig)
            if run is None:
                continue
            key = (run.start, run.end, run.full_circle)
            if key not in seen_runs:
                seen_runs.add(key)
                arcs.append(run)
    return pts, kept, arcs


def solve_nonempty_interior(points, halfplanes, o: Point) -> CoverSolution:
    """Exact optimum when o lies strictly outside every halfplane.

    Points are sorted counterclockwise around o (ties by distance); every
    halfplane contributes at most one candidate arc of consecutive points,
    and the circular-point solver finishes.
    """
    n = len(points)
    if n == 0:
        return optimal(())
    _pts, _kept, arcs = interior_candidate_arcs(points, halfplanes, o)
    sol = circular_point_cover(RankCircle(n), arcs)
    if not sol.is_optimal:
        raise AssertionError("candidate arcs must cover when every point is covered")
    return optimal(sorted({arcs[p].halfplane for p in sol.chosen}))


# ---------------------------------------------------------------------------
# full dispatch


def solve_general(points, halfplanes) -> CoverSolution:
    """Exact minimum halfplane cover of a planar point set."""
    if not points:
        return optimal(())
    if not halfplanes:
        return infeasible(0)
    for idx, p in enumerate(points):
        if not any(h.contains(p) for h in halfplanes):
            return infeasible(idx)
    res = max_slack_point(halfplanes)
    if isinstance(res, InteriorWitness):
        return solve_nonempty_interior(points, halfplanes, res.point)
    one = solve_size_one(points, halfplanes)
    if one is not None:
        return optimal((one,))
    pair = solve_two_cover(points, halfplanes)
    if pair is not None:
        return optimal(sorted(set(pair)))
    assert isinstance(res, HellyCertificate) and len(res.indices) == 3
    return optimal(sorted(res.indices))
