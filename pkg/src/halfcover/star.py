"""Star-shaped polygon boundary coverage and the x-monotone polyline case.

The boundary-coverage problem reduces to covering a circle of directions
around the star center: each halfplane contributes at most one candidate
chord (through its edge on the complement intersection, or through the
intersection-region vertex selected by its normal), and the chords' angular
intervals feed the 1D circle solver.  Chords are computed by walking the
spoke triangulation of the polygon along the bounding line.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .cover1d import CyclicArc, circle_cover
from .errors import HalfplaneContainsCenter, InvalidInstance, NotStarShaped
from .geometry import (ConvexRegion, Halfplane, Line, Point, angle_key, cross,
                       dominated_flags, halfplane_intersection, orient,
                       upper_envelope)
from .solution import CoverSolution, infeasible, optimal


@dataclass(frozen=True)
class StarPolygon:
    """Simple polygon star-shaped around center; vertices counterclockwise."""

    center: Point
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        n = len(self.vertices)
        if n < 3:
            raise NotStarShaped("polygon needs at least 3 vertices")
        for i in range(n):
            a = self.vertices[i]
            b = self.vertices[(i + 1) % n]
            if orient(a, b, self.center) <= 0:
                raise NotStarShaped(
                    f"center is not strictly left of edge {i}; polygon is not "
                    "star-shaped around it")


@dataclass(frozen=True)
class Chord:
    """Maximal segment of a bounding line inside the polygon, with its arc.

    p_cw / p_ccw are the clockwise / counterclockwise endpoints as seen from
    the center; the covered directions sweep ccw from p_cw to p_ccw.
    """

    halfplane: int
    p_cw: Point
    p_ccw: Point

    def directions(self, o: Point):
        return ((self.p_cw.x - o.x, self.p_cw.y - o.y),
                (self.p_ccw.x - o.x, self.p_ccw.y - o.y))


class NormalFan:
    """Outward edge norms of the complement intersection, in ccw boundary order.

    locate(direction) returns the region vertex shared by the two edges whose
    norms bracket the direction (the basic interval's fan vertex).
    """

    def __init__(self, region: ConvexRegion):
        if region.kind != "polygon":
            raise InvalidInstance("normal fan needs a bounded full-dimensional region")
        self.region = region
        k = len(region.vertices)
        norms = []
        for i, src in enumerate(region.edge_sources):
            a = region.vertices[i]
            b = region.vertices[(i + 1) % k]
            ex, ey = b.x - a.x, b.y - a.y
            norms.append((ey, -ex))  # outward normal of a ccw edge
        order = sorted(range(k), key=lambda i: angle_key(*norms[i]))
        self._keys = [angle_key(*norms[i]) for i in order]
        self._order = order

    def locate(self, direction) -> Point:
        k = angle_key(*direction)
        i = bisect_right(self._keys, k) - 1
        edge = self._order[i % len(self._order)]
        # fan vertex of the interval starting at this edge's norm: the vertex
        # shared with the next boundary edge
        return self.region.vertices[(edge + 1) % len(self.region.vertices)]


# ---------------------------------------------------------------------------
# exact boundary checks


def _segment_meets_strict_outside(u: Point, v: Point, halfplanes) -> bool:
    """Does some point of segment uv lie strictly outside every halfplane?"""
    lo, lo_open = Fraction(0), False
    hi, hi_open = Fraction(1), False
    dx, dy = v.x - u.x, v.y - u.y
    for h in halfplanes:
        alpha = h.a * dx + h.b * dy
        beta = h.c - (h.a * u.x + h.b * u.y)
        # need a*(u + t d) > c  <=>  alpha * t > beta
        if alpha == 0:
            if not (0 > beta):
                return False
        elif alpha > 0:
            t = Fraction(beta) / Fraction(alpha)
            if t > lo or (t == lo and not lo_open):
                lo, lo_open = t, True
        else:
            t = Fraction(beta) / Fraction(alpha)
            if t < hi or (t == hi and not hi_open):
                hi, hi_open = t, True
    if lo > hi:
        return False
    if lo == hi and (lo_open or hi_open):
        return False
    return True


def verify_boundary_cover(poly: StarPolygon, halfplanes) -> bool:
    """Exact check: the union of the halfplanes covers the whole boundary."""
    if not halfplanes:
        return False
    n = len(poly.vertices)
    for i in range(n):
        u, v = poly.vertices[i], poly.vertices[(i + 1) % n]
        if _segment_meets_strict_outside(u, v, halfplanes):
            return False
    return True


def verify_polyline_cover(vertices: Sequence[Point], halfplanes) -> bool:
    """Exact check for coverage of every point of an x-monotone polyline."""
    if not vertices:
        return True
    if not halfplanes:
        return False
    if len(vertices) == 1:
        return not _segment_meets_strict_outside(vertices[0], vertices[0], halfplanes)
    for i in range(len(vertices) - 1):
        if _segment_meets_strict_outside(vertices[i], vertices[i + 1], halfplanes):
            return False
    return True


def check_feasible_star(poly: StarPolygon, halfplanes):
    """(feasible, region): feasible iff the open set uncovered by every
    halfplane misses the polygon boundary; region is the complement
    intersection."""
    o = poly.center
    for h in halfplanes:
        if h.contains(o):
            raise HalfplaneContainsCenter(f"{h} contains the center {o}")
    region = halfplane_intersection([h.complement() for h in halfplanes]) \
        if halfplanes else ConvexRegion("plane")
    n = len(poly.vertices)
    for i in range(n):
        u, v = poly.vertices[i], poly.vertices[(i + 1) % n]
        if _segment_meets_strict_outside(u, v, halfplanes):
            return False, region
    return True, region


# ---------------------------------------------------------------------------
# spoke-triangulation walk


class _StarWalker:
    """Spoke triangulation of the polygon; walks a line to its boundary exits."""

    def __init__(self, poly: StarPolygon):
        self.o = poly.center
        keys = [angle_key(v.x - self.o.x, v.y - self.o.y) for v in poly.vertices]
        shift = min(range(len(keys)), key=lambda i: keys[i])
        self.V = poly.vertices[shift:] + poly.vertices[:shift]
        self.keys = keys[shift:] + keys[:shift]
        self.n = len(self.V)

    def locate(self, direction) -> int:
        """Triangle index t with dir(V[t]) <= direction < dir(V[t+1]) cyclically."""
        i = bisect_right(self.keys, angle_key(*direction)) - 1
        return i % self.n

    def contains_on_ray(self, p: Point) -> bool:
        """Is p (known to differ from o) inside the polygon?"""
        t = self.locate((p.x - self.o.x, p.y - self.o.y))
        a, b = self.V[t], self.V[(t + 1) % self.n]
        return orient(a, b, p) >= 0

    def walk(self, w: Point, d, t: int, ccw: bool) -> Point:
        """Boundary exit of the chord from w along d, starting in triangle t.

        ccw tells which way d sweeps around the center (constant along the
        line); it decides which spoke is forward and how vertex crossings
        continue.
        """
        o = self.o
        n = self.n
        cur = w
        for _ in range(n + 3):
            A = self.V[t]
            B = self.V[(t + 1) % n]
            S = B if ccw else A  # forward spoke endpoint
            ux, uy = S.x - o.x, S.y - o.y
            ex, ey = B.x - A.x, B.y - A.y
            spoke = None  # (lam, s)
            den_s = cross(d[0], d[1], ux, uy)
            if den_s != 0:
                lam = Fraction(cross(ux, uy, cur.x - o.x, cur.y - o.y)) / den_s
                s = Fraction(cross(d[0], d[1], cur.x - o.x, cur.y - o.y)) / den_s
                if lam >= 0 and 0 < s <= 1:
                    spoke = (lam, s)
            edge = None  # lam
            den_e = cross(d[0], d[1], ex, ey)
            if den_e != 0:
                lam = Fraction(cross(ex, ey, cur.x - A.x, cur.y - A.y)) / den_e
                r = Fraction(cross(d[0], d[1], cur.x - A.x, cur.y - A.y)) / den_e
                if lam > 0 and 0 <= r <= 1:
                    edge = lam
                elif lam == 0 and 0 <= r <= 1 and cross(ex, ey, d[0], d[1]) < 0:
                    # already on the boundary edge with d pointing strictly outward
                    edge = lam
            if spoke is not None and (edge is None or spoke[0] <= edge):
                lam, s = spoke
                if s < 1:
                    cur = Point(cur.x + lam * d[0], cur.y + lam * d[1])
                    t = (t + 1) % n if ccw else (t - 1) % n
                    continue
                # through the boundary vertex S: continue iff d stays weakly inside
                if ccw:
                    C = self.V[(t + 2) % n]
                    inside = cross(C.x - B.x, C.y - B.y, d[0], d[1]) >= 0
                else:
                    P = self.V[(t - 1) % n]
                    inside = cross(A.x - P.x, A.y - P.y, d[0], d[1]) >= 0
                if inside:
                    cur = S
                    t = (t + 1) % n if ccw else (t - 1) % n
                    continue
                return S
            if edge is not None:
                return Point(cur.x + edge * d[0], cur.y + edge * d[1])
            raise AssertionError("chord walk found no exit")
        raise AssertionError("chord walk failed to terminate")


def _chord_through(walker: _StarWalker, h_idx: int, h: Halfplane, anchor: Point) -> Chord:
    o = walker.o
    wx, wy = anchor.x - o.x, anchor.y - o.y
    # direction along the bounding line; pick the ccw sense around o
    d = (h.b, -h.a)
    if cross(wx, wy, d[0], d[1]) < 0:
        d = (-h.b, h.a)
    t = walker.locate((wx, wy))
    p_ccw = walker.walk(anchor, d, t, ccw=True)
    p_cw = walker.walk(anchor, (-d[0], -d[1]), t, ccw=False)
    return Chord(h_idx, p_cw, p_ccw)


def candidate_arc_star(poly: StarPolygon, walker_or_none, h_idx: int, h: Halfplane,
                       region: ConvexRegion, fan: NormalFan,
                       region_edge: Optional[int]) -> Optional[Chord]:
    """Candidate chord of one halfplane, or None when undefined.

    region_edge is the region's edge index carried by h's bounding line, if any.
    """
    walker = walker_or_none or _StarWalker(poly)
    o = poly.center
    if region_edge is not None:
        k = len(region.vertices)
        a = region.vertices[region_edge]
        b = region.vertices[(region_edge + 1) % k]
        anchor = Point(Fraction(a.x + b.x, 2), Fraction(a.y + b.y, 2))
        return _chord_through(walker, h_idx, h, anchor)
    v = fan.locate((-h.a, -h.b))
    val_o = h.a * o.x + h.b * o.y - h.c
    val_v = h.a * v.x + h.b * v.y - h.c
    if val_v >= val_o:
        return None  # the ray from o through v never reaches the bounding line
    s = Fraction(val_o) / Fraction(val_o - val_v)
    vpp = Point(o.x + s * (v.x - o.x), o.y + s * (v.y - o.y))
    if not walker.contains_on_ray(vpp):
        return None
    return _chord_through(walker, h_idx, h, vpp)


# ---------------------------------------------------------------------------
# solvers


def solve_star_cover(poly: StarPolygon, halfplanes) -> CoverSolution:
    """Exact minimum subset of halfplanes covering the polygon boundary."""
    feasible, region = check_feasible_star(poly, halfplanes)
    if not feasible:
        n = len(poly.vertices)
        for i in range(n):
            u, v = poly.vertices[i], poly.vertices[(i + 1) % n]
            if _segment_meets_strict_outside(u, v, halfplanes):
                return infeasible(i)
    if region.kind != "polygon":
        raise AssertionError("feasible star instance must bound the complement region")
    flags = dominated_flags(halfplanes)
    kept = [i for i in range(len(halfplanes)) if not flags[i]]
    kept_region = halfplane_intersection([halfplanes[i].complement() for i in kept])
    if kept_region.kind != "polygon":
        raise AssertionError("dedup must preserve the complement region")
    fan = NormalFan(kept_region)
    edge_of = {src: e for e, src in enumerate(kept_region.edge_sources)}
    walker = _StarWalker(poly)
    chords: List[Chord] = []
    for pos, i in enumerate(kept):
        ch = candidate_arc_star(poly, walker, i, halfplanes[i], kept_region, fan,
                                edge_of.get(pos))
        if ch is not None:
            chords.append(ch)
    sol = _cover_directions(poly.center, chords)
    if not sol.is_optimal:
        raise AssertionError("candidate chords must cover a feasible boundary")
    return sol


def _cover_directions(o: Point, chords: Sequence[Chord]) -> CoverSolution:
    """Minimum chord subset whose arcs cover the full direction circle."""
    keys = {}
    for ch in chords:
        for dvec in ch.directions(o):
            keys.setdefault(angle_key(*dvec), None)
    ordered = sorted(keys)
    rank = {k: r for r, k in enumerate(ordered)}
    R = len(ordered)
    if R == 0:
        return infeasible(0)
    arcs = []
    for ch in chords:
        d1, d2 = ch.directions(o)
        arcs.append(CyclicArc(rank[angle_key(*d1)], rank[angle_key(*d2)], ch.halfplane))
    sol = circle_cover(R, arcs)
    if not sol.is_optimal:
        return sol
    return optimal(sorted({chords[p].halfplane for p in sol.chosen}))


def solve_polyline_cover(vertices: Sequence[Point], halfplanes) -> CoverSolution:
    """Exact minimum subset of lower halfplanes covering an x-monotone polyline."""
    for h in halfplanes:
        if h.b <= 0:
            raise InvalidInstance(f"not a lower halfplane: {h}")
    n = len(vertices)
    if n == 0:
        return optimal(())
    for i in range(n - 1):
        if not vertices[i].x < vertices[i + 1].x:
            raise InvalidInstance("polyline vertices must strictly increase in x")
    if not halfplanes:
        return infeasible(0)
    flags = dominated_flags(halfplanes)
    kept = [i for i in range(len(halfplanes)) if not flags[i]]
    hps = [halfplanes[i] for i in kept]
    lines = [Line(Fraction(-h.a, h.b), Fraction(h.c, h.b)) for h in hps]
    env = upper_envelope(lines, range(len(hps)))
    # feasibility needs the whole polyline under the union, not just the
    # vertices: the region below the envelope is not convex
    if n == 1:
        if _segment_meets_strict_outside(vertices[0], vertices[0], hps):
            return infeasible(0)
    for i in range(n - 1):
        if _segment_meets_strict_outside(vertices[i], vertices[i + 1], hps):
            return infeasible(i)

    xs = [v.x for v in vertices]
    x0, xN = xs[0], xs[-1]

    def poly_at(x):
        i = min(bisect_left(xs, x), n - 1)
        if xs[i] == x:
            return vertices[i].y
        a, b = vertices[i - 1], vertices[i]
        return a.y + Fraction(b.y - a.y) * Fraction(x - a.x) / Fraction(b.x - a.x)

    edge_of = {src: e for e, src in enumerate(env.sources)}
    intervals = []
    for k, h in enumerate(hps):
        e = edge_of.get(k)
        anchor = None
        if e is not None:
            lo = env.breaks[e - 1] if e > 0 else None
            hi = env.breaks[e] if e < len(env.breaks) else None
            lo = x0 if lo is None else max(lo, Fraction(x0))
            hi = xN if hi is None else min(hi, Fraction(xN))
            if lo <= hi:
                anchor = Fraction(lo + hi, 2)
        else:
            m = Fraction(-h.a, h.b)
            pos = bisect_left(env.slopes, m)
            vx = env.breaks[pos - 1]
            if x0 <= vx <= xN:
                line_v = Fraction(h.c - h.a * vx, h.b)
                if poly_at(vx) <= line_v:
                    anchor = vx
        if anchor is None:
            continue
        intervals.append((_poly_interval(vertices, xs, h, anchor), k))

    order = sorted(range(len(intervals)), key=lambda p: intervals[p][0][0])
    covered = Fraction(x0)
    ptr = 0
    best = None
    chosen = []
    while True:
        while ptr < len(order) and intervals[order[ptr]][0][0] <= covered:
            p = order[ptr]
            (lo, hi), k = intervals[p]
            key = (hi, -k, -p)  # furthest reach, then smaller halfplane, then position
            if best is None or key > best:
                best = key
            ptr += 1
        if best is None or best[0] < covered:
            raise AssertionError("feasible polyline instance must be greedily coverable")
        chosen.append(-best[2])
        reached = best[0]
        best = None
        if reached >= xN:
            break
        if reached == covered:
            raise AssertionError("feasible polyline instance must be greedily coverable")
        covered = reached
    return optimal(sorted({kept[intervals[p][1]] for p in chosen}))


def _poly_interval(vertices, xs, h: Halfplane, anchor):
    """Maximal x-interval around anchor where the polyline stays inside h.

    val(v) = c - a*x - b*y is linear along each polyline edge; the interval
    ends at the first zero crossing on each side of the anchor.
    """
    n = len(vertices)

    def val(v: Point):
        return h.c - (h.a * v.x + h.b * v.y)

    if n == 1:
        return (xs[0], xs[0])

    def cross_x(a: Point, b: Point):
        fa, fb = val(a), val(b)
        return a.x + Fraction(b.x - a.x) * Fraction(fa) / Fraction(fa - fb)

    jr = bisect_right(xs, anchor) - 1  # last vertex with x <= anchor
    hi = anchor
    e = min(jr, n - 2)
    while e <= n - 2:
        a, b = vertices[e], vertices[e + 1]
        if val(b) >= 0:
            hi = b.x
            e += 1
            continue
        cx = cross_x(a, b)
        if cx > hi:
            hi = cx
        break
    lo = anchor
    e = jr - 1 if xs[jr] == anchor else jr
    while e >= 0:
        a, b = vertices[e], vertices[e + 1]
        if val(a) >= 0:
            lo = a.x
            e -= 1
            continue
        cx = cross_x(a, b)
        if cx < lo:
            lo = cx
        break
    return (lo, hi)
