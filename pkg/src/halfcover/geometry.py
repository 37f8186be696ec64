"""Exact rational planar primitives.

Everything here computes with exact rationals (`int` / `fractions.Fraction`);
no solver-facing predicate ever rounds.  The module provides orientation
tests, convex hulls with logarithmic extreme-point queries, upper envelopes
of lines, a full halfplane-intersection with explicit degenerate kinds, the
slack dispatch (interior witness or a Helly certificate of at most three
halfplanes whose union covers the plane), and the rational rotation used to
establish general position.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import EmptyInput, GenericityFailure

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    def as_tuple(self):
        return (self.x, self.y)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right, 0 collinear."""
    v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (v > 0) - (v < 0)


def cross(ax, ay, bx, by):
    return ax * by - ay * bx


@dataclass(frozen=True)
class Line:
    """Non-vertical line y = m*x + t, or the vertical line x = t when `vertical`."""

    m: Scalar
    t: Scalar
    vertical: bool = False

    def value_at(self, x: Scalar) -> Scalar:
        if self.vertical:
            raise ValueError("vertical line has no y-value function")
        return self.m * x + self.t


LOWER = "lower"
UPPER = "upper"
VERTICAL = "vertical"


@dataclass(frozen=True)
class Halfplane:
    """Closed halfplane {(x, y) : a*x + b*y <= c}."""

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("halfplane needs a nonzero normal (a, b)")

    @property
    def orientation(self) -> str:
        if self.b > 0:
            return LOWER
        if self.b < 0:
            return UPPER
        return VERTICAL

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y <= self.c

    def strictly_excludes(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y > self.c

    def boundary_line(self) -> Line:
        """Bounding line; vertical halfplanes give a vertical Line."""
        if self.b == 0:
            return Line(0, Fraction(self.c, self.a) if isinstance(self.c, int) and isinstance(self.a, int) else self.c / self.a, vertical=True)
        m = -Fraction(self.a) / Fraction(self.b)
        t = Fraction(self.c) / Fraction(self.b)
        return Line(m, t)

    def complement(self) -> "Halfplane":
        """Closed complement {a*x + b*y >= c}, returned in <= form.

        The set-theoretic complement is open; callers that need strictness
        (the slack dispatch) handle it explicitly.
        """
        return Halfplane(-self.a, -self.b, -self.c)


# ---------------------------------------------------------------------------
# direction ordering


def angle_key(dx: Scalar, dy: Scalar):
    """Sortable key realizing counterclockwise angle order from the +x axis.

    Total order on direction classes; parallel same-sign vectors compare equal.
    """
    if dx == 0 and dy == 0:
        raise ValueError("zero vector has no direction")
    if dy > 0 or (dy == 0 and dx > 0):
        half = 0
    else:
        half = 1
    if dy == 0:
        return (half, 0, Fraction(0))
    return (half, 1, Fraction(-dx) / Fraction(dy))


def same_direction(ax, ay, bx, by) -> bool:
    return cross(ax, ay, bx, by) == 0 and ax * bx + ay * by > 0


# ---------------------------------------------------------------------------
# convex hull + extreme point queries


def convex_hull(points: Sequence[Point]):
    """Extreme points in counterclockwise order starting at the lexicographic minimum.

    Collinear interior points are excluded; degenerate inputs give the
    degenerate hull (1 or 2 points).
    """
    uniq = sorted({(p.x, p.y) for p in points})
    if not uniq:
        return tuple()
    if len(uniq) <= 2:
        return tuple(Point(x, y) for x, y in uniq)
    lower = []
    for pt in uniq:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    upper = []
    for pt in reversed(uniq):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    ring = lower[:-1] + upper[:-1]
    if len(ring) == 1:
        return (Point(*ring[0]),)
    if len(ring) == 2 and ring[0] == ring[1]:
        return (Point(*ring[0]),)
    return tuple(Point(x, y) for x, y in ring)


def _turn(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def extreme_point_query(hull: Sequence[Point], direction) -> Point:
    """Hull vertex maximizing dx*x + dy*y, ties toward the lexicographically smallest.

    O(log n) chain search on hulls from convex_hull (ccw from the lex-min vertex).
    """
    dx, dy = direction
    if dx == 0 and dy == 0:
        raise ValueError("degenerate direction")
    n = len(hull)
    if n == 0:
        raise EmptyInput("extreme_point_query on empty hull")
    if n <= 8:
        return _extreme_scan(hull, dx, dy)
    imax = max(range(n), key=lambda i: (hull[i].x, hull[i].y))
    if dy > 0 or (dy == 0 and dx < 0):
        chain = [hull[(imax + k) % n] for k in range(n - imax + 1)]
    else:
        chain = hull[: imax + 1]
    i = _peak_on_chain(chain, dx, dy)
    best = chain[i]
    bv = dx * best.x + dy * best.y
    for j in (i - 1, i + 1):
        if 0 <= j < len(chain):
            q = chain[j]
            qv = dx * q.x + dy * q.y
            if qv == bv and (q.x, q.y) < (best.x, best.y):
                best = q
    return best


def _extreme_scan(hull, dx, dy):
    best = hull[0]
    bv = dx * best.x + dy * best.y
    for q in hull[1:]:
        qv = dx * q.x + dy * q.y
        if qv > bv or (qv == bv and (q.x, q.y) < (best.x, best.y)):
            best, bv = q, qv
    return best


def _peak_on_chain(chain, dx, dy):
    lo, hi = 0, len(chain) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        a, b = chain[mid], chain[mid + 1]
        if dx * a.x + dy * a.y < dx * b.x + dy * b.y:
            lo = mid + 1
        else:
            hi = mid
    return lo


# ---------------------------------------------------------------------------
# upper envelope of lines


@dataclass(frozen=True)
class EnvelopeChain:
    """Upper envelope of non-vertical lines.

    Edge slopes strictly increase left to right; breaks[i] is the x where
    edges i and i+1 meet.  Each edge carries the index of a contributing line.
    """

    edges: tuple
    sources: tuple
    breaks: tuple

    def edge_index_at(self, x) -> int:
        return bisect_left(self.breaks, x)

    def value_at(self, x):
        e = self.edges[self.edge_index_at(x)]
        return e.m * x + e.t

    @property
    def slopes(self):
        return tuple(e.m for e in self.edges)


def upper_envelope(lines: Sequence[Line], sources: Optional[Sequence[int]] = None) -> EnvelopeChain:
    """Upper envelope (pointwise max) of non-vertical lines; dominated ones drop out."""
    if not lines:
        raise EmptyInput("upper_envelope of no lines")
    if sources is None:
        sources = range(len(lines))
    items = []
    for ln, src in zip(lines, sources):
        if ln.vertical:
            raise ValueError("upper_envelope needs non-vertical lines")
        items.append((Fraction(ln.m), Fraction(ln.t), src))
    # same slope: only the highest intercept can appear; keep smallest source on ties
    items.sort(key=lambda it: (it[0], -it[1], it[2]))
    dedup = []
    for it in items:
        if dedup and dedup[-1][0] == it[0]:
            continue
        dedup.append(it)
    stack = []  # entries (m, t, src); breaks computed on demand
    xs = []  # xs[i] = intersection of stack[i] and stack[i+1]
    for m, t, src in dedup:
        while stack:
            m0, t0, _ = stack[-1]
            x_new = Fraction(t0 - t, m - m0)
            if xs and x_new <= xs[-1]:
                stack.pop()
                xs.pop()
                continue
            xs.append(x_new)
            break
        stack.append((m, t, src))
    if len(stack) > 1 and len(xs) == len(stack):
        xs.pop()
    edges = tuple(Line(m, t) for m, t, _ in stack)
    srcs = tuple(s for _, _, s in stack)
    return EnvelopeChain(edges, srcs, tuple(xs))


def lower_envelope(lines: Sequence[Line], sources: Optional[Sequence[int]] = None) -> EnvelopeChain:
    """Pointwise min of lines, as an EnvelopeChain whose value_at gives the min."""
    neg = [Line(-ln.m, -ln.t) for ln in lines]
    env = upper_envelope(neg, sources)
    edges = tuple(Line(-e.m, -e.t) for e in env.edges)
    return EnvelopeChain(edges, env.sources, env.breaks)


# ---------------------------------------------------------------------------
# halfplane intersection


EMPTY = "empty"
POINT = "point"
SEGMENT = "segment"
RAY = "ray"
LINE_KIND = "line"
PLANE = "plane"
HALFPLANE_KIND = "halfplane"
SLAB = "slab"
POLYGON = "polygon"
CHAIN = "chain"

_FULL_DIM = {PLANE, HALFPLANE_KIND, SLAB, POLYGON, CHAIN}


@dataclass(frozen=True)
class ConvexRegion:
    """Intersection of closed halfplanes, with explicit degenerate taxonomy.

    kind: empty | point | segment | ray | line | plane | halfplane | slab |
          polygon | chain (full-dimensional, unbounded, connected boundary).

    polygon: vertices ccw; edge i runs vertices[i] -> vertices[i+1 mod k].
    chain:   boundary walked ccw (region on the left) enters from infinity
             along dir_start (pointing to infinity), passes the vertices,
             and leaves along dir_end; edge_sources has len(vertices)+1 items.
    halfplane: boundary line through vertices[0] with direction dir_end,
             region to the left of that direction.
    slab:    vertices holds one point on each boundary line; dir_end is the
             shared line direction with the region left of the first line.
    ray/line/segment/point: carrier data in vertices (+ dir_end for ray/line).
    """

    kind: str
    vertices: tuple = ()
    edge_sources: tuple = ()
    dir_start: Optional[tuple] = None
    dir_end: Optional[tuple] = None

    @property
    def is_full_dim(self) -> bool:
        return self.kind in _FULL_DIM

    @property
    def is_empty(self) -> bool:
        return self.kind == EMPTY

    def interior_point(self) -> Point:
        """A point strictly inside a full-dimensional region (deterministic)."""
        if self.kind == PLANE:
            return Point(0, 0)
        if self.kind == HALFPLANE_KIND:
            v = self.vertices[0]
            dx, dy = self.dir_end
            return Point(v.x - dy, v.y + dx)
        if self.kind == SLAB:
            v1, v2 = self.vertices
            return Point(Fraction(v1.x + v2.x, 2), Fraction(v1.y + v2.y, 2))
        if self.kind == POLYGON:
            a, b, c = self.vertices[0], self.vertices[1], self.vertices[2]
        elif self.kind == CHAIN:
            v0 = self.vertices[0]
            a = Point(v0.x + self.dir_start[0], v0.y + self.dir_start[1])
            b = v0
            if len(self.vertices) >= 2:
                c = self.vertices[1]
            else:
                c = Point(v0.x + self.dir_end[0], v0.y + self.dir_end[1])
        else:
            raise ValueError(f"no interior point for kind {self.kind!r}")
        return Point(Fraction(a.x + b.x + c.x, 3), Fraction(a.y + b.y + c.y, 3))

    def relint_point(self) -> Point:
        """A point in the relative interior of a nonempty region."""
        if self.kind == EMPTY:
            raise ValueError("empty region")
        if self.is_full_dim:
            return self.interior_point()
        if self.kind == POINT:
            return self.vertices[0]
        if self.kind == SEGMENT:
            a, b = self.vertices
            return Point(Fraction(a.x + b.x, 2), Fraction(a.y + b.y, 2))
        # ray / line
        v = self.vertices[0]
        if self.kind == RAY:
            return Point(v.x + self.dir_end[0], v.y + self.dir_end[1])
        return v


def halfplane_intersection(hs: Sequence[Halfplane]) -> ConvexRegion:
    """Exact common intersection of closed halfplanes (possibly empty/degenerate)."""
    region, _diag = _intersection_with_diagnostics(hs)
    return region


class _Diag:
    """Emptiness diagnostics: few constraint indices that already conflict."""

    def __init__(self):
        self.active: list = []


def _intersection_with_diagnostics(hs: Sequence[Halfplane]):
    diag = _Diag()
    floors, ceils = [], []
    floor_src, ceil_src = [], []
    xlo = xhi = None
    xlo_src = xhi_src = None
    for idx, h in enumerate(hs):
        a, b, c = h.a, h.b, h.c
        if b == 0:
            bound = Fraction(c) / Fraction(a)
            if a > 0:
                if xhi is None or bound < xhi:
                    xhi, xhi_src = bound, idx
            else:
                if xlo is None or bound > xlo:
                    xlo, xlo_src = bound, idx
        else:
            m = -Fraction(a) / Fraction(b)
            t = Fraction(c) / Fraction(b)
            if b > 0:
                ceils.append(Line(m, t))
                ceil_src.append(idx)
            else:
                floors.append(Line(m, t))
                floor_src.append(idx)

    if xlo is not None and xhi is not None and xlo > xhi:
        diag.active = [xlo_src, xhi_src]
        return ConvexRegion(EMPTY), diag

    f = upper_envelope(floors, floor_src) if floors else None
    g = lower_envelope(ceils, ceil_src) if ceils else None

    if f is None and g is None:
        return _no_lines_region(xlo, xhi, xlo_src, xhi_src), diag
    if f is None or g is None:
        return _one_envelope_region(f, g, xlo, xhi, xlo_src, xhi_src), diag
    return _two_envelope_region(f, g, xlo, xhi, xlo_src, xhi_src, diag)


def _no_lines_region(xlo, xhi, xlo_src, xhi_src):
    if xlo is None and xhi is None:
        return ConvexRegion(PLANE)
    if xlo is not None and xhi is not None:
        if xlo == xhi:
            return ConvexRegion(LINE_KIND, (Point(xlo, 0),), (xlo_src,), dir_end=(0, 1))
        # first boundary line x = xlo traversed with the region on its left
        return ConvexRegion(SLAB, (Point(xlo, 0), Point(xhi, 0)),
                            (xlo_src, xhi_src), dir_end=(0, -1))
    if xlo is not None:
        # region x >= xlo; boundary walked with region on the left: downward
        return ConvexRegion(HALFPLANE_KIND, (Point(xlo, 0),), (xlo_src,), dir_end=(0, -1))
    return ConvexRegion(HALFPLANE_KIND, (Point(xhi, 0),), (xhi_src,), dir_end=(0, 1))


def _chain_points(env: EnvelopeChain, lo, hi):
    """Vertices of an envelope restricted to [lo, hi] (None = unbounded side).

    Edge indices are chosen from inside the interval so that every reported
    edge has positive span even when lo/hi land exactly on breakpoints.
    """
    pts, srcs = [], []
    k = len(env.edges)
    i0 = 0 if lo is None else bisect_right(env.breaks, lo)
    i1 = k - 1 if hi is None else bisect_left(env.breaks, hi)
    if lo is not None:
        pts.append(Point(lo, env.edges[i0].value_at(lo)))
    for i in range(i0, i1):
        x = env.breaks[i]
        if (lo is None or x > lo) and (hi is None or x < hi):
            pts.append(Point(x, env.edges[i].value_at(x)))
    if hi is not None and (lo is None or hi > lo):
        pts.append(Point(hi, env.edges[i1].value_at(hi)))
    for i in range(i0, i1 + 1):
        srcs.append(env.sources[i])
    return pts, srcs, i0, i1


def _one_envelope_region(f, g, xlo, xhi, xlo_src, xhi_src):
    env = f if f is not None else g
    below = g is not None  # region is below g, or above f
    if xlo is not None and xlo == xhi:
        v = Point(xlo, env.value_at(xlo))
        d = (0, -1) if below else (0, 1)
        return ConvexRegion(RAY, (v,), (xlo_src,), dir_end=d)
    if xlo is None and xhi is None and len(env.edges) == 1:
        e = env.edges[0]
        v = Point(0, e.t)
        d = (-1, -e.m) if below else (1, e.m)
        return ConvexRegion(HALFPLANE_KIND, (v,), (env.sources[0],), dir_end=d)
    pts, srcs, i0, i1 = _chain_points(env, xlo, xhi)
    if below:
        # top boundary walked right-to-left
        pts = list(reversed(pts))
        srcs = list(reversed(srcs))
        if xhi is not None:
            dir_start = (0, -1)
            srcs = [xhi_src] + srcs
        else:
            dir_start = (1, env.edges[i1].m)
        if xlo is not None:
            dir_end = (0, -1)
            srcs = srcs + [xlo_src]
        else:
            dir_end = (-1, -env.edges[i0].m)
    else:
        if xlo is not None:
            dir_start = (0, 1)
            srcs = [xlo_src] + srcs
        else:
            dir_start = (-1, -env.edges[i0].m)
        if xhi is not None:
            dir_end = (0, 1)
            srcs = srcs + [xhi_src]
        else:
            dir_end = (1, env.edges[i1].m)
    if len(pts) == 0:
        raise AssertionError("one-envelope region lost its boundary")
    return ConvexRegion(CHAIN, tuple(pts), tuple(srcs), dir_start=dir_start, dir_end=dir_end)


def _gap_at(f, g, x):
    return g.value_at(x) - f.value_at(x)


def _gap_slope_at(f, g, x):
    """Slope of g - f on the piece containing x (probe strictly inside a piece)."""
    return g.edges[g.edge_index_at(x)].m - f.edges[f.edge_index_at(x)].m


def _gap_root_near(f, g, probe):
    """Zero of the linear piece of g - f containing probe (den != 0 required)."""
    fe = f.edges[f.edge_index_at(probe)]
    ge = g.edges[g.edge_index_at(probe)]
    return Fraction(fe.t - ge.t) / Fraction(ge.m - fe.m)


def _two_envelope_region(f, g, xlo, xhi, xlo_src, xhi_src, diag):
    # sample points: all envelope breakpoints inside the domain plus finite bounds
    knots = sorted(set(f.breaks) | set(g.breaks))
    samples = [x for x in knots
               if (xlo is None or x >= xlo) and (xhi is None or x <= xhi)]
    if xlo is not None and (not samples or samples[0] != xlo):
        samples.insert(0, xlo)
    if xhi is not None and (not samples or samples[-1] != xhi):
        samples.append(xhi)
    if not samples:
        samples = [Fraction(0)]
    vals = [_gap_at(f, g, x) for x in samples]

    # unbounded growth of the gap beyond the sampled range
    grow_left = xlo is None and _gap_slope_at(f, g, samples[0] - 1) < 0
    grow_right = xhi is None and _gap_slope_at(f, g, samples[-1] + 1) > 0

    best = max(range(len(samples)), key=lambda i: vals[i])
    gapmax = math.inf if (grow_left or grow_right) else vals[best]

    if gapmax != math.inf and gapmax < 0:
        diag.active = _empty_actives(f, g, samples[best], xlo, xhi, xlo_src, xhi_src)
        return ConvexRegion(EMPTY), diag

    # a concrete feasible x0
    if vals[best] >= 0:
        i0 = best
        x0 = samples[i0]
    elif grow_right:
        x0 = _gap_root_near(f, g, samples[-1] + 1) + 1
        i0 = len(samples)
    else:
        x0 = _gap_root_near(f, g, samples[0] - 1) - 1
        i0 = -1

    # walk left from x0 for the left end of {gap >= 0}
    xL = None
    prev = x0
    found = False
    for i in range(min(i0, len(samples)) - 1, -1, -1):
        if vals[i] >= 0:
            prev = samples[i]
            continue
        probe = Fraction(samples[i] + prev, 2)
        xL = _gap_root_near(f, g, probe)
        found = True
        break
    if not found:
        if xlo is not None:
            xL = xlo
        else:
            sl = _gap_slope_at(f, g, prev - 1)
            xL = _gap_root_near(f, g, prev - 1) if sl > 0 else None

    xR = None
    prev = x0
    found = False
    for i in range(max(i0, -1) + 1, len(samples)):
        if vals[i] >= 0:
            prev = samples[i]
            continue
        probe = Fraction(samples[i] + prev, 2)
        xR = _gap_root_near(f, g, probe)
        found = True
        break
    if not found:
        if xhi is not None:
            xR = xhi
        else:
            sr = _gap_slope_at(f, g, prev + 1)
            xR = _gap_root_near(f, g, prev + 1) if sr < 0 else None

    return _assemble(f, g, xL, xR, xlo, xhi, xlo_src, xhi_src, gapmax), diag


def _empty_actives(f, g, x, xlo, xhi, xlo_src, xhi_src):
    """Constraint indices pinning the (negative) maximum of g - f at x."""
    acts = set()
    fi = f.edge_index_at(x)
    acts.add(f.sources[fi])
    if fi < len(f.breaks) and f.breaks[fi] == x:
        acts.add(f.sources[fi + 1])
    if fi > 0 and f.breaks[fi - 1] == x:
        acts.add(f.sources[fi - 1])
    gi = g.edge_index_at(x)
    acts.add(g.sources[gi])
    if gi < len(g.breaks) and g.breaks[gi] == x:
        acts.add(g.sources[gi + 1])
    if gi > 0 and g.breaks[gi - 1] == x:
        acts.add(g.sources[gi - 1])
    if xlo is not None and x == xlo:
        acts.add(xlo_src)
    if xhi is not None and x == xhi:
        acts.add(xhi_src)
    return sorted(acts)


def _assemble(f, g, xL, xR, xlo, xhi, xlo_src, xhi_src, gapmax):
    if xL is not None and xR is not None and xL == xR:
        q = xL
        fv, gv = f.value_at(q), g.value_at(q)
        if fv == gv:
            return ConvexRegion(POINT, (Point(q, fv),))
        # pinched domain with a genuine vertical extent
        return ConvexRegion(SEGMENT, (Point(q, fv), Point(q, gv)),
                            (xlo_src if xlo == q else xhi_src,))
    if gapmax == 0:
        # gap vanishes identically on [xL, xR]: 1-dimensional region on a line
        if xL is not None and xR is not None:
            probe = Fraction(xL + xR, 2)
        elif xL is not None:
            probe = xL + 1
        elif xR is not None:
            probe = xR - 1
        else:
            probe = Fraction(0)
        e = f.edges[f.edge_index_at(probe)]
        if xL is not None and xR is not None:
            return ConvexRegion(SEGMENT, (Point(xL, e.value_at(xL)), Point(xR, e.value_at(xR))))
        if xL is not None:
            return ConvexRegion(RAY, (Point(xL, e.value_at(xL)),), dir_end=(1, e.m))
        if xR is not None:
            return ConvexRegion(RAY, (Point(xR, e.value_at(xR)),), dir_end=(-1, -e.m))
        return ConvexRegion(LINE_KIND, (Point(0, e.t),), dir_end=(1, e.m))

    # full-dimensional
    bot_pts, bot_srcs, bi0, bi1 = _chain_points(f, xL, xR)
    top_pts, top_srcs, ti0, ti1 = _chain_points(g, xL, xR)
    left_open = xL is None
    right_open = xR is None
    if left_open and right_open:
        # both ends open forces two single parallel boundary lines
        assert len(f.edges) == 1 and len(g.edges) == 1 and f.edges[0].m == g.edges[0].m
        return ConvexRegion(SLAB, (Point(0, f.edges[0].t), Point(0, g.edges[0].t)),
                            (f.sources[0], g.sources[0]), dir_end=(1, f.edges[0].m))

    left_pinch = (not left_open) and f.value_at(xL) == g.value_at(xL)
    right_pinch = (not right_open) and f.value_at(xR) == g.value_at(xR)
    left_wall = (not left_open) and not left_pinch
    right_wall = (not right_open) and not right_pinch

    verts: list = []
    srcs: list = []

    def add_vertex(p):
        if not verts or verts[-1].as_tuple() != p.as_tuple():
            verts.append(p)

    if right_open:
        # open end on the right: ccw walk enters along g's rightmost piece
        for p in reversed(top_pts):
            add_vertex(p)
        srcs.extend(reversed(top_srcs))
        if left_wall:
            srcs.append(xlo_src)
            add_vertex(Point(xL, f.value_at(xL)))
        for p in bot_pts:
            add_vertex(p)
        srcs.extend(bot_srcs)
        return ConvexRegion(CHAIN, tuple(verts), tuple(srcs),
                            dir_start=(1, g.edges[ti1].m), dir_end=(1, f.edges[bi1].m))
    if left_open:
        for p in bot_pts:
            add_vertex(p)
        srcs.extend(bot_srcs)
        if right_wall:
            srcs.append(xhi_src)
            add_vertex(Point(xR, g.value_at(xR)))
        for p in reversed(top_pts):
            add_vertex(p)
        srcs.extend(reversed(top_srcs))
        return ConvexRegion(CHAIN, tuple(verts), tuple(srcs),
                            dir_start=(-1, -f.edges[bi0].m), dir_end=(-1, -g.edges[ti0].m))

    # bounded polygon
    for p in bot_pts:
        add_vertex(p)
    srcs.extend(bot_srcs)
    if right_wall:
        srcs.append(xhi_src)
    for p in reversed(top_pts):
        add_vertex(p)
    srcs.extend(reversed(top_srcs))
    if left_wall:
        srcs.append(xlo_src)
    if verts[0].as_tuple() == verts[-1].as_tuple():
        verts.pop()
    if len(srcs) != len(verts) or len(verts) < 3:
        raise AssertionError("inconsistent polygon assembly")
    return ConvexRegion(POLYGON, tuple(verts), tuple(srcs))


# ---------------------------------------------------------------------------
# slack dispatch: interior witness or Helly certificate


@dataclass(frozen=True)
class InteriorWitness:
    point: Point
    slack: Fraction


@dataclass(frozen=True)
class HellyCertificate:
    """At most three halfplane indices whose (closed) union covers the plane."""

    indices: tuple


def max_slack_point(hs: Sequence[Halfplane]):
    """Interior witness strictly outside every halfplane, or a Helly certificate.

    Realizes the dispatch of the general solver: a point o with positive L1
    slack exists iff the open complements have a common point; otherwise at
    most three halfplanes of hs already cover the plane.
    """
    if not hs:
        raise EmptyInput("max_slack_point of no halfplanes")
    comp = [h.complement() for h in hs]
    region, diag = _intersection_with_diagnostics(comp)
    if region.is_full_dim:
        o = region.interior_point()
        slack = min(
            Fraction((h.a * o.x + h.b * o.y) - h.c) / Fraction(abs(h.a) + abs(h.b))
            for h in hs
        )
        if slack <= 0:
            raise AssertionError("interior point construction lost strictness")
        return InteriorWitness(o, slack)
    if region.is_empty:
        return _certificate_from_active(hs, diag.active)
    return _certificate_from_degenerate(hs, region)


def _rows_empty(hs_subset) -> bool:
    region, _ = _intersection_with_diagnostics([h.complement() for h in hs_subset])
    return region.is_empty


def _certificate_from_active(hs, active):
    active = sorted(set(active))
    for size in (1, 2, 3):
        for combo in combinations(active, size):
            if _rows_empty([hs[i] for i in combo]):
                return HellyCertificate(tuple(combo))
    raise AssertionError("no small certificate among active constraints")


def _strict_common_direction_exists(normals) -> bool:
    """Exact test: is there d with n·d > 0 for every normal n?

    Holds iff the largest ccw gap between consecutive direction classes
    strictly exceeds pi.
    """
    uniq = []
    seen = set()
    for nx, ny in normals:
        k = angle_key(nx, ny)
        if k not in seen:
            seen.add(k)
            uniq.append((nx, ny, k))
    uniq.sort(key=lambda u: u[2])
    m = len(uniq)
    if m == 1:
        return True
    for i in range(m):
        ax, ay, _ = uniq[i]
        bx, by, _ = uniq[(i + 1) % m]
        # ccw gap from a to the next direction exceeds pi iff cross < 0
        if cross(ax, ay, bx, by) < 0:
            return True
    return False


def _certificate_from_degenerate(hs, region):
    p = region.relint_point()
    tight = [i for i, h in enumerate(hs) if h.a * p.x + h.b * p.y == h.c]
    normals = [(hs[i].a, hs[i].b) for i in tight]
    # opposite pair first (covers all 1-dimensional regions and some point cases)
    keyed = sorted(range(len(tight)), key=lambda j: angle_key(*normals[j]))
    for j in keyed:
        nx, ny = normals[j]
        for k in keyed:
            mx, my = normals[k]
            if cross(nx, ny, mx, my) == 0 and nx * mx + ny * my < 0:
                pair = tuple(sorted((tight[j], tight[k])))
                return HellyCertificate(pair)
    # point region: pick a spanning triple a; (b, c) consecutive around -a
    assert region.kind == POINT, "1-dim region must expose an opposite pair"
    j0 = keyed[0]
    ax, ay = normals[j0]
    anti = angle_key(-ax, -ay)
    keys = [angle_key(*normals[j]) for j in keyed]
    pos = bisect_left(keys, anti)
    jb = keyed[(pos - 1) % len(keyed)]
    jc = keyed[pos % len(keyed)]
    triple = tuple(sorted({tight[j0], tight[jb], tight[jc]}))
    chosen = [(hs[i].a, hs[i].b) for i in triple]
    assert len(triple) == 3 and not _strict_common_direction_exists(chosen)
    return HellyCertificate(triple)


# ---------------------------------------------------------------------------
# generic rotation


_TRIPLES = [(1, 0, 1)] + [(k * k - 1, 2 * k, k * k + 1) for k in range(100, 180)]


@dataclass(frozen=True)
class RotationResult:
    points: tuple
    halfplanes: tuple
    rotation: tuple  # (p, q, r) with cos = p/r, sin = q/r
    dominated: tuple  # per-halfplane flag: a same-direction halfplane contains it


def rotate_point(pt: Point, triple) -> Point:
    p, q, r = triple
    return Point(Fraction(p * pt.x - q * pt.y, r), Fraction(q * pt.x + p * pt.y, r))


def rotate_halfplane(h: Halfplane, triple) -> Halfplane:
    p, q, r = triple
    return Halfplane(h.a * p - h.b * q, h.a * q + h.b * p, h.c * r)


def _direction_class(a, b):
    an, ad = Fraction(a).numerator, Fraction(a).denominator
    bn, bd = Fraction(b).numerator, Fraction(b).denominator
    # scale to integers, then reduce by gcd keeping signs
    na = an * bd
    nb = bn * ad
    g = math.gcd(abs(na), abs(nb))
    return (na // g, nb // g)


def dominated_flags(halfplanes: Sequence[Halfplane]):
    """Flag halfplanes contained in a same-direction halfplane (the lower line is redundant)."""
    groups = {}
    for i, h in enumerate(halfplanes):
        groups.setdefault(_direction_class(h.a, h.b), []).append(i)
    flags = [False] * len(halfplanes)
    for key, idxs in groups.items():
        if len(idxs) == 1:
            continue
        da, db = key
        scale = lambda i: Fraction(halfplanes[i].c) / (Fraction(halfplanes[i].a) / da if da != 0 else Fraction(halfplanes[i].b) / db)
        best = max(idxs, key=lambda i: (scale(i), -i))
        for i in idxs:
            if i != best:
                flags[i] = True
    return tuple(flags)


def generic_rotation(points: Sequence[Point], halfplanes: Sequence[Halfplane],
                     extra_ok: Optional[Callable] = None) -> RotationResult:
    """Rational rotation making the instance generic, deterministic over a fixed triple list.

    After the rotation no two distinct points share an x-coordinate and no
    bounding line is vertical.  Same-direction parallel bounding lines cannot
    be removed by rotating; the contained ones are flagged dominated instead.
    Exact duplicate points are allowed (they can never be separated).
    """
    flags = dominated_flags(halfplanes)
    distinct = {(p.x, p.y) for p in points}
    for triple in _TRIPLES:
        p, q, r = triple
        xs = sorted(p * x - q * y for x, y in distinct)
        if any(xs[i] == xs[i + 1] for i in range(len(xs) - 1)):
            continue
        hps = tuple(rotate_halfplane(h, triple) for h in halfplanes)
        if any(h.b == 0 for h in hps):
            continue
        pts = tuple(rotate_point(pt, triple) for pt in points)
        if extra_ok is not None and not extra_ok(pts, hps):
            continue
        return RotationResult(pts, hps, triple, flags)
    raise GenericityFailure("no rotation in the fixed triple list is generic for this input")


# ---------------------------------------------------------------------------
# integer scaling helper (speed path for the combinatorial solvers)


def scale_to_ints(points: Sequence[Point], halfplanes: Sequence[Halfplane]):
    """Uniformly scale points (and per-row halfplanes) to integer data.

    Returns (xs, ys, rows) with xs/ys ints and rows (a, b, c) ints defining
    the same incidence structure as the inputs.
    """
    denoms = [Fraction(p.x).denominator for p in points]
    denoms += [Fraction(p.y).denominator for p in points]
    L = math.lcm(*denoms) if denoms else 1
    xs = [int(Fraction(p.x) * L) for p in points]
    ys = [int(Fraction(p.y) * L) for p in points]
    rows = []
    for h in halfplanes:
        a, b = Fraction(h.a), Fraction(h.b)
        c = Fraction(h.c) * L
        M = math.lcm(a.denominator, b.denominator, c.denominator)
        rows.append((int(a * M), int(b * M), int(c * M)))
    return xs, ys, rows
