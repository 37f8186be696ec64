"""Segment tree over an ordered point sequence with per-node convex hulls.

Answers "first point beyond an anchor not covered by a halfplane" in
O(log^2 n) by testing, per visited node, whether the node hull has a point
outside the halfplane (an extreme-point query against the outward normal).
This is the artifact's stand-in for simple-polygon ray shooting: maximal
covered runs come out of two such queries.
"""

from typing import Optional

from .cover1d import CyclicArc, IndexRun
from .errors import EmptyInput
from .geometry import Halfplane, Point

RIGHT = "right"
LEFT = "left"


class RangeOutsideTree:
    """Immutable after build; per-node hulls stored as index lists into xs/ys."""

    def __init__(self, points, cyclic: bool = False):
        if not points:
            raise EmptyInput("RangeOutsideTree needs at least one point")
        self.n = len(points)
        self.cyclic = cyclic
        self.xs = [p.x for p in points]
        self.ys = [p.y for p in points]
        self.stats = {"node_tests": 0, "search_steps": 0}
        # node arrays; node 0 is the root
        self.lo = []
        self.hi = []
        self.left = []
        self.right = []
        self.upper = []  # upper hull chains (point indices, x-lex ascending)
        self.lower = []
        self._build(0, self.n)

    # -- construction -------------------------------------------------------

    def _new_node(self, lo, hi):
        self.lo.append(lo)
        self.hi.append(hi)
        self.left.append(-1)
        self.right.append(-1)
        self.upper.append(None)
        self.lower.append(None)
        return len(self.lo) - 1

    def _build(self, lo, hi):
        v = self._new_node(lo, hi)
        if hi - lo == 1:
            self.upper[v] = [lo]
            self.lower[v] = [lo]
            return v, [lo]
        mid = (lo + hi) // 2
        l, lsorted = self._build(lo, mid)
        r, rsorted = self._build(mid, hi)
        self.left[v], self.right[v] = l, r
        merged = self._merge(lsorted, rsorted)
        self.upper[v], self.lower[v] = self._hull_chains(merged)
        return v, merged

    def _merge(self, a, b):
        xs, ys = self.xs, self.ys
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            ka = (xs[a[i]], ys[a[i]])
            kb = (xs[b[j]], ys[b[j]])
            if ka <= kb:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return out

    def _hull_chains(self, idxs):
        xs, ys = self.xs, self.ys
        upper = []
        for k in idxs:
            x, y = xs[k], ys[k]
            while len(upper) >= 2:
                p, q = upper[-2], upper[-1]
                if (xs[q] - xs[p]) * (y - ys[p]) - (ys[q] - ys[p]) * (x - xs[p]) >= 0:
                    upper.pop()
                else:
                    break
            upper.append(k)
        lower = []
        for k in idxs:
            x, y = xs[k], ys[k]
            while len(lower) >= 2:
                p, q = lower[-2], lower[-1]
                if (xs[q] - xs[p]) * (y - ys[p]) - (ys[q] - ys[p]) * (x - xs[p]) <= 0:
                    lower.pop()
                else:
                    break
            lower.append(k)
        return upper, lower

    # -- node predicate ------------------------------------------------------

    def _node_outside(self, v, a, b, c) -> bool:
        """Does some point of node v satisfy a*x + b*y > c?"""
        self.stats["node_tests"] += 1
        xs, ys = self.xs, self.ys
        if b > 0:
            chain = self.upper[v]
        elif b < 0:
            chain = self.lower[v]
        else:
            k = self.upper[v][-1] if a > 0 else self.upper[v][0]
            return a * xs[k] > c
        lo, hi = 0, len(chain) - 1
        steps = self.stats
        while lo < hi:
            steps["search_steps"] += 1
            mid = (lo + hi) // 2
            p, q = chain[mid], chain[mid + 1]
            if a * xs[p] + b * ys[p] < a * xs[q] + b * ys[q]:
                lo = mid + 1
            else:
                hi = mid
        k = chain[lo]
        return a * xs[k] + b * ys[k] > c

    # -- queries -------------------------------------------------------------

    def first_uncovered(self, anchor: int, direction: str, h: Halfplane) -> Optional[int]:
        """Nearest index strictly beyond anchor (cyclically if cyclic) not in h."""
        a, b, c = h.a, h.b, h.c
        if direction == RIGHT:
            res = self._first_outside(0, anchor + 1, self.n, a, b, c)
            if res is None and self.cyclic:
                res = self._first_outside(0, 0, anchor, a, b, c)
            return res
        if direction == LEFT:
            res = self._last_outside(0, 0, anchor, a, b, c)
            if res is None and self.cyclic:
                res = self._last_outside(0, anchor + 1, self.n, a, b, c)
            return res
        raise ValueError(f"direction must be {RIGHT!r} or {LEFT!r}")

    def _first_outside(self, v, l, r, a, b, c):
        lo, hi = self.lo[v], self.hi[v]
        if r <= lo or hi <= l or l >= r:
            return None
        if l <= lo and hi <= r:
            if not self._node_outside(v, a, b, c):
                return None
            while hi - lo > 1:
                vl = self.left[v]
                if self._node_outside(vl, a, b, c):
                    v = vl
                else:
                    v = self.right[v]
                lo, hi = self.lo[v], self.hi[v]
            return lo
        res = self._first_outside(self.left[v], l, r, a, b, c)
        if res is not None:
            return res
        return self._first_outside(self.right[v], l, r, a, b, c)

    def _last_outside(self, v, l, r, a, b, c):
        lo, hi = self.lo[v], self.hi[v]
        if r <= lo or hi <= l or l >= r:
            return None
        if l <= lo and hi <= r:
            if not self._node_outside(v, a, b, c):
                return None
            while hi - lo > 1:
                vr = self.right[v]
                if self._node_outside(vr, a, b, c):
                    v = vr
                else:
                    v = self.left[v]
                lo, hi = self.lo[v], self.hi[v]
            return lo
        res = self._last_outside(self.right[v], l, r, a, b, c)
        if res is not None:
            return res
        return self._last_outside(self.left[v], l, r, a, b, c)

    def point(self, k: int) -> Point:
        return Point(self.xs[k], self.ys[k])

    def covers(self, h: Halfplane, k: int) -> bool:
        return h.a * self.xs[k] + h.b * self.ys[k] <= h.c

    def reset_stats(self):
        self.stats = {"node_tests": 0, "search_steps": 0}


def build(points, cyclic: bool = False) -> RangeOutsideTree:
    return RangeOutsideTree(points, cyclic=cyclic)


def maximal_run(tree: RangeOutsideTree, anchor: int, h: Halfplane, h_idx: int = -1):
    """Maximal run of consecutive covered indices containing anchor, or None.

    Linear trees give an IndexRun; cyclic trees a CyclicArc (full_circle when
    h covers every point).
    """
    if not tree.covers(h, anchor):
        return None
    if not tree.cyclic:
        r = tree.first_uncovered(anchor, RIGHT, h)
        l = tree.first_uncovered(anchor, LEFT, h)
        i = 0 if l is None else l + 1
        j = tree.n - 1 if r is None else r - 1
        return IndexRun(i, j, h_idx)
    r = tree.first_uncovered(anchor, RIGHT, h)
    if r is None:
        return CyclicArc(0, tree.n - 1, h_idx, full_circle=True)
    l = tree.first_uncovered(anchor, LEFT, h)
    return CyclicArc((l + 1) % tree.n, (r - 1) % tree.n, h_idx)
