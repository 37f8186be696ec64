"""Deterministic instance generators, including the adversarial families.

Every generator is a pure function of (n, seed).  Planted families record
what they planted under metadata; solvers never read metadata.
"""

import math
import random
from fractions import Fraction

from .errors import InvalidInstance
from .geometry import Halfplane, Line, Point, angle_key, cross, upper_envelope
from .instances import Instance, format_scalar

KINDS = ("uniform", "parabola-eq", "parabola-neq", "zigzag", "star-random",
         "polyline-lb", "planted-2cover", "planted-3cover")


def generate(kind: str, n: int, seed: int) -> Instance:
    if kind not in KINDS:
        raise InvalidInstance(f"unknown generator kind {kind!r}")
    if n < 1:
        raise InvalidInstance("n must be positive")
    rnd = random.Random(seed)
    return _DISPATCH[kind](n, rnd)


def _uniform(n, rnd):
    """Feasible lower-only instance: points sampled just below the envelope."""
    span = max(4 * n, 16)
    slopes = rnd.sample(range(-2 * n - 2, 2 * n + 3), n)
    lines = []
    hps = []
    for m in slopes:
        t = rnd.randint(0, 8 * n * n + 16)
        lines.append(Line(m, t))
        hps.append(Halfplane(-m, 1, t))
    env = upper_envelope(lines)
    xs = rnd.sample(range(-span, span + 1), n)
    pts = []
    for x in xs:
        top = env.value_at(x)
        y = (top.numerator // top.denominator) - rnd.randint(0, 4 * n)
        pts.append(Point(x, y))
    return Instance("points", tuple(pts), tuple(hps))


def _parabola(n, rnd, equal: bool):
    A = sorted(rnd.sample(range(-3 * n, 3 * n + 1), n))
    B = list(A)
    if not equal:
        drop = rnd.randrange(n)
        B[drop] = 3 * n + 1 + rnd.randint(0, n)
    pts = tuple(Point(a, a * a) for a in A)
    hps = tuple(Halfplane(-2 * b, 1, -b * b) for b in B)
    meta = {"family": "parabola", "optimum": n} if equal else \
        {"family": "parabola", "status": "infeasible"}
    return Instance("points", pts, hps, metadata=meta)


def _zigzag(n, rnd):
    """Adversarial family: flat halfplanes with Theta(n) maximal runs each.

    Low points at even x, high points at odd x.  n/2 flats cover every low
    point and no high point (quadratically many naive runs in total); n/2
    steep halfplanes keep the instance feasible.
    """
    if n % 2 or n < 4:
        raise InvalidInstance("zigzag needs even n >= 4")
    q = n // 2
    M = 4
    pts = tuple(Point(x, 0 if x % 2 == 0 else M) for x in range(n))
    hps = []
    for k in range(q):
        hps.append(Halfplane(-k, n * n, 2 * n * n))
    for j in range(q):
        s = 5 + j
        xh = 2 * j + 1
        hps.append(Halfplane(-s, 1, M - s * xh))
    return Instance("points", pts, tuple(hps),
                    metadata={"family": "zigzag", "flats": q})


def _star_random(n, rnd):
    reach_coord = 9 + n
    for _ in range(400):
        dirs = {}
        while len(dirs) < max(n, 3):
            dx, dy = rnd.randint(-reach_coord, reach_coord), rnd.randint(-reach_coord, reach_coord)
            if (dx, dy) == (0, 0):
                continue
            dirs.setdefault(angle_key(dx, dy), (dx, dy))
        ds = [dirs[k] for k in sorted(dirs)]
        if not all(cross(ds[i][0], ds[i][1], ds[(i + 1) % len(ds)][0],
                         ds[(i + 1) % len(ds)][1]) > 0 for i in range(len(ds))):
            continue
        verts = []
        for d in ds:
            r = rnd.randint(1, 4)
            verts.append(Point(d[0] * r, d[1] * r))
        verts = tuple(verts)
        hps = []
        reach = max(max(abs(v.x), abs(v.y)) for v in verts)
        for _ in range(n):
            while True:
                a, b = rnd.randint(-5, 5), rnd.randint(-5, 5)
                if (a, b) != (0, 0):
                    break
            hps.append(Halfplane(a, b, -rnd.randint(1, 4 * reach)))
        return Instance("star", halfplanes=tuple(hps), center=Point(0, 0),
                        vertices=verts)
    raise AssertionError("star generator failed to draw a valid polygon")


def _polyline_lb(n, rnd):
    """Strictly monotone realization of the polyline lower-bound family.

    From a feasible lower-only instance, the bottom line sits low enough that
    a subset covers the embedded points iff it covers the whole polyline.
    """
    inner = _uniform(n, rnd)
    pts = sorted(inner.points, key=lambda p: p.x)
    hps = inner.halfplanes
    kappa = max(abs(Fraction(-h.a, h.b)) for h in hps)
    y_floor = None
    for i in range(len(pts) - 1):
        gap = pts[i + 1].x - pts[i].x
        cand = min(pts[i].y, pts[i + 1].y) - kappa * gap
        y_floor = cand if y_floor is None else min(y_floor, cand)
    if y_floor is None:
        y_floor = pts[0].y - 1
    y_low = math.floor(y_floor) - 1
    verts = []
    scale = 3  # thirds stay integral after scaling all x by 3
    for i, p in enumerate(pts):
        verts.append(Point(scale * p.x, p.y))
        if i + 1 < len(pts):
            g = pts[i + 1].x - p.x
            verts.append(Point(scale * p.x + g, y_low))
            verts.append(Point(scale * pts[i + 1].x - g, y_low))
    scaled_hps = tuple(Halfplane(h.a, scale * h.b, scale * h.c) for h in hps)
    meta = {"family": "polyline-lb",
            "embedded_points": [[format_scalar(scale * p.x), format_scalar(p.y)]
                                for p in pts]}
    return Instance("polyline", halfplanes=scaled_hps, vertices=tuple(verts),
                    metadata=meta)


def _covers(h, p):
    return h.a * p.x + h.b * p.y <= h.c


def _has_single_cover(pts, hps):
    return any(all(_covers(h, p) for p in pts) for h in hps)


def _has_pair_cover(pts, hps):
    m = len(hps)
    for i in range(m):
        rest = [p for p in pts if not _covers(hps[i], p)]
        for j in range(i + 1, m):
            if all(_covers(hps[j], p) for p in rest):
                return True
    return False


def _planted_two(n, rnd):
    for _ in range(400):
        m1, m2 = rnd.randint(-3, 3), rnd.randint(-3, 3)
        t1 = -rnd.randint(5, 15)
        t2 = rnd.randint(5, 15)
        low = Halfplane(-m1, 1, t1)        # y <= m1 x + t1
        high = Halfplane(m2, -1, -t2)      # y >= m2 x + t2
        pts = []
        span = max(2 * n, 10)
        for _ in range(n):
            x = rnd.randint(-span, span)
            if rnd.random() < 0.5:
                y = m1 * x + t1 - rnd.randint(0, 10)
            else:
                y = m2 * x + t2 + rnd.randint(0, 10)
            pts.append(Point(x, y))
        decoys = []
        for _ in range(rnd.randint(0, max(2, n // 4))):
            while True:
                a, b = rnd.randint(-4, 4), rnd.randint(-4, 4)
                if (a, b) != (0, 0):
                    break
            decoys.append(Halfplane(a, b, rnd.randint(-30, 30)))
        base = [low, high] + decoys
        perm = list(range(len(base)))
        rnd.shuffle(perm)
        hps = [base[perm[dst]] for dst in range(len(base))]
        planted = sorted(dst for dst in range(len(base)) if perm[dst] < 2)
        if _has_single_cover(pts, hps):
            continue
        return Instance("points", tuple(pts), tuple(hps),
                        metadata={"family": "planted-2cover", "optimum": 2,
                                  "planted": planted})
    raise AssertionError("planted-2cover generator failed")


def _planted_three(n, rnd):
    for _ in range(400):
        kb, kc = rnd.randint(1, 3), rnd.randint(1, 3)
        tb, tc = rnd.randint(-4, 4), rnd.randint(-4, 4)
        ystar = Fraction(kb * tc + kc * tb, kb + kc)
        s = int(ystar) - rnd.randint(1, 4)
        hA = Halfplane(0, -1, -s)            # y >= s
        hB = Halfplane(-kb, 1, tb)           # y <= kb x + tb
        hC = Halfplane(kc, 1, tc)            # y <= -kc x + tc
        X = 20 * max(kb, kc) + 40
        xstar = Fraction(tc - tb, kb + kc)
        exA = Point(int(xstar), max(s, int(kb * xstar + tb), int(-kc * xstar + tc)) + rnd.randint(2, 8))
        exB = Point(X, s - rnd.randint(1, 5))
        exC = Point(-X, s - rnd.randint(1, 5))
        trio = [hA, hB, hC]
        if not all(any(_covers(h, p) for h in trio) for p in (exA, exB, exC)):
            continue
        pts = [exA, exB, exC]
        while len(pts) < max(n, 3):
            p = Point(rnd.randint(-X, X), rnd.randint(s - 10, int(ystar) + 20))
            if any(_covers(h, p) for h in trio):
                pts.append(p)
        decoys = []
        for _ in range(rnd.randint(0, max(2, n // 4))):
            while True:
                a, b = rnd.randint(-4, 4), rnd.randint(-4, 4)
                if (a, b) != (0, 0):
                    break
            decoys.append(Halfplane(a, b, rnd.randint(-30, 30)))
        base = trio + decoys
        perm = list(range(len(base)))
        rnd.shuffle(perm)
        hps = [base[perm[dst]] for dst in range(len(base))]
        if _has_single_cover(pts, hps) or _has_pair_cover(pts, hps):
            continue
        planted = sorted(dst for dst in range(len(base)) if perm[dst] < 3)
        return Instance("points", tuple(pts), tuple(hps),
                        metadata={"family": "planted-3cover", "optimum": 3,
                                  "planted": planted})
    raise AssertionError("planted-3cover generator failed")


_DISPATCH = {
    "uniform": _uniform,
    "parabola-eq": lambda n, rnd: _parabola(n, rnd, True),
    "parabola-neq": lambda n, rnd: _parabola(n, rnd, False),
    "zigzag": _zigzag,
    "star-random": _star_random,
    "polyline-lb": _polyline_lb,
    "planted-2cover": _planted_two,
    "planted-3cover": _planted_three,
}
