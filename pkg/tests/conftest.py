"""Shared helpers for the test suite: random instance builders and
independent geometric reference predicates (no solver internals)."""

import random
from fractions import Fraction

from halfcover.geometry import Halfplane, Point, angle_key, cross
from halfcover.star import StarPolygon


def rand_lower_instance(rnd, nmax=10, mmax=10, coord=20, slope=5):
    n = rnd.randint(1, nmax)
    m = rnd.randint(1, mmax)
    pts = [Point(rnd.randint(-coord, coord), rnd.randint(-coord, coord))
           for _ in range(n)]
    hps = [Halfplane(-rnd.randint(-slope, slope), 1, rnd.randint(-coord, coord))
           for _ in range(m)]
    return pts, hps


def rand_mixed_instance(rnd, nmax=8, mmax=8, coord=20, coef=6):
    n = rnd.randint(1, nmax)
    m = rnd.randint(1, mmax)
    pts = [Point(rnd.randint(-coord, coord), rnd.randint(-coord, coord))
           for _ in range(n)]
    hps = []
    for _ in range(m):
        while True:
            a, b = rnd.randint(-coef, coef), rnd.randint(-coef, coef)
            if (a, b) != (0, 0):
                break
        hps.append(Halfplane(a, b, rnd.randint(-25, 25)))
    return pts, hps


def rand_star_polygon(rnd, nmax=8, reach=4):
    """Random star polygon around the origin with integer vertices."""
    while True:
        n = rnd.randint(3, nmax)
        dirs = {}
        for _ in range(12 * nmax):
            dx, dy = rnd.randint(-6, 6), rnd.randint(-6, 6)
            if (dx, dy) == (0, 0):
                continue
            dirs.setdefault(angle_key(dx, dy), (dx, dy))
            if len(dirs) >= n:
                break
        ds = [dirs[k] for k in sorted(dirs)]
        if len(ds) < 3:
            continue
        if not all(cross(ds[i][0], ds[i][1], ds[(i + 1) % len(ds)][0],
                         ds[(i + 1) % len(ds)][1]) > 0 for i in range(len(ds))):
            continue
        verts = []
        for d in ds:
            r = rnd.randint(1, reach)
            verts.append(Point(d[0] * r, d[1] * r))
        return StarPolygon(Point(0, 0), tuple(verts))


def rand_star_halfplanes(rnd, m, radius=18):
    hps = []
    for _ in range(m):
        while True:
            a, b = rnd.randint(-4, 4), rnd.randint(-4, 4)
            if (a, b) != (0, 0):
                break
        hps.append(Halfplane(a, b, -rnd.randint(1, radius)))
    return hps


def point_in_polygon(p, vertices):
    """Exact ray-crossing parity test (boundary counts as inside)."""
    n = len(vertices)
    # boundary check
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if cr == 0:
            if min(a.x, b.x) <= p.x <= max(a.x, b.x) and \
               min(a.y, b.y) <= p.y <= max(a.y, b.y):
                return True
    inside = False
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            xcross = a.x + Fraction(b.x - a.x) * Fraction(p.y - a.y) / Fraction(b.y - a.y)
            if xcross > p.x:
                inside = not inside
    return inside


def line_polygon_chords(h, poly):
    """All maximal segments of the bounding line inside the polygon (brute).

    Returns (p, q) endpoint pairs with exact rational coordinates.
    """
    verts = poly.vertices
    n = len(verts)
    # param ref point and direction on the line a x + b y = c
    a, b, c = h.a, h.b, h.c
    den = a * a + b * b
    base = Point(Fraction(a * c, den), Fraction(b * c, den))
    d = (b, -a)
    lams = set()
    for i in range(n):
        u, v = verts[i], verts[(i + 1) % n]
        fu = a * u.x + b * u.y - c
        fv = a * v.x + b * v.y - c
        if fu == 0:
            lams.add(_lam_of(base, d, u))
        if fv == 0:
            lams.add(_lam_of(base, d, v))
        if (fu > 0 > fv) or (fu < 0 < fv):
            t = Fraction(fu) / Fraction(fu - fv)
            z = Point(u.x + t * (v.x - u.x), u.y + t * (v.y - u.y))
            lams.add(_lam_of(base, d, z))
    if not lams:
        return []  # a line missing the boundary misses the (bounded) polygon
    lams = sorted(lams)
    k = len(lams)
    pieces = []  # inside status of each open interval between critical params
    for i in range(k - 1):
        mid = Fraction(lams[i] + lams[i + 1], 2)
        p = Point(base.x + mid * d[0], base.y + mid * d[1])
        pieces.append(point_in_polygon(p, verts))
    segs = []
    i = 0
    while i < k:
        if i < k - 1 and pieces[i]:
            j = i
            while j < k - 1 and pieces[j]:
                j += 1
            segs.append((_pt(base, d, lams[i]), _pt(base, d, lams[j])))
            i = j + 1
            continue
        left_in = i > 0 and pieces[i - 1]
        if not left_in:
            # critical points are on the boundary: isolated touch
            segs.append((_pt(base, d, lams[i]), _pt(base, d, lams[i])))
        i += 1
    return segs


def _lam_of(base, d, p):
    if d[0] != 0:
        return Fraction(p.x - base.x) / Fraction(d[0])
    return Fraction(p.y - base.y) / Fraction(d[1])


def _pt(base, d, lam):
    return Point(base.x + lam * d[0], base.y + lam * d[1])
