"""SVG rendering of instances.

Display only: coordinates go through float here and nowhere else; no solver
imports this module.
"""

from xml.sax.saxutils import escape


def _bounds(xs, ys):
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    pad = max(hi_x - lo_x, hi_y - lo_y, 1.0) * 0.2
    return lo_x - pad, hi_x + pad, lo_y - pad, hi_y + pad


def _clip_line(a, b, c, box):
    """Two float endpoints of the line a*x + b*y = c clipped to the box."""
    x0, x1, y0, y1 = box
    pts = []
    if b != 0:
        for x in (x0, x1):
            y = (c - a * x) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (c - b * y) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    return uniq[:2] if len(uniq) >= 2 else None


def render_svg(inst, chosen=None) -> str:
    chosen = set(chosen or ())
    xs, ys = [], []
    for p in list(inst.points) + list(inst.vertices):
        xs.append(float(p.x))
        ys.append(float(p.y))
    if inst.center is not None:
        xs.append(float(inst.center.x))
        ys.append(float(inst.center.y))
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]
    x0, x1, y0, y1 = _bounds(xs, ys)
    W = 640.0
    H = W * (y1 - y0) / (x1 - x0)

    def sx(x):
        return (float(x) - x0) / (x1 - x0) * W

    def sy(y):
        return H - (float(y) - y0) / (y1 - y0) * H

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W:.0f}" '
             f'height="{H:.0f}" viewBox="0 0 {W:.2f} {H:.2f}">']
    for i, h in enumerate(inst.halfplanes):
        seg = _clip_line(float(h.a), float(h.b), float(h.c), (x0, x1, y0, y1))
        color = "#d62728" if i in chosen else "#1f77b4"
        if seg is None:
            d = "M 0 0"
        else:
            (ax, ay), (bx, by) = seg
            d = f"M {sx(ax):.2f} {sy(ay):.2f} L {sx(bx):.2f} {sy(by):.2f}"
        parts.append(f'<path d="{d}" stroke="{color}" fill="none" '
                     f'stroke-width="1.5"><title>{escape(f"h{i}")}</title></path>')
    if inst.vertices:
        pts = " ".join(f"{sx(v.x):.2f},{sy(v.y):.2f}" for v in inst.vertices)
        closed = inst.kind == "star"
        tag = "polygon" if closed else "polyline"
        parts.append(f'<{tag} points="{pts}" stroke="#2ca02c" fill="none" '
                     f'stroke-width="2"/>')
    for p in inst.points:
        parts.append(f'<circle cx="{sx(p.x):.2f}" cy="{sy(p.y):.2f}" r="3" '
                     f'fill="#111"/>')
    if inst.center is not None:
        parts.append(f'<circle cx="{sx(inst.center.x):.2f}" '
                     f'cy="{sy(inst.center.y):.2f}" r="4" fill="#ff7f0e"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
