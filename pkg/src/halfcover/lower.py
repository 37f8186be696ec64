"""Lower-only halfplane coverage.

Reduction to interval coverage over point indices: feasibility against the
upper envelope of the bounding lines, one candidate run per halfplane
(anchored through the envelope edge or the envelope vertex whose tangent is
parallel to the bounding line), greedy interval cover, lift back to original
halfplane indices.  O(n log^2 n) with the hull segment tree standing in for
ray shooting.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .cover1d import IndexRun, greedy_interval_cover
from .errors import InvalidInstance
from .geometry import (EnvelopeChain, Halfplane, Line, Point, generic_rotation,
                       scale_to_ints, upper_envelope)
from .rangetree import RangeOutsideTree, maximal_run
from .solution import CoverSolution, infeasible, optimal


@dataclass(frozen=True)
class LowerInstance:
    """Normalized lower-only instance: integer data, x-sorted distinct points.

    halfplanes are the kept (non-dominated) ones with pairwise distinct
    slopes; kept_original / point_original map back to input indices.
    """

    points: Tuple[Point, ...]
    halfplanes: Tuple[Halfplane, ...]
    kept_original: Tuple[int, ...]
    point_original: Tuple[int, ...]
    envelope: EnvelopeChain
    xs: Tuple[int, ...]

    def edge_of(self, k: int) -> Optional[int]:
        return self._edge_map.get(k)

    @property
    def _edge_map(self):
        d = self.__dict__.get("_edge_cache")
        if d is None:
            d = {src: i for i, src in enumerate(self.envelope.sources)}
            self.__dict__["_edge_cache"] = d
        return d


@dataclass(frozen=True)
class CandidateSegment:
    """Member of the pruned candidate set: one maximal run per halfplane."""

    run: IndexRun
    halfplane: int  # position into LowerInstance.halfplanes


def prepare(points, halfplanes) -> LowerInstance:
    """Rotate to general position, deduplicate, integerize, sort, build the envelope."""
    for h in halfplanes:
        if h.b <= 0:
            raise InvalidInstance(f"not a lower halfplane: {h}")
    seen = {}
    dedup_pts, pt_orig = [], []
    for i, p in enumerate(points):
        key = (Fraction(p.x), Fraction(p.y))
        if key in seen:
            continue
        seen[key] = i
        dedup_pts.append(p)
        pt_orig.append(i)

    def stays_lower(_pts, hps):
        return all(h.b > 0 for h in hps)

    rot = generic_rotation(dedup_pts, halfplanes, extra_ok=stays_lower)
    xs_i, ys_i, rows = scale_to_ints(rot.points, rot.halfplanes)
    order = sorted(range(len(xs_i)), key=lambda i: xs_i[i])
    pts = tuple(Point(xs_i[i], ys_i[i]) for i in order)
    pt_orig = tuple(pt_orig[i] for i in order)
    kept = [i for i in range(len(rows)) if not rot.dominated[i]]
    hps = tuple(Halfplane(*rows[i]) for i in kept)
    lines = [Line(Fraction(-h.a, h.b), Fraction(h.c, h.b)) for h in hps]
    env = upper_envelope(lines, range(len(hps)))
    return LowerInstance(pts, hps, tuple(kept), pt_orig, env,
                         tuple(p.x for p in pts))


def check_feasible_lower(inst: LowerInstance):
    """(True, None) iff every point lies weakly below the envelope; else (False, witness)."""
    env = inst.envelope
    for pos, p in enumerate(inst.points):
        if env.value_at(p.x) < p.y:
            return False, inst.point_original[pos]
    return True, None


def _edge_span(inst: LowerInstance, edge_idx: int):
    breaks = inst.envelope.breaks
    lo = breaks[edge_idx - 1] if edge_idx > 0 else None
    hi = breaks[edge_idx] if edge_idx < len(breaks) else None
    return lo, hi


def candidate_for_halfplane(inst: LowerInstance, k: int,
                            tree: RangeOutsideTree) -> Optional[CandidateSegment]:
    """Candidate run for kept halfplane k: the unique member of its run set
    whose x-span meets the halfplane's envelope edge, or the run at the
    envelope vertex with tangent parallel to its bounding line."""
    h = inst.halfplanes[k]
    xs = inst.xs
    n = len(xs)
    edge_idx = inst.edge_of(k)
    anchor = None
    if edge_idx is not None:
        lo, hi = _edge_span(inst, edge_idx)
        i = 0 if lo is None else bisect_left(xs, lo)
        if i < n and (hi is None or xs[i] <= hi):
            anchor = i
        else:
            pl, pr = i - 1, i
            if 0 <= pl and pr < n and tree.covers(h, pl) and tree.covers(h, pr):
                anchor = pl
    else:
        m = Fraction(-h.a, h.b)
        pos = bisect_left(inst.envelope.slopes, m)
        vx = inst.envelope.breaks[pos - 1]
        bl = bisect_right(xs, vx) - 1
        br = bl + 1
        cands = []
        if 0 <= bl:
            cands.append((vx - xs[bl], bl))
        if br < n:
            cands.append((xs[br] - vx, br))
        cands.sort()
        for _, idx in cands:
            if tree.covers(h, idx):
                anchor = idx
                break
    if anchor is None:
        return None
    run = maximal_run(tree, anchor, h, k)
    if run is None:
        return None
    return CandidateSegment(run, k)


def build_candidates(inst: LowerInstance, tree: Optional[RangeOutsideTree] = None):
    """The pruned candidate set: at most one run per halfplane."""
    if tree is None:
        tree = RangeOutsideTree(inst.points)
    out = []
    for k in range(len(inst.halfplanes)):
        c = candidate_for_halfplane(inst, k, tree)
        if c is not None:
            out.append(c)
    return out


def solve_lower_only(points, halfplanes) -> CoverSolution:
    """Exact minimum subset of lower halfplanes covering all points."""
    if not points:
        return optimal(())
    if not halfplanes:
        return infeasible(0)
    inst = prepare(points, halfplanes)
    ok, witness = check_feasible_lower(inst)
    if not ok:
        return infeasible(witness)
    tree = RangeOutsideTree(inst.points)
    cands = build_candidates(inst, tree)
    runs = [c.run for c in cands]
    sol = greedy_interval_cover(len(inst.points), runs)
    if not sol.is_optimal:
        raise AssertionError("candidate set must cover a feasible instance")
    chosen = sorted(inst.kept_original[runs[p].halfplane] for p in sol.chosen)
    return optimal(chosen)
