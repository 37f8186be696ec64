"""Combinatorial 1D coverage solvers.

All three geometric reductions end up here: greedy interval coverage over
index runs, minimum circle coverage by closed cyclic arcs (with the
transition-covering semantics of continuous arcs whose endpoints all lie on
the rank circle), and circular-point coverage via extended arcs on a doubled
rank circle.  Everything is pure rank arithmetic; no geometry.
"""

from dataclasses import dataclass

from .errors import EmptyInput
from .solution import CoverSolution, infeasible, optimal


@dataclass(frozen=True)
class IndexRun:
    """Inclusive run [i, j] of consecutive 0-based point indices."""

    i: int
    j: int
    halfplane: int = -1

    def __post_init__(self):
        if self.i > self.j or self.i < 0:
            raise ValueError(f"bad run [{self.i}, {self.j}]")

    def contains(self, k: int) -> bool:
        return self.i <= k <= self.j


@dataclass(frozen=True)
class CyclicArc:
    """Closed arc from rank start counterclockwise to rank end, inclusive.

    start == end covers a single rank unless full_circle is set.
    """

    start: int
    end: int
    halfplane: int = -1
    full_circle: bool = False

    def length_on(self, R: int) -> int:
        """Number of rank steps from start to end (0 for a single rank)."""
        if self.full_circle:
            return R
        return (self.end - self.start) % R

    def covers_rank(self, rank: int, R: int) -> bool:
        if self.full_circle:
            return True
        return (rank - self.start) % R <= self.length_on(R)


@dataclass(frozen=True)
class RankCircle:
    """Discretized circle of 2n ranks: even ranks are points, odd ranks gap midpoints."""

    n_points: int

    @property
    def size(self) -> int:
        return 2 * self.n_points

    def point_rank(self, i: int) -> int:
        return 2 * (i % self.n_points)

    def midpoint_rank(self, i: int) -> int:
        """Rank of the midpoint of the gap between point i and point i+1."""
        return (2 * i + 1) % self.size

    def is_point_rank(self, rank: int) -> bool:
        return rank % 2 == 0


def greedy_interval_cover(n_points: int, runs) -> CoverSolution:
    """Minimum subset of runs covering indices 0..n_points-1.

    Ties among candidates covering the leftmost uncovered index: largest j,
    then smallest defining halfplane index, then input position.  chosen in
    the result holds positions into `runs`.
    """
    if n_points == 0:
        return optimal(())
    order = sorted(range(len(runs)), key=lambda p: runs[p].i)
    chosen = []
    covered = -1  # indices 0..covered are covered
    ptr = 0
    best = None  # (j, -halfplane, -pos)
    while covered < n_points - 1:
        target = covered + 1
        while ptr < len(order) and runs[order[ptr]].i <= target:
            p = order[ptr]
            r = runs[p]
            key = (r.j, -r.halfplane, -p)
            if best is None or key > best:
                best = key
            ptr += 1
        if best is None or best[0] < target:
            return infeasible(target)
        chosen.append(-best[2])
        covered = best[0]
        best = None
    return optimal(chosen)


def circle_cover(R: int, arcs) -> CoverSolution:
    """Minimum subset of closed arcs covering the whole rank circle.

    Coverage is continuous: consecutive chosen arcs must share at least one
    rank (an uncovered rank-to-rank transition is a gap).  Merge-containment
    pruning, furthest-reach jump pointers and binary lifting over the doubled
    circle; optimum is the best over all starting arcs.  chosen holds
    positions into `arcs`.
    """
    if R <= 0:
        raise EmptyInput("circle of zero ranks")
    full = [p for p, a in enumerate(arcs) if a.full_circle]
    if full:
        best = min(full, key=lambda p: (arcs[p].halfplane, p))
        return optimal((best,))
    if not arcs:
        return infeasible(0)

    starts = [a.start % R for a in arcs]
    lens = [a.length_on(R) for a in arcs]

    # furthest absolute reach from any arc starting at position <= p (doubled circle)
    NEG = -1
    reach_at = [NEG] * (2 * R)
    arg_at = [-1] * (2 * R)
    for p, a in enumerate(arcs):
        for base in (starts[p], starts[p] + R):
            r = base + lens[p]
            # containment pruning: keep the longer reach; ties to smaller halfplane id
            if r > reach_at[base] or (
                r == reach_at[base]
                and arg_at[base] >= 0
                and (a.halfplane, p) < (arcs[arg_at[base]].halfplane, arg_at[base])
            ):
                reach_at[base] = r
                arg_at[base] = p
    M = [NEG] * (2 * R)
    Marg = [-1] * (2 * R)
    run_best, run_arg = NEG, -1
    for p in range(2 * R):
        if reach_at[p] > run_best or (
            reach_at[p] == run_best
            and run_arg >= 0
            and reach_at[p] >= 0
            and (arcs[arg_at[p]].halfplane, arg_at[p])
            < (arcs[run_arg].halfplane, run_arg)
        ):
            run_best, run_arg = reach_at[p], arg_at[p]
        M[p], Marg[p] = run_best, run_arg

    # binary lifting over positions: F(e) = M[e] (stall when M[e] <= e)
    K = max(1, (2 * R).bit_length())
    F = [[0] * (2 * R) for _ in range(K)]
    for e in range(2 * R):
        m = M[e]
        F[0][e] = m if m > e else e  # clamp stalls to fixed points
    for k in range(1, K):
        prev = F[k - 1]
        cur = F[k]
        for e in range(2 * R):
            nxt = prev[e]
            cur[e] = prev[nxt] if nxt < 2 * R else nxt

    best_count = None
    best_start = None
    for p in sorted(range(len(arcs)), key=lambda p: (arcs[p].halfplane, p)):
        s = starts[p]
        target = s + R
        e = s + lens[p]  # always < target: non-full arcs have length <= R-1
        steps = 0
        for k in range(K - 1, -1, -1):
            ne = F[k][e]
            if ne < target and ne > e:
                e = ne
                steps += 1 << k
        if F[0][e] < target:
            continue  # stalled: this start cannot close the circle
        cnt = steps + 2
        if best_count is None or cnt < best_count:
            best_count, best_start = cnt, p
    if best_count is None:
        return infeasible(_stall_witness(R, M, starts, lens))

    # reconstruct the chosen arcs by replaying greedy jumps from best_start
    chosen = [best_start]
    target = starts[best_start] + R
    e = starts[best_start] + lens[best_start]
    while e < target:
        chosen.append(Marg[e])
        e = M[e]
    return optimal(chosen)


def _stall_witness(R, M, starts, lens):
    """A rank whose outgoing transition no arc can extend past."""
    if not starts:
        return 0
    e = starts[0] + lens[0]
    while e < 2 * R and M[e] > e:
        e = M[e]
    return e % R


def extend_arcs(circle: RankCircle, arcs):
    """Extend arcs on the doubled rank circle into adjacent gaps up to midpoints.

    Arcs live on circle.size ranks (even = points).  An endpoint at a point
    rank moves one step into the neighbouring gap; an endpoint already at a
    gap midpoint stays.  Covered point sets are unchanged.
    """
    R = circle.size
    out = []
    for a in arcs:
        if a.full_circle:
            out.append(a)
            continue
        s, e = a.start % R, a.end % R
        length = (e - s) % R
        if s % 2 == 0:
            s = (s - 1) % R
            length += 1
        if e % 2 == 0:
            e = (e + 1) % R
            length += 1
        if length >= R:
            out.append(CyclicArc(0, R - 1, a.halfplane, full_circle=True))
        else:
            out.append(CyclicArc(s, e, a.halfplane))
    return out


def circular_point_cover(circle: RankCircle, arcs) -> CoverSolution:
    """Minimum subset of arcs (over point ranks 0..n-1) covering every point.

    Shortcut when a single arc already covers all points; otherwise reduce to
    circle coverage of the extended arcs on the doubled circle.  chosen holds
    positions into `arcs`.
    """
    n = circle.n_points
    if n == 0:
        return optimal(())
    spanning = [
        p for p, a in enumerate(arcs)
        if a.full_circle or (a.end - a.start) % n == n - 1
    ]
    if spanning:
        best = min(spanning, key=lambda p: (arcs[p].halfplane, p))
        return optimal((best,))
    if not arcs:
        return infeasible(0)
    covered = [False] * n
    for a in arcs:
        k = a.start % n
        for _ in range((a.end - a.start) % n + 1):
            covered[k] = True
            k = (k + 1) % n
    if not all(covered):
        return infeasible(covered.index(False))
    doubled = [
        CyclicArc(2 * (a.start % n), 2 * (a.end % n), a.halfplane) for a in arcs
    ]
    sol = circle_cover(circle.size, extend_arcs(circle, doubled))
    if not sol.is_optimal:
        raise AssertionError("extended arcs must cover the circle when points are covered")
    return optimal(sol.chosen)
