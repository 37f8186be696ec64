"""Brute-force ground truth, independent of the solver code paths.

Coverage predicates are written out locally so that cross-validation against
the solvers is genuine.  Subset enumeration goes by increasing cardinality in
colex order for reproducible witnesses.
"""

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .cover1d import CyclicArc, IndexRun
from .errors import BudgetExceeded
from .solution import CoverSolution, infeasible, optimal


@dataclass(frozen=True)
class OracleBudget:
    max_points: int = 16
    max_halfplanes: int = 16
    max_subset_size: Optional[int] = None
    time_cap_s: Optional[float] = None


DEFAULT_BUDGET = OracleBudget()


def _covered(h, p) -> bool:
    return h.a * p.x + h.b * p.y <= h.c


def _colex_subsets(m, k):
    return sorted(combinations(range(m), k), key=lambda s: tuple(reversed(s)))


def brute_min_point_cover(points, halfplanes, budget: Optional[OracleBudget] = None) -> CoverSolution:
    """Exact minimum halfplane cover of a point set by subset enumeration.

    With budget.max_subset_size set, a result of infeasible with witness None
    means no cover within that cardinality cap exists.
    """
    budget = budget or DEFAULT_BUDGET
    if len(points) > budget.max_points or len(halfplanes) > budget.max_halfplanes:
        raise BudgetExceeded(
            f"{len(points)} points / {len(halfplanes)} halfplanes over budget")
    if not points:
        return optimal(())
    cover_sets = []
    for p in points:
        s = frozenset(i for i, h in enumerate(halfplanes) if _covered(h, p))
        cover_sets.append(s)
    for idx, s in enumerate(cover_sets):
        if not s:
            return infeasible(idx)
    m = len(halfplanes)
    deadline = None
    if budget.time_cap_s is not None:
        deadline = time.monotonic() + budget.time_cap_s
    kmax = budget.max_subset_size if budget.max_subset_size is not None else m
    for k in range(1, kmax + 1):
        for sub in _colex_subsets(m, k):
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("oracle time cap hit")
            chosen = set(sub)
            if all(s & chosen for s in cover_sets):
                return optimal(sub)
    return infeasible(None)


def naive_runs(points_ordered, h, cyclic: bool = False):
    """Every maximal run of consecutive points covered by h (full Gamma_h)."""
    n = len(points_ordered)
    cov = [_covered(h, p) for p in points_ordered]
    if not cyclic:
        runs = []
        i = 0
        while i < n:
            if not cov[i]:
                i += 1
                continue
            j = i
            while j + 1 < n and cov[j + 1]:
                j += 1
            runs.append(IndexRun(i, j))
            i = j + 1
        return runs
    if all(cov):
        return [CyclicArc(0, n - 1, full_circle=True)]
    if not any(cov):
        return []
    start = cov.index(False)
    runs = []
    k = start
    for _ in range(n):
        k = (k + 1) % n
        if cov[k] and not cov[(k - 1) % n]:
            j = k
            while cov[(j + 1) % n]:
                j = (j + 1) % n
            runs.append(CyclicArc(k, j))
    # each run found once because iteration passes each start exactly once
    uniq = []
    seen = set()
    for r in runs:
        if (r.start, r.end) not in seen:
            seen.add((r.start, r.end))
            uniq.append(r)
    return uniq


def brute_star_cover(poly, halfplanes, budget: Optional[OracleBudget] = None) -> CoverSolution:
    """Exact minimum subset covering a star polygon boundary, via the exact checker."""
    from .star import verify_boundary_cover

    budget = budget or DEFAULT_BUDGET
    if len(poly.vertices) > budget.max_points or len(halfplanes) > budget.max_halfplanes:
        raise BudgetExceeded("star instance over budget")
    m = len(halfplanes)
    deadline = None
    if budget.time_cap_s is not None:
        deadline = time.monotonic() + budget.time_cap_s
    kmax = budget.max_subset_size if budget.max_subset_size is not None else m
    for k in range(1, kmax + 1):
        for sub in _colex_subsets(m, k):
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("oracle time cap hit")
            if verify_boundary_cover(poly, [halfplanes[i] for i in sub]):
                return optimal(sub)
    return infeasible(None)
