"""Acceptance suite: every criterion at its stated size and tolerance.

Each test prints one PASS/FAIL line.  All checks are exact except the
scaling criterion, whose per-doubling time ratio is pinned at 2.8.
"""

import math
import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from conftest import (line_polygon_chords, rand_lower_instance,
                      rand_mixed_instance, rand_star_halfplanes,
                      rand_star_polygon)

from halfcover.cover1d import CyclicArc, IndexRun, RankCircle, circle_cover, \
    circular_point_cover, extend_arcs, greedy_interval_cover
from halfcover.general import (interior_candidate_arcs, solve_general,
                               solve_two_cover)
from halfcover.geometry import (Halfplane, InteriorWitness, Point, angle_key,
                                cross, max_slack_point)
from halfcover.kernel import is_epsilon_kernel, optimal_kernel_bruteforce
from halfcover.lower import (build_candidates, check_feasible_lower, prepare,
                             solve_lower_only)
from halfcover.oracle import (OracleBudget, brute_min_point_cover,
                              brute_star_cover, naive_runs)
from halfcover.rangetree import RangeOutsideTree
from halfcover.star import solve_star_cover, verify_boundary_cover


def _report(tag, ok, detail=""):
    print(f"[{tag}] {'PASS' if ok else 'FAIL'}{(' ' + detail) if detail else ''}")
    assert ok, f"{tag} failed {detail}"


def test_c01_lower_oracle_equivalence():
    rnd = random.Random(1001)
    for t in range(2000):
        P, H = rand_lower_instance(rnd, nmax=10, mmax=10, coord=20)
        got = solve_lower_only(P, H)
        want = brute_min_point_cover(P, H)
        assert got.status == want.status, t
        if got.is_optimal:
            assert got.size == want.size, t
            for p in P:
                assert any(H[i].contains(p) for i in got.chosen), t
    _report("C01 lower-only oracle equivalence (2000 instances)", True)


def test_c02_general_oracle_equivalence():
    rnd = random.Random(1002)
    for t in range(1000):
        P, H = rand_mixed_instance(rnd, nmax=8, mmax=8)
        got = solve_general(P, H)
        want = brute_min_point_cover(P, H)
        assert got.status == want.status, t
        if got.is_optimal:
            assert got.size == want.size, t
            for p in P:
                assert any(H[i].contains(p) for i in got.chosen), t
    _report("C02 general-cover oracle equivalence (1000 instances)", True)


def test_c03_star_oracle_equivalence():
    rnd = random.Random(1003)
    for t in range(300):
        poly = rand_star_polygon(rnd, nmax=8)
        H = rand_star_halfplanes(rnd, rnd.randint(1, 8))
        got = solve_star_cover(poly, H)
        want = brute_star_cover(poly, H)
        assert got.status == want.status, t
        if got.is_optimal:
            assert got.size == want.size, t
            assert verify_boundary_cover(poly, [H[i] for i in got.chosen]), t
    _report("C03 star-cover oracle equivalence (300 instances)", True)


def test_c04a_lemma3_containment_lower():
    rnd = random.Random(1004)
    checked = 0
    violations = 0
    while checked < 500:
        P, H = rand_lower_instance(rnd)
        inst = prepare(P, H)
        if not check_feasible_lower(inst)[0]:
            continue
        checked += 1
        tree = RangeOutsideTree(inst.points)
        cand = {(c.run.i, c.run.j) for c in build_candidates(inst, tree)}
        for h in inst.halfplanes:
            for r in naive_runs(inst.points, h):
                if (r.i, r.j) in cand:
                    continue
                if not any(ci <= r.i and r.j <= cj for ci, cj in cand):
                    violations += 1
    _report("C04a candidate containment, interval case (500 instances)",
            violations == 0, f"violations={violations}")


def test_c04b_lemma7_containment_star():
    rnd = random.Random(1005)
    checked = 0
    violations = 0
    while checked < 500:
        poly = rand_star_polygon(rnd, nmax=10)
        H = rand_star_halfplanes(rnd, rnd.randint(1, 10))
        from halfcover.geometry import dominated_flags, halfplane_intersection
        from halfcover.star import (NormalFan, candidate_arc_star,
                                    check_feasible_star)
        feasible, _ = check_feasible_star(poly, H)
        if not feasible:
            continue
        checked += 1
        flags = dominated_flags(H)
        kept = [i for i in range(len(H)) if not flags[i]]
        region = halfplane_intersection([H[i].complement() for i in kept])
        fan = NormalFan(region)
        edge_of = {src: e for e, src in enumerate(region.edge_sources)}
        cands = []
        for pos, i in enumerate(kept):
            ch = candidate_arc_star(poly, None, i, H[i], region, fan,
                                    edge_of.get(pos))
            if ch is not None:
                cands.append(ch)
        o = poly.center

        def arc_keys(p, q):
            d1 = (p.x - o.x, p.y - o.y)
            d2 = (q.x - o.x, q.y - o.y)
            if cross(d1[0], d1[1], d2[0], d2[1]) < 0:
                d1, d2 = d2, d1
            return angle_key(*d1), angle_key(*d2)

        cand_arcs = [arc_keys(c.p_cw, c.p_ccw) for c in cands]
        naive_arcs = []
        for i in kept:
            for (p, q) in line_polygon_chords(H[i], poly):
                naive_arcs.append(arc_keys(p, q))
        keys = sorted({k for a in cand_arcs + naive_arcs for k in a})
        rank = {k: i for i, k in enumerate(keys)}
        R = len(keys)

        def contains(outer, inner):
            s1, e1 = rank[outer[0]], rank[outer[1]]
            s2, e2 = rank[inner[0]], rank[inner[1]]
            return (s2 - s1) % R + (e2 - s2) % R <= (e1 - s1) % R

        for arc in naive_arcs:
            if arc in cand_arcs:
                continue
            if not any(contains(c, arc) for c in cand_arcs):
                violations += 1
    _report("C04b candidate containment, star chords (500 instances)",
            violations == 0, f"violations={violations}")


def test_c04c_lemma11_containment_cyclic():
    rnd = random.Random(1006)
    checked = 0
    violations = 0
    while checked < 500:
        P, H = rand_mixed_instance(rnd)
        res = max_slack_point(H)
        if not isinstance(res, InteriorWitness):
            continue
        if not all(any(h.contains(p) for h in H) for p in P):
            continue
        checked += 1
        pts, kept, arcs = interior_candidate_arcs(P, H, res.point)
        n = len(pts)
        cand = {(a.start, a.end) for a in arcs if not a.full_circle}
        has_full = any(a.full_circle for a in arcs)
        for i in kept:
            for r in naive_runs(pts, H[i], cyclic=True):
                if r.full_circle or (r.start, r.end) in cand:
                    continue
                ok = has_full or any(
                    (r.start - b.start) % n + (r.end - r.start) % n
                    <= (b.end - b.start) % n
                    for b in arcs if not b.full_circle)
                if not ok:
                    violations += 1
    _report("C04c candidate containment, cyclic case (500 instances)",
            violations == 0, f"violations={violations}")


def test_c05_zigzag_pruning():
    from halfcover.generators import generate
    sizes_ok = True
    for n in (64, 128, 256):
        inst = generate("zigzag", n, 0)
        prep = prepare(list(inst.points), list(inst.halfplanes))
        naive_total = sum(len(naive_runs(prep.points, h)) for h in prep.halfplanes)
        tree = RangeOutsideTree(prep.points)
        cands = build_candidates(prep, tree)
        sizes_ok &= naive_total >= n * n // 8 and len(cands) <= n
    inst = generate("zigzag", 64, 0)
    prep = prepare(list(inst.points), list(inst.halfplanes))
    tree = RangeOutsideTree(prep.points)
    pruned = greedy_interval_cover(len(prep.points),
                                   [c.run for c in build_candidates(prep, tree)])
    naive_all = []
    for k, h in enumerate(prep.halfplanes):
        for r in naive_runs(prep.points, h):
            naive_all.append(IndexRun(r.i, r.j, k))
    full = greedy_interval_cover(len(prep.points), naive_all)
    equal = pruned.is_optimal and full.is_optimal and pruned.size == full.size
    _report("C05 zigzag pruning (|S| >= n^2/8, |candidates| <= n, equal optima)",
            sizes_ok and equal)


@pytest.mark.slow
def test_c06_scaling():
    from halfcover.bench import run_scaling
    sizes = [1 << k for k in range(12, 18)]
    res = run_scaling(sizes, repeats=5, seed=0)
    ratios = res["ratios"]
    ok = all(r <= 2.8 for r in ratios)
    detail = " ".join(f"{r:.2f}" for r in ratios)
    _report("C06 scaling ratios (median of 5, doubling ratio <= 2.8)", ok, detail)


def _greedy_circle_oracle(R, arcs):
    """Naive greedy-from-every-start circle cover (independent of lifting)."""
    full = [p for p, a in enumerate(arcs) if a.full_circle]
    if full:
        return 1
    if not arcs:
        return None
    starts = [a.start % R for a in arcs]
    lens = [(a.end - a.start) % R for a in arcs]
    best_reach = [-1] * (2 * R)
    for p in range(len(arcs)):
        for base in (starts[p], starts[p] + R):
            best_reach[base] = max(best_reach[base], base + lens[p])
    M = [-1] * (2 * R)
    run = -1
    for p in range(2 * R):
        run = max(run, best_reach[p])
        M[p] = run
    best = None
    for p in range(len(arcs)):
        target = starts[p] + R
        e = starts[p] + lens[p]
        cnt = 1
        while e < target:
            ne = M[e]
            if ne <= e:
                cnt = None
                break
            e = ne
            cnt += 1
        if cnt is not None and (best is None or cnt < best):
            best = cnt
    return best


def test_c07_circle_cover_oracle():
    rnd = random.Random(1007)
    for t in range(1000):
        R = rnd.randint(1, 300)
        m = rnd.randint(1, 200)
        arcs = []
        for _ in range(m):
            st = rnd.randint(0, R - 1)
            arcs.append(CyclicArc(st, (st + rnd.randint(0, R - 1)) % R,
                                  rnd.randint(0, 9),
                                  full_circle=(rnd.random() < 0.01)))
        got = circle_cover(R, arcs)
        want = _greedy_circle_oracle(R, arcs)
        if want is None:
            assert got.status == "infeasible", t
        else:
            assert got.is_optimal and got.size == want, t
    _report("C07 circle cover vs greedy-from-every-start (1000 arc sets)", True)


def test_c08_extended_arcs():
    rnd = random.Random(1008)
    for t in range(500):
        n = rnd.randint(1, 8)
        m = rnd.randint(1, 8)
        c = RankCircle(n)
        arcs = []
        for _ in range(m):
            st = rnd.randint(0, n - 1)
            arcs.append(CyclicArc(st, (st + rnd.randint(0, n - 1)) % n,
                                  rnd.randint(0, 9)))
        doubled = [CyclicArc(2 * a.start, 2 * a.end, a.halfplane) for a in arcs]
        exts = extend_arcs(c, doubled)
        for d, e in zip(doubled, exts):
            if not e.full_circle:
                off = (d.start - e.start) % c.size
                assert off + d.length_on(c.size) <= e.length_on(c.size), t
            for i in range(n):
                assert d.covers_rank(2 * i, c.size) == e.covers_rank(2 * i, c.size), t
        # subset-level feasibility equivalence
        for k in range(0, m + 1):
            for sub in combinations(range(m), k):
                pts_cov = set()
                for p in sub:
                    a = arcs[p]
                    L = (a.end - a.start) % n
                    pts_cov.update((a.start + s) % n for s in range(L + 1))
                covers_points = len(pts_cov) == n
                covers_c = _covers_circle(c.size, [exts[p] for p in sub])
                assert covers_points == covers_c, (t, sub)
    _report("C08 extended arcs: containment, point sets, subset equivalence "
            "(500 instances)", True)


def _covers_circle(R, arcs):
    cov_rank = [False] * R
    cov_tr = [False] * R
    for a in arcs:
        if a.full_circle:
            return True
        L = a.length_on(R)
        k = a.start % R
        for step in range(L + 1):
            cov_rank[k] = True
            if step < L:
                cov_tr[k] = True
            k = (k + 1) % R
    return all(cov_rank) and all(cov_tr)


def test_c09_parabola_family():
    from halfcover.generators import generate
    for trial in range(100):
        inst = generate("parabola-eq", 100, trial)
        sol = solve_lower_only(list(inst.points), list(inst.halfplanes))
        assert sol.is_optimal and sol.size == 100, trial
        inst = generate("parabola-neq", 100, trial)
        sol = solve_lower_only(list(inst.points), list(inst.halfplanes))
        assert sol.status == "infeasible", trial
    _report("C09 parabola family (100 trials at n=100)", True)


def test_c10_two_cover_planted():
    from halfcover.generators import generate
    budget = OracleBudget(max_points=64, max_halfplanes=48, max_subset_size=2)
    rnd = random.Random(1010)
    for t in range(500):
        inst = generate("planted-2cover", rnd.randint(4, 40), 2000 + t)
        pair = solve_two_cover(list(inst.points), list(inst.halfplanes))
        assert pair is not None, t
        hs = inst.halfplanes
        for p in inst.points:
            assert hs[pair[0]].contains(p) or hs[pair[1]].contains(p), t
        want = brute_min_point_cover(list(inst.points), list(hs), budget)
        assert want.is_optimal and want.size <= 2, t
    for t in range(200):
        inst = generate("planted-3cover", rnd.randint(4, 40), 3000 + t)
        pair = solve_two_cover(list(inst.points), list(inst.halfplanes))
        assert pair is None, t
        want = brute_min_point_cover(list(inst.points), list(inst.halfplanes), budget)
        assert want.status == "infeasible", t  # no cover of size <= 2 exists
    _report("C10 planted two-cover families (500 + 200 instances)", True)


_COS = None


def _sampled_directions():
    global _COS
    if _COS is None:
        _COS = [(math.cos(2 * math.pi * t / 10000), math.sin(2 * math.pi * t / 10000))
                for t in range(10000)]
    return _COS


def _sampled_contradicts(subset_hull, full_hull, eps):
    """True if float sampling finds a violation (10^4 directions)."""
    one_minus = 1 - float(eps)
    for ux, uy in _sampled_directions():
        vals_q = [ux * float(p.x) + uy * float(p.y) for p in full_hull]
        wq = max(vals_q) - min(vals_q)
        vals_p = [ux * float(p.x) + uy * float(p.y) for p in subset_hull]
        wp = max(vals_p) - min(vals_p)
        if wp < one_minus * wq - 1e-9:
            return True
    return False


def test_c11_kernel():
    from halfcover.geometry import convex_hull
    square_c = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1),
                Point(F(1, 2), F(1, 2))]
    assert optimal_kernel_bruteforce(square_c, F(1, 10)).size == 4
    rnd = random.Random(1011)
    for t in range(200):
        n = rnd.randint(1, 12)
        Q = [Point(rnd.randint(-12, 12), rnd.randint(-12, 12)) for _ in range(n)]
        eps = rnd.choice((F(1, 20), F(1, 5)))
        sol = optimal_kernel_bruteforce(Q, eps)
        witness = [Q[i] for i in sol.chosen]
        ok, _ = is_epsilon_kernel(witness, Q, eps)
        assert ok, t
        # exact True decisions are never contradicted by dense sampling
        assert not _sampled_contradicts(convex_hull(witness), convex_hull(Q), eps), t
        # minimality: dropping any witness point leaves no smaller kernel there
        for j in range(sol.size):
            smaller = witness[:j] + witness[j + 1:]
            if smaller:
                ok2, _ = is_epsilon_kernel(smaller, Q, eps)
                assert not ok2 or sol.size == 0, t
    _report("C11 kernel checker and brute-force optimum (200 instances)", True)


def test_c12_determinism(tmp_path):
    from halfcover.cli import cli_main
    matrix = [("uniform", 24), ("parabola-eq", 16), ("parabola-neq", 16),
              ("zigzag", 16), ("star-random", 8), ("polyline-lb", 8),
              ("planted-2cover", 16), ("planted-3cover", 12)]
    solver_for = {"points": "solve-general", "star": "solve-star",
                  "polyline": "solve-polyline"}
    import json
    for kind, n in matrix:
        f1, f2 = tmp_path / "g1.json", tmp_path / "g2.json"
        assert cli_main(["gen", "--kind", kind, "--n", str(n), "--seed", "7",
                         "--output", str(f1)]) == 0
        assert cli_main(["gen", "--kind", kind, "--n", str(n), "--seed", "7",
                         "--output", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes(), kind
        doc = json.loads(f1.read_text())
        cmd = solver_for[doc["kind"]]
        o1, o2 = tmp_path / "s1.json", tmp_path / "s2.json"
        rc1 = cli_main([cmd, "--input", str(f1), "--output", str(o1)])
        rc2 = cli_main([cmd, "--input", str(f1), "--output", str(o2)])
        assert rc1 == rc2 and o1.read_bytes() == o2.read_bytes(), kind
        p1, p2 = tmp_path / "p1.svg", tmp_path / "p2.svg"
        assert cli_main(["plot", "--input", str(f1), "--output", str(p1)]) == 0
        assert cli_main(["plot", "--input", str(f1), "--output", str(p2)]) == 0
        assert p1.read_bytes() == p2.read_bytes(), kind
    _report("C12 byte-identical outputs across repeated runs (full matrix)", True)
