"""Scaling harness for the lower-only solver on uniform instances."""

import time

from .generators import generate
from .lower import solve_lower_only


def run_scaling(sizes, repeats: int = 5, seed: int = 0):
    """Median solve time per size; generation is excluded from the timing."""
    results = {"sizes": list(sizes), "repeats": repeats, "seed": seed,
               "medians": [], "ratios": []}
    prev = None
    for si, n in enumerate(sizes):
        inst = generate("uniform", n, seed + si)
        pts, hps = list(inst.points), list(inst.halfplanes)
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            sol = solve_lower_only(pts, hps)
            times.append(time.perf_counter() - t0)
            if not sol.is_optimal:
                raise AssertionError("uniform instances are feasible by construction")
        times.sort()
        med = times[len(times) // 2]
        results["medians"].append(med)
        if prev is not None:
            results["ratios"].append(med / prev if prev > 0 else float("inf"))
        prev = med
    return results
