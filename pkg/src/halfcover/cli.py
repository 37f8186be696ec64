"""Command-line driver: solve / verify / generate / bench / plot.

Exit codes: 0 for optimal or true, 1 for infeasible or false, 2 on usage or
input errors.  Output is byte-deterministic for a fixed input and seed.
"""

import argparse
import sys
from itertools import combinations

from .bench import run_scaling
from .errors import HalfcoverError
from .general import solve_general
from .generators import KINDS as GEN_KINDS
from .generators import generate
from .instances import (Instance, dumps_canonical, format_scalar,
                        load_instance, save_instance, serialize_instance)
from .kernel import is_epsilon_kernel, optimal_kernel_bruteforce
from .lower import solve_lower_only
from .oracle import OracleBudget, brute_min_point_cover, brute_star_cover
from .solution import CoverSolution
from .star import (StarPolygon, solve_polyline_cover, solve_star_cover,
                   verify_polyline_cover)
from .viz import render_svg


def _parser():
    p = argparse.ArgumentParser(prog="halfcover",
                                description="exact minimum halfplane coverage suite")
    sub = p.add_subparsers(dest="command", required=True)

    def common(q, fmt_default="json"):
        q.add_argument("--input", help="instance JSON file")
        q.add_argument("--output", help="output file (default stdout)")
        q.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        q.add_argument("--budget-n", type=int, default=None,
                       help="oracle enumeration cap")
        q.add_argument("--format", choices=("json", "svg"), default=fmt_default)
        return q

    for name in ("solve-lower", "solve-star", "solve-polyline", "solve-general",
                 "kernel-check", "kernel-opt", "oracle"):
        common(sub.add_parser(name))
    g = common(sub.add_parser("gen"))
    g.add_argument("--kind", required=True, choices=GEN_KINDS)
    g.add_argument("--n", type=int, required=True)
    b = common(sub.add_parser("bench"))
    b.add_argument("--sizes", default="4096,8192,16384",
                   help="comma-separated instance sizes")
    b.add_argument("--repeats", type=int, default=5)
    common(sub.add_parser("plot"), fmt_default="svg")
    return p


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _solution_doc(sol: CoverSolution):
    doc = {"status": sol.status, "size": sol.size, "chosen": list(sol.chosen)}
    if sol.witness is not None:
        w = sol.witness
        doc["witness"] = format_scalar(w) if not isinstance(w, int) else w
    return doc


def _need_instance(args):
    if not args.input:
        raise HalfcoverError("--input is required for this command")
    return load_instance(args.input)


def _as_star(inst: Instance) -> StarPolygon:
    return StarPolygon(inst.center, inst.vertices)


def _brute_polyline(inst: Instance, budget):
    cap = budget.max_halfplanes
    if len(inst.halfplanes) > cap or len(inst.vertices) > budget.max_points:
        raise HalfcoverError("polyline oracle over budget")
    m = len(inst.halfplanes)
    for k in range(1, m + 1):
        for sub in sorted(combinations(range(m), k), key=lambda s: tuple(reversed(s))):
            if verify_polyline_cover(inst.vertices, [inst.halfplanes[i] for i in sub]):
                return CoverSolution("optimal", tuple(sub))
    return CoverSolution("infeasible", (), 0)


def cli_main(argv) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else int(e.code or 0)
    try:
        return _dispatch(args)
    except HalfcoverError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "gen":
        inst = generate(args.kind, args.n, args.seed)
        text = dumps_canonical(serialize_instance(inst))
        _emit(text, args.output)
        return 0
    if cmd == "bench":
        sizes = [int(s) for s in args.sizes.split(",") if s]
        res = run_scaling(sizes, repeats=args.repeats, seed=args.seed)
        _emit(dumps_canonical(res), args.output)
        return 0

    inst = _need_instance(args)
    if cmd == "plot":
        if args.format != "svg":
            raise HalfcoverError("plot only emits svg")
        _emit(render_svg(inst), args.output)
        return 0
    if args.format != "json":
        raise HalfcoverError(f"{cmd} only emits json")

    if cmd == "solve-lower":
        sol = solve_lower_only(inst.points, inst.halfplanes)
    elif cmd == "solve-general":
        sol = solve_general(inst.points, inst.halfplanes)
    elif cmd == "solve-star":
        sol = solve_star_cover(_as_star(inst), inst.halfplanes)
    elif cmd == "solve-polyline":
        sol = solve_polyline_cover(inst.vertices, inst.halfplanes)
    elif cmd == "oracle":
        budget = OracleBudget(max_points=args.budget_n or 16,
                              max_halfplanes=args.budget_n or 16)
        if inst.kind == "points":
            sol = brute_min_point_cover(inst.points, inst.halfplanes, budget)
        elif inst.kind == "star":
            sol = brute_star_cover(_as_star(inst), inst.halfplanes, budget)
        else:
            sol = _brute_polyline(inst, budget)
    elif cmd == "kernel-check":
        if inst.epsilon is None or inst.subset is None:
            raise HalfcoverError("kernel-check needs 'epsilon' and 'subset' fields")
        subset_pts = [inst.points[i] for i in inst.subset]
        ok, direction = is_epsilon_kernel(subset_pts, inst.points, inst.epsilon)
        doc = {"status": "true" if ok else "false"}
        if direction is not None:
            doc["violating_direction"] = [format_scalar(direction[0]),
                                          format_scalar(direction[1])]
        _emit(dumps_canonical(doc), args.output)
        return 0 if ok else 1
    elif cmd == "kernel-opt":
        if inst.epsilon is None:
            raise HalfcoverError("kernel-opt needs an 'epsilon' field")
        cap = args.budget_n or 16
        sol = optimal_kernel_bruteforce(inst.points, inst.epsilon, cap=cap)
        _emit(dumps_canonical(_solution_doc(sol)), args.output)
        return 0
    else:  # pragma: no cover
        raise HalfcoverError(f"unknown command {cmd}")

    _emit(dumps_canonical(_solution_doc(sol)), args.output)
    return 0 if sol.is_optimal else 1


def main():
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
