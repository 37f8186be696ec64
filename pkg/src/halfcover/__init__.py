"""Exact solvers for minimum halfplane coverage of planar point sets,
star-shaped polygon boundaries, and x-monotone polylines, plus exact
epsilon-kernel tooling, brute-force oracles, and instance generators."""

from .cover1d import (CyclicArc, IndexRun, RankCircle, circle_cover,
                      circular_point_cover, extend_arcs, greedy_interval_cover)
from .errors import (BudgetExceeded, CapExceeded, EmptyInput,
                     GenericityFailure, HalfcoverError, HalfplaneContainsCenter,
                     InvalidInstance, NotStarShaped, SubsetViolation)
from .general import (KRegionQuery, build_k_region, dual_line_of_point,
                      dual_point_of_line, k_region_membership, solve_general,
                      solve_nonempty_interior, solve_size_one, solve_two_cover)
from .geometry import (ConvexRegion, EnvelopeChain, Halfplane, HellyCertificate,
                       InteriorWitness, Line, Point, convex_hull,
                       extreme_point_query, generic_rotation,
                       halfplane_intersection, max_slack_point, orient,
                       upper_envelope)
from .kernel import (directional_width, is_epsilon_kernel,
                     optimal_kernel_bruteforce, solve_via_star_reduction)
from .lower import (CandidateSegment, LowerInstance, build_candidates,
                    candidate_for_halfplane, check_feasible_lower, prepare,
                    solve_lower_only)
from .oracle import (OracleBudget, brute_min_point_cover, brute_star_cover,
                     naive_runs)
from .rangetree import RangeOutsideTree, build, maximal_run
from .solution import CoverSolution
from .star import (Chord, NormalFan, StarPolygon, candidate_arc_star,
                   check_feasible_star, solve_polyline_cover, solve_star_cover,
                   verify_boundary_cover, verify_polyline_cover)

__version__ = "0.1.0"
