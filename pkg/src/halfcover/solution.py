"""Result type shared by every coverage solver."""

from dataclasses import dataclass
from typing import Any, Tuple

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class CoverSolution:
    """Outcome of a minimum-coverage solve.

    chosen holds indices (halfplane indices for the geometric solvers, input
    positions for the 1D solvers); witness certifies infeasibility (a point /
    rank that no input element covers).
    """

    status: str
    chosen: Tuple[int, ...] = ()
    witness: Any = None

    @property
    def size(self) -> int:
        return len(self.chosen)

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


def optimal(chosen) -> CoverSolution:
    return CoverSolution(OPTIMAL, tuple(chosen))


def infeasible(witness) -> CoverSolution:
    return CoverSolution(INFEASIBLE, (), witness)
