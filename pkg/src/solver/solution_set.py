"""
Exhaustive solver
Enumerates every branch and decides each polyhedron by exact LP
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from exactmath import lp_max
from model import (
    Instance, Piece, SolutionTuple, branch_constraints, branches, instance_to_dict,
    to_jsonable, verify_solution
)
from utils import ordered_map
from utils.errors import InvariantViolation


@dataclass(frozen=True)
class SolutionSet:
    """Union of polyhedral pieces; pieces may overlap on shared boundaries"""
    instance: Instance
    pieces: Tuple[Piece, ...]

    def __len__(self) -> int:
        return len(self.pieces)

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    def contains(self, point: SolutionTuple) -> bool:
        return any(piece.contains(point) for piece in self.pieces)

    def distinct_points(self) -> List[SolutionTuple]:
        """Piece samples with boundary duplicates removed, in piece order"""
        seen = set()
        out = []
        for piece in self.pieces:
            key = piece.sample.stacked()
            if key not in seen:
                seen.add(key)
                out.append(piece.sample)
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            "instance": instance_to_dict(self.instance),
            "pieces": [p.to_dict() for p in self.pieces],
            "piece_count": len(self.pieces),
            "points": to_jsonable(self.distinct_points()),
        }


def _solve_branch(inst: Instance, branch) -> Optional[Piece]:
    constraints = branch_constraints(inst, branch)
    result = lp_max(constraints.to_program())
    if not result.is_feasible:
        return None
    sample = SolutionTuple.from_stacked(result.witness, inst.n)
    if not verify_solution(inst, sample):
        raise InvariantViolation(f"Sample of branch {branch.levels} does not verify: {sample!r}")
    return Piece(branch, constraints, sample)


def solve_all(inst: Instance) -> SolutionSet:
    """
    Full solution set of an instance

    Args:
        inst: EHLCP instance

    Returns:
        SolutionSet with one piece per feasible branch (empty iff no solution)
    """
    all_branches = branches(inst.n, inst.k)
    pieces = [p for p in ordered_map(lambda b: _solve_branch(inst, b), all_branches) if p is not None]
    logger.debug(f"solve_all: {len(pieces)} of {len(all_branches)} branches feasible")
    return SolutionSet(inst, tuple(pieces))
