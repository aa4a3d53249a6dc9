"""
Branch structure
Each coordinate picks one active level of the complementarity chain; a branch
turns the instance into a polyhedron over the stacked vector (x0, ..., xk)
"""

import itertools
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from exactmath import (
    Mat, Vec, ZERO, ONE, LinearProgram, dot, inverse, unit_row, vec, vec_to_json, scalar_to_json
)
from utils.errors import DimensionError, InvalidInstanceError
from .instance import Instance, SolutionTuple

Constraint = Tuple[Vec, Any]


@dataclass(frozen=True)
class Branch:
    """Active chain level in {0, ..., k} for every coordinate"""
    levels: Tuple[int, ...]

    def __post_init__(self):
        levels = tuple(int(l) for l in self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            raise DimensionError("A branch needs at least one coordinate")
        if any(l < 0 for l in levels):
            raise InvalidInstanceError(f"Branch levels must be nonnegative, got {levels}")

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self) -> Iterator[int]:
        return iter(self.levels)

    def __getitem__(self, i: int) -> int:
        return self.levels[i]

    def to_list(self) -> List[int]:
        return list(self.levels)


def branches(n: int, k: int) -> List[Branch]:
    """All (k+1)^n branches in lexicographic order"""
    return [Branch(levels) for levels in itertools.product(range(k + 1), repeat=n)]


@dataclass(frozen=True)
class PieceConstraints:
    """Linear system over the stacked vector: rows with row·x = rhs and row·x <= rhs"""
    num_vars: int
    equalities: Tuple[Constraint, ...] = ()
    inequalities: Tuple[Constraint, ...] = ()

    def contains(self, point: Sequence) -> bool:
        point = vec(point)
        if len(point) != self.num_vars:
            raise DimensionError(f"Point has length {len(point)}, expected {self.num_vars}")
        return (all(dot(row, point) == rhs for row, rhs in self.equalities)
                and all(dot(row, point) <= rhs for row, rhs in self.inequalities))

    def combine(self, other: "PieceConstraints") -> "PieceConstraints":
        if other.num_vars != self.num_vars:
            raise DimensionError(f"Cannot combine systems over {self.num_vars} and {other.num_vars} variables")
        return PieceConstraints(self.num_vars, self.equalities + other.equalities,
                                self.inequalities + other.inequalities)

    def homogeneous(self) -> "PieceConstraints":
        """Recession cone system {E v = 0, G v <= 0}"""
        return PieceConstraints(
            self.num_vars,
            tuple((row, ZERO) for row, _ in self.equalities),
            tuple((row, ZERO) for row, _ in self.inequalities),
        )

    def to_program(self, objective: Optional[Sequence] = None,
                   extra_inequalities: Sequence[Constraint] = ()) -> LinearProgram:
        objective = vec(objective) if objective is not None else (ZERO,) * self.num_vars
        return LinearProgram(self.num_vars, objective, self.equalities,
                             self.inequalities + tuple(extra_inequalities))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "equalities": [{"row": vec_to_json(r), "rhs": scalar_to_json(b)} for r, b in self.equalities],
            "inequalities": [{"row": vec_to_json(r), "rhs": scalar_to_json(b)} for r, b in self.inequalities],
        }


@dataclass(frozen=True)
class Piece:
    """Polyhedral cell of the solution set with a verified sample point"""
    branch: Branch
    constraints: PieceConstraints
    sample: SolutionTuple

    @property
    def equalities(self) -> Tuple[Constraint, ...]:
        return self.constraints.equalities

    @property
    def inequalities(self) -> Tuple[Constraint, ...]:
        return self.constraints.inequalities

    def contains(self, point: SolutionTuple) -> bool:
        return self.constraints.contains(point.stacked())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "branch": self.branch.to_list(),
            "constraints": self.constraints.to_dict(),
            "sample": [vec_to_json(x) for x in self.sample.xs],
        }


def stacked_index(n: int, block: int, coord: int) -> int:
    return block * n + coord


def branch_constraints(inst: Instance, b: Branch) -> PieceConstraints:
    """
    Constraint system of the instance restricted to one branch

    Per coordinate i with level l:
        l = 0: x0_i >= 0 and xj_i = 0 for j >= 1
        l >= 1: x0_i = 0, xj_i = (d_j)_i for j < l, 0 <= x_l,i (<= (d_l)_i when l < k),
                xj_i = 0 for j > l
    plus the n rows of C0 x0 - sum Ci xi = q.
    """
    n, k = inst.n, inst.k
    if len(b) != n:
        raise DimensionError(f"Branch has {len(b)} levels, instance has n={n}")
    if any(l > k for l in b):
        raise InvalidInstanceError(f"Branch levels must lie in 0..{k}, got {b.levels}")

    num_vars = (k + 1) * n
    eqs: List[Constraint] = []
    ineqs: List[Constraint] = []

    def unit(block: int, coord: int, coeff=ONE) -> Vec:
        return unit_row(num_vars, stacked_index(n, block, coord), coeff)

    for i, level in enumerate(b):
        if level == 0:
            ineqs.append((unit(0, i, -ONE), ZERO))
            eqs.extend((unit(j, i), ZERO) for j in range(1, k + 1))
            continue
        eqs.append((unit(0, i), ZERO))
        eqs.extend((unit(j, i), inst.d[j - 1][i]) for j in range(1, level))
        ineqs.append((unit(level, i, -ONE), ZERO))
        if level < k:
            ineqs.append((unit(level, i), inst.d[level - 1][i]))
        eqs.extend((unit(j, i), ZERO) for j in range(level + 1, k + 1))

    for r in range(n):
        row = list(inst.c.c0.row(r))
        for ci in inst.c.trailing:
            row.extend(-v for v in ci.row(r))
        eqs.append((tuple(row), inst.q[r]))

    return PieceConstraints(num_vars, tuple(eqs), tuple(ineqs))


def as_lcp(inst: Instance) -> Tuple[Mat, Vec]:
    """
    Standard LCP (M, r) equivalent to a k = 1 instance with invertible C0

    w = r + M z, w ∧ z = 0 with M = C0^-1 C1 and r = C0^-1 q.
    """
    if inst.k != 1:
        raise InvalidInstanceError(f"Only k = 1 instances reduce to a standard LCP, got k={inst.k}")
    c0_inv = inverse(inst.c.c0)
    return c0_inv @ inst.c[1], c0_inv @ inst.q


def lcp_solution_to_tuple(inst: Instance, z: Sequence) -> SolutionTuple:
    m, r = as_lcp(inst)
    z = vec(z)
    w = tuple(a + b for a, b in zip(m @ z, r))
    return SolutionTuple((w, z))
