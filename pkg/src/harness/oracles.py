"""
Grid Oracles
Brute-force membership and connectivity of the solution set on a half-integer
grid, independent of the branch enumeration
"""

import itertools
from collections import deque
from fractions import Fraction
from typing import List, Optional, Sequence, Set

from loguru import logger

from exactmath import ZERO, add, inverse, scale, sub
from model import Instance, SolutionTuple, verify_solution
from solver import SolutionSet

GRID_STEP = Fraction(1, 2)


def _axis(upper: Fraction, step: Fraction) -> List[Fraction]:
    count = int(upper / step)
    return [step * t for t in range(count + 1)]


def grid_points(inst: Instance, bound: Optional[int] = None, step: Fraction = GRID_STEP) -> List[SolutionTuple]:
    """
    Points with x1..xk on the grid and x0 from the equation

    x_j ranges over [0, d_j] for j < k and x_k over [0, bound]; C0 must be
    invertible.
    """
    if bound is None:
        from config.settings import HARNESS_CONFIG
        bound = HARNESS_CONFIG["grid_bound"]
    n, k = inst.n, inst.k
    c0_inv = inverse(inst.c.c0)
    axes = []
    for j in range(1, k + 1):
        for i in range(n):
            upper = inst.d[j - 1][i] if j < k else Fraction(bound)
            axes.append(_axis(upper, step))

    points = []
    for flat in itertools.product(*axes):
        blocks = [tuple(flat[(j - 1) * n:j * n]) for j in range(1, k + 1)]
        rhs = inst.q
        for ci, xi in zip(inst.c.trailing, blocks):
            rhs = add(rhs, ci @ xi)
        points.append(SolutionTuple((c0_inv @ rhs,) + tuple(blocks)))
    return points


def grid_membership_disagreements(inst: Instance, s: SolutionSet,
                                  points: Optional[Sequence[SolutionTuple]] = None) -> List[SolutionTuple]:
    """Grid points where exact verification and piece membership disagree"""
    points = grid_points(inst) if points is None else points
    return [p for p in points if verify_solution(inst, p) != s.contains(p)]


def _chain_arguments(inst: Instance, x: SolutionTuple):
    """(first, second) argument pairs of every min in the chain"""
    pairs = [(x[0], x[1])]
    for j in range(1, inst.k):
        pairs.append((sub(inst.d[j - 1], x[j]), x[j + 1]))
    return pairs


def segment_in_solution_set(inst: Instance, a: SolutionTuple, b: SolutionTuple) -> bool:
    """
    Exact test that the whole segment [a, b] solves the instance

    Along the segment every min argument is affine in t, so the residual is
    affine between the breakpoints where two arguments cross; checking the
    breakpoints decides the segment.
    """
    if not (verify_solution(inst, a) and verify_solution(inst, b)):
        return False
    diff = SolutionTuple(tuple(sub(xb, xa) for xa, xb in zip(a.xs, b.xs)))
    breakpoints: Set[Fraction] = {ZERO, Fraction(1)}
    for (first_a, second_a), (first_b, second_b) in zip(_chain_arguments(inst, a), _chain_arguments(inst, b)):
        for fa, sa, fb, sb in zip(first_a, second_a, first_b, second_b):
            gap_a, gap_b = fa - sa, fb - sb
            if gap_a != gap_b:
                t = gap_a / (gap_a - gap_b)
                if 0 < t < 1:
                    breakpoints.add(t)
    for t in sorted(breakpoints):
        point = SolutionTuple(tuple(add(xa, scale(t, dx)) for xa, dx in zip(a.xs, diff.xs)))
        if not verify_solution(inst, point):
            return False
    return True


def grid_connectivity_oracle(inst: Instance, s: SolutionSet, max_points: int = 200,
                             points: Optional[Sequence[SolutionTuple]] = None) -> Optional[bool]:
    """
    Connectivity of the verified grid points, joined when their segment lies in the set

    Returns:
        True/False, or None when more than max_points verify
    """
    points = grid_points(inst) if points is None else points
    nodes = []
    seen = set()
    for p in list(points) + s.distinct_points():
        key = p.stacked()
        if key not in seen and verify_solution(inst, p):
            seen.add(key)
            nodes.append(p)
    if not nodes:
        return True
    if len(nodes) > max_points:
        logger.debug(f"Grid oracle skipped: {len(nodes)} solution points")
        return None

    reached = {0}
    queue = deque([0])
    while queue:
        current = queue.popleft()
        for other in range(len(nodes)):
            if other not in reached and segment_in_solution_set(inst, nodes[current], nodes[other]):
                reached.add(other)
                queue.append(other)
    return len(reached) == len(nodes)
