"""
Test the exhaustive solver, the Newton path and the EHLCP-degree
"""

import sys
import os
from fractions import Fraction

import pytest

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from exactmath import Mat
from harness.fixtures import (
    chain_instance, diagonal_hlcp_instance, identity_pair_tuple, infeasible_instance, non_r0_w_tuple,
    p_members_not_ssm_w_tuple, ray_instance, ssm_w_not_column_w_tuple, two_point_instance
)
from model import Branch, Instance, MatrixTuple, SolutionTuple, identity_tuple, verify_solution
from solver import (
    NewtonStatus, branch_system, degree, ehlcp_residual, solve_all, solve_newton
)
from utils.errors import DegreeUndefinedError, DimensionError, InvalidInstanceError


def test_residual_is_zero_exactly_on_solutions():
    inst = chain_instance()
    x = SolutionTuple(((0,), (1,), (Fraction(1, 2),)))
    assert ehlcp_residual(inst.c, inst.d, x) == (Fraction(-3, 2), 0, 0)
    with pytest.raises(DimensionError):
        ehlcp_residual(inst.c, inst.d, SolutionTuple(((0,), (1,))))


def test_solve_unique_solution():
    s = solve_all(diagonal_hlcp_instance())
    assert not s.is_empty
    assert s.distinct_points() == [SolutionTuple(((1, 0), (0, 1)))]
    assert all(verify_solution(s.instance, p.sample) for p in s.pieces)


def test_solve_two_points():
    s = solve_all(two_point_instance())
    points = s.distinct_points()
    assert sorted(p.stacked() for p in points) == [(0, 1), (1, 0)]
    assert s.contains(SolutionTuple(((1,), (0,))))
    assert not s.contains(SolutionTuple((("1/2",), ("1/2",))))


def test_solve_chain_and_empty():
    s = solve_all(chain_instance())
    assert s.distinct_points() == [SolutionTuple(((0,), (1,), (Fraction(1, 2),)))]
    assert solve_all(infeasible_instance()).is_empty


def test_solve_ray_contains_far_points():
    s = solve_all(ray_instance())
    assert s.contains(SolutionTuple(((0,), (1000,))))
    assert not s.contains(SolutionTuple(((0,), (-1,))))


def test_solution_set_dict():
    doc = solve_all(two_point_instance()).to_dict()
    assert doc["piece_count"] == 2
    assert sorted(doc["points"]) == [[[0], [1]], [[1], [0]]]


def test_newton_converges_on_diagonal_hlcp():
    result = solve_newton(diagonal_hlcp_instance())
    assert result.status is NewtonStatus.CONVERGED
    assert result.verified
    assert result.rational == SolutionTuple(((1, 0), (0, 1)))
    assert result.to_dict()["status"] == "converged"


def test_newton_reports_failure_as_status():
    result = solve_newton(infeasible_instance(), max_iter=5)
    assert not result.success
    assert result.status in (NewtonStatus.SINGULAR_JACOBIAN, NewtonStatus.LINE_SEARCH_STALL,
                             NewtonStatus.MAX_ITER)
    with pytest.raises(ValueError):
        solve_newton(diagonal_hlcp_instance(), tol=0)


def test_newton_on_column_w_instance():
    c = MatrixTuple.from_lists([[[2, 0], [0, 2]], [[1, 0], [0, 1]], [[1, 0], [0, 1]]])
    inst = Instance(c, ((1, 1),), (-3, 1))
    result = solve_newton(inst)
    assert result.success and result.verified
    assert solve_all(inst).contains(result.rational)


def test_branch_system_rows():
    c = identity_tuple(1, 2)
    a, rhs = branch_system(c, [(Fraction(2),)], Branch((2,)), (Fraction(1, 3),))
    assert a == Mat.from_rows([[1, -1, -1], [1, 0, 0], [0, -1, 0]])
    assert rhs == (Fraction(1, 3), 0, -2)


def test_degree_of_identity_tuples():
    assert degree(identity_pair_tuple()).value == 1
    assert degree(identity_tuple(2, 2), rng_seed=7).value == 1
    assert degree(ssm_w_not_column_w_tuple(), rng_seed=2).value != 0


def test_degree_is_seed_independent():
    c = ssm_w_not_column_w_tuple()
    values = {degree(c, rng_seed=seed).value for seed in range(4)}
    assert len(values) == 1


def test_degree_undefined_for_p_members_without_r0_w():
    # x1 = (3, 2), x2 = (1, 0) solves the homogeneous system with x0 = 0
    with pytest.raises(DegreeUndefinedError):
        degree(p_members_not_ssm_w_tuple())


def test_degree_undefined_without_r0_w():
    with pytest.raises(DegreeUndefinedError) as info:
        degree(non_r0_w_tuple())
    assert info.value.reason == "not_r0_w"


def test_degree_target_denominator_and_retry_limit():
    result = degree(identity_pair_tuple(), rng_seed=3, target_denominator=5)
    assert result.value == 1
    assert all((v * 5).denominator == 1 and abs(v) <= 1 for v in result.generic_point)
    with pytest.raises(ValueError):
        degree(identity_pair_tuple(), retry_limit=0)
    with pytest.raises(ValueError):
        degree(identity_pair_tuple(), target_denominator=0)


def test_degree_validates_bounds():
    c = identity_tuple(1, 2)
    with pytest.raises(InvalidInstanceError):
        degree(c, [(0,)])
    with pytest.raises(DimensionError):
        degree(c, [])
