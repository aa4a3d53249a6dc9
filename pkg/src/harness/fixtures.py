"""
Fixtures
Hand-picked tuples and instances with pinned verdicts
"""

from fractions import Fraction
from typing import Callable, Dict, Union

from model import Instance, MatrixTuple


def p_members_not_ssm_w_tuple() -> MatrixTuple:
    """(I, [[1,-2],[0,1]], [[1,0],[-2,1]]): both C0^-1 Ci are P, yet SSM-W fails"""
    return MatrixTuple.from_lists([
        [[1, 0], [0, 1]],
        [[1, -2], [0, 1]],
        [[1, 0], [-2, 1]],
    ])


def ssm_w_not_column_w_tuple() -> MatrixTuple:
    """(I, ones, ones): SSM-W holds while det(C1) = 0 breaks column W"""
    return MatrixTuple.from_lists([
        [[1, 0], [0, 1]],
        [[1, 1], [1, 1]],
        [[1, 1], [1, 1]],
    ])


def identity_pair_tuple() -> MatrixTuple:
    return MatrixTuple.from_lists([[[1, 0], [0, 1]], [[1, 0], [0, 1]]])


def non_r0_w_tuple() -> MatrixTuple:
    return MatrixTuple.from_lists([[[1]], [[0]]])


def diagonal_hlcp_instance() -> Instance:
    """(I, I), q = (1, -1): unique solution ((1, 0), (0, 1))"""
    return Instance(identity_pair_tuple(), (), (1, -1))


def two_point_instance() -> Instance:
    """([1], [-1]), q = 1: solutions (1, 0) and (0, 1), disconnected"""
    return Instance(MatrixTuple.from_lists([[[1]], [[-1]]]), (), (1,))


def chain_instance() -> Instance:
    """([1], [1], [1]), d = (1), q = -3/2: unique solution (0, 1, 1/2)"""
    return Instance(MatrixTuple.from_lists([[[1]], [[1]], [[1]]]), ((1,),), (Fraction(-3, 2),))


def ray_instance() -> Instance:
    """([1], [0]), q = 0: the ray x0 = 0, x1 >= 0"""
    return Instance(non_r0_w_tuple(), (), (0,))


def infeasible_instance() -> Instance:
    return Instance(non_r0_w_tuple(), (), (-1,))


FIXTURES: Dict[str, Callable[[], Union[MatrixTuple, Instance]]] = {
    "p_members_not_ssm_w": p_members_not_ssm_w_tuple,
    "ssm_w_not_column_w": ssm_w_not_column_w_tuple,
    "identity_pair": identity_pair_tuple,
    "non_r0_w": non_r0_w_tuple,
    "diagonal_hlcp": diagonal_hlcp_instance,
    "two_point": two_point_instance,
    "chain": chain_instance,
    "ray": ray_instance,
    "infeasible": infeasible_instance,
}
