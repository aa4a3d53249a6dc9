"""
Complementarity checks
Exact verification of candidate EHLCP solutions
"""

from typing import Sequence

from loguru import logger

from exactmath import Vec, dot, hadamard, is_nonneg, is_zero, sub, vec
from utils.errors import ContractError, DimensionError, InvariantViolation
from .instance import Instance, SolutionTuple


def check_complementarity(x: Sequence, y: Sequence) -> bool:
    """
    True iff min(x, y) = 0 componentwise

    The min form, the Hadamard form (x, y >= 0 and x*y = 0) and the inner
    product form (x, y >= 0 and <x, y> = 0) are all evaluated and must agree.
    """
    x, y = vec(x), vec(y)
    if len(x) != len(y):
        raise DimensionError(f"Vector lengths differ: {len(x)} vs {len(y)}")

    min_form = all(min(a, b) == 0 for a, b in zip(x, y))
    signs_ok = is_nonneg(x) and is_nonneg(y)
    hadamard_form = signs_ok and is_zero(hadamard(x, y))
    inner_form = signs_ok and dot(x, y) == 0

    if not (min_form == hadamard_form == inner_form):
        raise InvariantViolation(
            f"Complementarity forms disagree on x={x}, y={y}: "
            f"min={min_form}, hadamard={hadamard_form}, inner={inner_form}"
        )
    return min_form


def _check_dimensions(inst: Instance, x: SolutionTuple) -> None:
    if x.n != inst.n or x.k != inst.k:
        raise DimensionError(
            f"Solution has k={x.k}, n={x.n}; instance has k={inst.k}, n={inst.n}"
        )


def equation_residual(inst: Instance, x: SolutionTuple) -> Vec:
    """C0 x0 - sum Ci xi - q"""
    _check_dimensions(inst, x)
    lhs = inst.c.c0 @ x[0]
    for ci, xi in zip(inst.c.trailing, x.xs[1:]):
        lhs = sub(lhs, ci @ xi)
    return sub(lhs, inst.q)


def verify_solution(inst: Instance, x: SolutionTuple) -> bool:
    """
    Exact check of C0 x0 = q + sum Ci xi and the complementarity chain

    Args:
        inst: EHLCP instance
        x: Candidate solution

    Returns:
        True iff x solves the instance
    """
    if not is_zero(equation_residual(inst, x)):
        return False
    if not check_complementarity(x[0], x[1]):
        return False
    for j in range(1, inst.k):
        if not check_complementarity(sub(inst.d[j - 1], x[j]), x[j + 1]):
            return False
    return True


def check_chain_lemma(inst: Instance, x: SolutionTuple) -> bool:
    """
    True iff x0 and xj are complementary for every j >= 1

    Raises:
        ContractError: x does not solve inst
    """
    if not verify_solution(inst, x):
        raise ContractError(f"check_chain_lemma requires a solution, got {x!r}")
    ok = all(check_complementarity(x[0], x[j]) for j in range(1, inst.k + 1))
    if not ok:
        logger.warning(f"Extended chain fails at solution {x!r}")
    return ok
