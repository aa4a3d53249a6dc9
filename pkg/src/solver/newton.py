"""
Damped semismooth Newton solver
Floating-point path on G(x) = F(x) - (q, 0, ..., 0); converged iterates are
rationalized and re-verified exactly
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

import numpy as np
from loguru import logger

from model import Instance, SolutionTuple, to_jsonable, verify_solution
from .residual import residual_float


class NewtonStatus(Enum):
    CONVERGED = "converged"
    SINGULAR_JACOBIAN = "singular_jacobian"
    LINE_SEARCH_STALL = "line_search_stall"
    MAX_ITER = "max_iter"


@dataclass(frozen=True)
class NewtonResult:
    status: NewtonStatus
    iterations: int
    residual_norm: float
    x: Tuple[Tuple[float, ...], ...]
    rational: Optional[SolutionTuple] = None
    verified: bool = False

    @property
    def success(self) -> bool:
        return self.status is NewtonStatus.CONVERGED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "iterations": self.iterations,
            "residual_norm": self.residual_norm,
            "x": [list(block) for block in self.x],
            "rational": to_jsonable(self.rational),
            "verified": self.verified,
        }


def _jacobian_element(blocks: np.ndarray, c_float: np.ndarray, d_float: np.ndarray) -> np.ndarray:
    """
    Element of the generalized Jacobian; ties take the first argument of the min
    """
    k1, n = blocks.shape
    size = k1 * n
    jac = np.zeros((size, size))
    jac[:n, :n] = c_float[0]
    for j in range(1, k1):
        jac[:n, j * n:(j + 1) * n] = -c_float[j]

    for j in range(1, k1):
        first = blocks[0] if j == 1 else d_float[j - 2] - blocks[j - 1]
        second = blocks[j]
        for i in range(n):
            row = j * n + i
            if first[i] <= second[i]:
                if j == 1:
                    jac[row, i] = 1.0
                else:
                    jac[row, (j - 1) * n + i] = -1.0
            else:
                jac[row, j * n + i] = 1.0
    return jac


def _rationalize(blocks: np.ndarray, max_denominator: int) -> SolutionTuple:
    return SolutionTuple(tuple(
        tuple(Fraction(float(v)).limit_denominator(max_denominator) for v in block) for block in blocks
    ))


def solve_newton(inst: Instance, start: Optional[SolutionTuple] = None, tol: Optional[float] = None,
                 max_iter: Optional[int] = None, config: Optional[Dict[str, Any]] = None) -> NewtonResult:
    """
    Solve an instance by damped semismooth Newton with Armijo backtracking on ½‖G‖²

    Args:
        inst: EHLCP instance
        start: Initial point (default zero)
        tol: Stop when ‖G‖∞ <= tol
        max_iter: Iteration limit
        config: SOLVER_CONFIG-style overrides

    Returns:
        NewtonResult; failure is a status, never an exception
    """
    from config.settings import SOLVER_CONFIG
    settings = {**SOLVER_CONFIG, **(config or {})}
    tol = settings["newton_tol"] if tol is None else tol
    max_iter = settings["newton_max_iter"] if max_iter is None else max_iter
    if tol <= 0:
        raise ValueError(f"Newton tolerance must be positive, got {tol}")

    n, k = inst.n, inst.k
    c_float = np.array([[[float(m[i, j]) for j in range(n)] for i in range(n)] for m in inst.c], dtype=float)
    d_float = np.array([[float(v) for v in dj] for dj in inst.d], dtype=float).reshape(k - 1, n)
    q_float = np.array([float(v) for v in inst.q], dtype=float)
    start = start or SolutionTuple.zero(n, k)
    z = np.array([[float(v) for v in x] for x in start.xs], dtype=float).reshape(-1)

    def G(vec: np.ndarray) -> np.ndarray:
        return residual_float(vec.reshape(k + 1, n), c_float, d_float, q_float)

    def _result(status: NewtonStatus, iteration: int, g: np.ndarray) -> NewtonResult:
        blocks = z.reshape(k + 1, n)
        x = tuple(tuple(float(v) for v in block) for block in blocks)
        norm = float(np.max(np.abs(g)))
        if status is not NewtonStatus.CONVERGED:
            logger.debug(f"Newton stopped: {status.value} after {iteration} iterations (‖G‖∞={norm:.3e})")
            return NewtonResult(status, iteration, norm, x)
        rational = _rationalize(blocks, settings["rationalize_denominator"])
        return NewtonResult(status, iteration, norm, x, rational, verify_solution(inst, rational))

    g = G(z)
    for iteration in range(max_iter):
        if np.max(np.abs(g)) <= tol:
            return _result(NewtonStatus.CONVERGED, iteration, g)

        jac = _jacobian_element(z.reshape(k + 1, n), c_float, d_float)
        try:
            dz = np.linalg.solve(jac, -g)
        except np.linalg.LinAlgError:
            return _result(NewtonStatus.SINGULAR_JACOBIAN, iteration, g)
        if not np.all(np.isfinite(dz)):
            return _result(NewtonStatus.SINGULAR_JACOBIAN, iteration, g)

        merit = 0.5 * float(g @ g)
        step = 1.0
        while step >= settings["min_step"]:
            trial = z + step * dz
            g_trial = G(trial)
            if 0.5 * float(g_trial @ g_trial) <= (1.0 - 2.0 * settings["armijo_sigma"] * step) * merit:
                break
            step *= 0.5
        else:
            return _result(NewtonStatus.LINE_SEARCH_STALL, iteration, g)
        z, g = trial, g_trial

    if np.max(np.abs(g)) <= tol:
        return _result(NewtonStatus.CONVERGED, max_iter, g)
    return _result(NewtonStatus.MAX_ITER, max_iter, g)
