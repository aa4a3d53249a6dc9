"""
EHLCP residual map
F(x) = (C0 x0 - sum Ci xi, x0 ∧ x1, (d1 - x1) ∧ x2, ..., (d_{k-1} - x_{k-1}) ∧ xk)
"""

from typing import Sequence

import numpy as np

from exactmath import Vec, sub, vec
from model import MatrixTuple, SolutionTuple
from utils.errors import DimensionError


def _check(c: MatrixTuple, d: Sequence, n: int, k: int) -> None:
    if n != c.n or k != c.k:
        raise DimensionError(f"Point has k={k}, n={n}; tuple has k={c.k}, n={c.n}")
    if len(d) != c.k - 1 or any(len(dj) != c.n for dj in d):
        raise DimensionError(f"Expected {c.k - 1} bound vectors of length {c.n}")


def ehlcp_residual(c: MatrixTuple, d: Sequence, x: SolutionTuple) -> Vec:
    """Exact stacked value of F at x; F(x) = (q, 0, ..., 0) iff x solves (C, d, q)"""
    d = [vec(dj) for dj in d]
    _check(c, d, x.n, x.k)

    head = c.c0 @ x[0]
    for ci, xi in zip(c.trailing, x.xs[1:]):
        head = sub(head, ci @ xi)
    out = list(head)
    out.extend(min(a, b) for a, b in zip(x[0], x[1]))
    for j in range(1, c.k):
        out.extend(min(dj - a, b) for dj, a, b in zip(d[j - 1], x[j], x[j + 1]))
    return tuple(out)


def residual_float(blocks: np.ndarray, c_float: np.ndarray, d_float: np.ndarray, q_float: np.ndarray) -> np.ndarray:
    """
    Floating-point G(z) = F(z) - (q, 0, ..., 0)

    Args:
        blocks: (k+1, n) array of x0..xk
        c_float: (k+1, n, n) array of C0..Ck
        d_float: (k-1, n) array of bounds
        q_float: (n,) right-hand side
    """
    head = c_float[0] @ blocks[0] - np.einsum("jab,jb->a", c_float[1:], blocks[1:]) - q_float
    tails = [np.minimum(blocks[0], blocks[1])]
    for j in range(1, blocks.shape[0] - 1):
        tails.append(np.minimum(d_float[j - 1] - blocks[j], blocks[j + 1]))
    return np.concatenate([head] + tails)
