# Exact rational arithmetic, linear algebra and LP engine

from .rational import (
    Scalar, Vec, Mat, ZERO, ONE, to_scalar, scalar_to_json, sign, vec, zeros, ones,
    add, sub, scale, dot, hadamard, is_zero, is_nonneg, is_positive, vec_to_json, sum_matrices
)
from .linalg import det, solve_linear, inverse, rank, is_consistent, principal_minor
from .simplex import (
    LPStatus, LinearProgram, LPResult, lp_max, feasible_point, max_margin, unit_row
)

__all__ = [
    'Scalar', 'Vec', 'Mat', 'ZERO', 'ONE', 'to_scalar', 'scalar_to_json', 'sign', 'vec',
    'zeros', 'ones', 'add', 'sub', 'scale', 'dot', 'hadamard', 'is_zero', 'is_nonneg',
    'is_positive', 'vec_to_json', 'sum_matrices',
    'det', 'solve_linear', 'inverse', 'rank', 'is_consistent', 'principal_minor',
    'LPStatus', 'LinearProgram', 'LPResult', 'lp_max', 'feasible_point', 'max_margin', 'unit_row'
]
