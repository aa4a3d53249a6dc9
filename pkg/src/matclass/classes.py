"""
Matrix Classes
Exact predicates for Z, P, M, strictly semimonotone (SSM) and R0 matrices
"""

import itertools
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from exactmath import (
    Mat, Vec, ZERO, ONE, feasible_point, inverse, max_margin,
    principal_minor, unit_row, vec
)
from model import Verdict
from utils import ordered_map
from utils.errors import DimensionError, InvariantViolation, SingularMatrixError


def supports(n: int, include_empty: bool = False) -> List[Tuple[int, ...]]:
    """Subsets of range(n) ordered by size, then lexicographically"""
    start = 0 if include_empty else 1
    return [alpha for size in range(start, n + 1) for alpha in itertools.combinations(range(n), size)]


def _require_square(m: Mat) -> None:
    if not m.is_square:
        raise DimensionError(f"Matrix class predicates need a square matrix, got {m.n_rows}x{m.n_cols}")


def _products(m: Mat, x: Sequence) -> Vec:
    mx = m @ x
    return tuple(a * b for a, b in zip(x, mx))


def is_Z(m: Mat) -> bool:
    """True iff every off-diagonal entry is non-positive"""
    _require_square(m)
    return all(m[i, j] <= 0 for i in range(m.n_rows) for j in range(m.n_cols) if i != j)


# P matrices

def is_p_witness(m: Mat, x: Sequence) -> bool:
    """x is nonzero and x * Mx <= 0 componentwise"""
    x = vec(x)
    return any(v != 0 for v in x) and all(p <= 0 for p in _products(m, x))


def p_witness_search(m: Mat) -> Optional[Vec]:
    """
    Search sign patterns for a nonzero x with x * Mx <= 0

    For signs s (s_0 = +1, since x and -x are both witnesses) the LP
    s*x >= 0, s*(Mx) <= 0, sum s*x = 1 is feasible iff a witness with that
    sign pattern exists.
    """
    _require_square(m)
    n = m.n_rows
    patterns = [(1,) + rest for rest in itertools.product((1, -1), repeat=n - 1)]

    def _solve(signs: Tuple[int, ...]) -> Optional[Vec]:
        ineqs = []
        for i, s in enumerate(signs):
            ineqs.append((unit_row(n, i, -s), ZERO))
            ineqs.append((tuple(s * v for v in m.row(i)), ZERO))
        normalization = (tuple(Fraction(s) for s in signs), ONE)
        return feasible_point(n, [normalization], ineqs)

    for witness in ordered_map(_solve, patterns):
        if witness is not None:
            return witness
    return None


def is_P(m: Mat) -> Verdict:
    """
    P matrix test: every principal minor is positive

    Returns:
        Yes, or No with the failing minor and a witness x != 0, x * Mx <= 0
    """
    _require_square(m)
    for alpha in supports(m.n_rows):
        minor = principal_minor(m, alpha)
        if minor <= 0:
            witness = p_witness_search(m)
            if witness is None or not is_p_witness(m, witness):
                raise InvariantViolation(f"Principal minor {alpha} is {minor} but no P witness exists")
            logger.debug(f"is_P: minor {alpha} = {minor}")
            return Verdict.no("P", minor_indices=list(alpha), minor=minor, witness=witness)
    return Verdict.yes("P")


def is_P_by_sign_patterns(m: Mat) -> Verdict:
    """P test through the witness search alone (cross-check of is_P)"""
    witness = p_witness_search(m)
    if witness is None:
        return Verdict.yes("P")
    return Verdict.no("P", witness=witness)


# Strictly semimonotone matrices

def is_ssm_witness(m: Mat, x: Sequence) -> bool:
    """x >= 0, x != 0 and x * Mx <= 0 componentwise"""
    x = vec(x)
    return all(v >= 0 for v in x) and is_p_witness(m, x)


def _ssm_support_lp(m: Mat, alpha: Tuple[int, ...]) -> Optional[Vec]:
    """Maximize t over {x_alpha >= t, x >= 0, sum x_alpha = 1, (Mx)_alpha <= 0, x = 0 off alpha}"""
    n = m.n_rows
    num_vars = n + 1
    t = n
    eqs = [(unit_row(num_vars, i), ZERO) for i in range(n) if i not in alpha]
    eqs.append((tuple(ONE if i in alpha else ZERO for i in range(n)) + (ZERO,), ONE))
    ineqs = []
    for i in alpha:
        row = [ZERO] * num_vars
        row[i], row[t] = -ONE, ONE
        ineqs.append((tuple(row), ZERO))
        ineqs.append((unit_row(num_vars, i, -ONE), ZERO))
        ineqs.append((tuple(m.row(i)) + (ZERO,), ZERO))

    result = max_margin(num_vars, eqs, ineqs, t)
    if result is None:
        return None
    margin, point = result
    if margin is not None and margin <= 0:
        return None
    return point[:n]


def is_SSM(m: Mat) -> Verdict:
    """
    Strict semimonotonicity: no x >= 0, x != 0 with x * Mx <= 0

    Decided per support alpha by a margin LP; the first support with a
    positive margin gives the witness.
    """
    _require_square(m)
    alphas = supports(m.n_rows)
    results = ordered_map(lambda alpha: _ssm_support_lp(m, alpha), alphas)
    for alpha, witness in zip(alphas, results):
        if witness is not None:
            if not is_ssm_witness(m, witness):
                raise InvariantViolation(f"SSM witness {witness} on support {alpha} does not re-verify")
            return Verdict.no("SSM", support=list(alpha), witness=witness)
    return Verdict.yes("SSM")


# M matrices

def is_M_matrix(m: Mat) -> Verdict:
    """Z matrix, invertible, with an entrywise nonnegative inverse"""
    _require_square(m)
    if not is_Z(m):
        return Verdict.no("M", reason="not_z")
    try:
        m_inv = inverse(m)
    except SingularMatrixError:
        return Verdict.no("M", reason="singular")
    for i in range(m.n_rows):
        for j in range(m.n_cols):
            if m_inv[i, j] < 0:
                return Verdict.no("M", reason="negative_inverse_entry", entry=[i, j], inverse=m_inv)
    return Verdict.yes("M", inverse=m_inv)


# R0 matrices

def is_r0_witness(m: Mat, z: Sequence) -> bool:
    """z >= 0, z != 0, Mz >= 0 and z complementary to Mz"""
    z = vec(z)
    mz = m @ z
    return (all(v >= 0 for v in z) and any(v != 0 for v in z)
            and all(v >= 0 for v in mz) and all(a * b == 0 for a, b in zip(z, mz)))


def _r0_support_lp(m: Mat, alpha: Tuple[int, ...]) -> Optional[Vec]:
    n = m.n_rows
    eqs = [(unit_row(n, i), ZERO) for i in range(n) if i not in alpha]
    eqs.extend((m.row(i), ZERO) for i in alpha)
    eqs.append((tuple(ONE if i in alpha else ZERO for i in range(n)), ONE))
    ineqs = [(unit_row(n, i, -ONE), ZERO) for i in alpha]
    ineqs.extend((tuple(-v for v in m.row(i)), ZERO) for i in range(n) if i not in alpha)
    return feasible_point(n, eqs, ineqs)


def is_R0(m: Mat) -> Verdict:
    """LCP(M, 0) has only the zero solution"""
    _require_square(m)
    alphas = supports(m.n_rows)
    results = ordered_map(lambda alpha: _r0_support_lp(m, alpha), alphas)
    for alpha, witness in zip(alphas, results):
        if witness is not None:
            return Verdict.no("R0", support=list(alpha), witness=witness)
    return Verdict.yes("R0")
