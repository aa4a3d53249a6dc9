"""
Exact Linear Algebra
Determinants (fraction-free Bareiss elimination), linear solves, inverses and rank
"""

from fractions import Fraction
from typing import List, Sequence

from utils.errors import DimensionError, SingularMatrixError
from .rational import Mat, Vec, ZERO, ONE, to_scalar


def det(m: Mat) -> Fraction:
    """
    Exact determinant of a square matrix

    Args:
        m: Square matrix

    Returns:
        det(m) as a Fraction
    """
    if not m.is_square:
        raise DimensionError(f"Determinant needs a square matrix, got {m.n_rows}x{m.n_cols}")

    n = m.n_rows
    a = [list(r) for r in m.rows()]
    sgn = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sgn = -sgn
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) / prev
        prev = pivot
    return sgn * a[n - 1][n - 1]


def _row_reduce(rows: List[List[Fraction]], n_cols: int) -> List[int]:
    """In-place reduced row echelon form on the first n_cols columns; returns pivot columns"""
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_linear(a: Mat, b: Sequence) -> Vec:
    """
    Solve a·x = b exactly

    Raises:
        DimensionError: a not square or b of the wrong length
        SingularMatrixError: no unique solution
    """
    if not a.is_square:
        raise DimensionError(f"solve_linear needs a square matrix, got {a.n_rows}x{a.n_cols}")
    b = [to_scalar(v) for v in b]
    if len(b) != a.n_rows:
        raise DimensionError(f"Right-hand side has length {len(b)}, expected {a.n_rows}")

    n = a.n_rows
    rows = [list(r) + [bi] for r, bi in zip(a.rows(), b)]
    pivots = _row_reduce(rows, n)
    if len(pivots) < n:
        raise SingularMatrixError("Matrix is singular")
    return tuple(rows[i][n] for i in range(n))


def inverse(m: Mat) -> Mat:
    """Exact inverse; SingularMatrixError when m is singular"""
    if not m.is_square:
        raise DimensionError(f"inverse needs a square matrix, got {m.n_rows}x{m.n_cols}")
    n = m.n_rows
    rows = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m.rows())]
    pivots = _row_reduce(rows, n)
    if len(pivots) < n:
        raise SingularMatrixError("Matrix is singular")
    return Mat.from_rows([r[n:] for r in rows])


def rank(m: Mat) -> int:
    rows = [list(r) for r in m.rows()]
    return len(_row_reduce(rows, m.n_cols))


def is_consistent(a: Mat, b: Sequence) -> bool:
    """True iff a·x = b has at least one solution"""
    b = [to_scalar(v) for v in b]
    if len(b) != a.n_rows:
        raise DimensionError(f"Right-hand side has length {len(b)}, expected {a.n_rows}")
    rows = [list(r) + [bi] for r, bi in zip(a.rows(), b)]
    pivots = _row_reduce(rows, a.n_cols)
    return all(r[a.n_cols] == 0 for r in rows[len(pivots):])


def principal_minor(m: Mat, indices: Sequence[int]) -> Fraction:
    if not indices:
        return ONE
    return det(m.submatrix(indices, indices))
