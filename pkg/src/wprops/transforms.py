"""
Tuple transformations
Normalization by C0, diagonal collapse to a pair, simultaneous permutation,
and collapse tuples built from failing certificates
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from exactmath import Mat, ZERO, ONE, det, inverse, sign
from model import MatrixTuple, SolutionTuple, Verdict
from utils.errors import ContractError, DimensionError, InvalidDiagonalError, InvalidPermutationError
from .properties import representative_matrix


def normalize_tuple(c: MatrixTuple) -> MatrixTuple:
    """(I, C0^-1 C1, ..., C0^-1 Ck); SingularMatrixError when C0 is singular"""
    c0_inv = inverse(c.c0)
    return MatrixTuple((Mat.identity(c.n),) + tuple(c0_inv @ ci for ci in c.trailing))


def _as_diagonal(d, n: int, index: int) -> Mat:
    m = d if isinstance(d, Mat) else Mat.diagonal(d)
    if m.shape != (n, n):
        raise InvalidDiagonalError(f"D{index} has shape {m.shape}, expected ({n}, {n})")
    if not m.is_diagonal():
        raise InvalidDiagonalError(f"D{index} is not diagonal")
    if any(v < 0 for v in m.diag()):
        raise InvalidDiagonalError(f"D{index} has a negative diagonal entry")
    return m


def diagonal_collapse(c: MatrixTuple, ds: Sequence) -> MatrixTuple:
    """
    Collapse to the pair (C0, C1 D1 + ... + Ck Dk)

    Args:
        c: Matrix tuple
        ds: k nonnegative diagonal matrices (Mat or diagonal entries)

    Returns:
        Two-member MatrixTuple
    """
    if len(ds) != c.k:
        raise InvalidDiagonalError(f"Expected {c.k} diagonal matrices, got {len(ds)}")
    diagonals = [_as_diagonal(d, c.n, j) for j, d in enumerate(ds, start=1)]
    diag_sum = [sum((d[i, i] for d in diagonals), ZERO) for i in range(c.n)]
    if any(v == 0 for v in diag_sum):
        raise InvalidDiagonalError(f"D1 + ... + Dk has a zero diagonal entry: {[str(v) for v in diag_sum]}")

    collapsed = Mat.zeros(c.n)
    for ci, di in zip(c.trailing, diagonals):
        collapsed = collapsed + ci @ di
    return MatrixTuple((c.c0, collapsed))


def permute_tuple(c: MatrixTuple, p: Sequence[int]) -> MatrixTuple:
    """Apply P^T Ci P to every member: entry (i, j) moves to (p[i], p[j])"""
    p = list(p)
    if len(p) != c.n or sorted(p) != list(range(c.n)) or not all(isinstance(v, int) for v in p):
        raise InvalidPermutationError(f"Not a permutation of range({c.n}): {p}")
    inv = [0] * c.n
    for i, target in enumerate(p):
        inv[target] = i
    return MatrixTuple(tuple(
        Mat.from_rows([[m[inv[a], inv[b]] for b in range(c.n)] for a in range(c.n)]) for m in c
    ))


@dataclass(frozen=True)
class DiagonalCollapse:
    """Diagonal tuple (D1, ..., Dk), the collapsed pair and, when known, a pair witness"""
    diagonals: List[Mat]
    collapsed: MatrixTuple
    witness: Optional[SolutionTuple] = None

    def to_dict(self):
        from model import to_jsonable
        return {
            "diagonals": [to_jsonable(d.diag()) for d in self.diagonals],
            "collapsed": to_jsonable(self.collapsed),
            "witness": to_jsonable(self.witness),
        }


def collapse_from_ssm_w_witness(c: MatrixTuple, xs: SolutionTuple) -> DiagonalCollapse:
    """
    Diagonal collapse whose pair fails SSM-W, built from an SSM-W witness of c

    With s = x1 + ... + xk and S = {i : s_i = 0}: Dj has entry xj_i off S and
    1 on S; the pair witness is (x0, y) with y the indicator of the
    complement of S.
    """
    if xs.n != c.n or xs.k != c.k:
        raise DimensionError("Witness does not match the tuple shape")
    n = c.n
    zero_rows = {i for i in range(n) if all(xs[j][i] == 0 for j in range(1, c.k + 1))}
    diagonals = [
        Mat.diagonal([ONE if i in zero_rows else xs[j][i] for i in range(n)])
        for j in range(1, c.k + 1)
    ]
    y = tuple(ZERO if i in zero_rows else ONE for i in range(n))
    return DiagonalCollapse(diagonals, diagonal_collapse(c, diagonals), SolutionTuple((xs[0], y)))


def _diagonals_for(choices: Sequence[int], k: int, n: int) -> List[List[Fraction]]:
    """Pick member choices[j] for column j; C0 columns keep D1 = 1 so the diagonal sum stays positive"""
    entries = [[ZERO] * n for _ in range(k)]
    for j, m in enumerate(choices):
        entries[(m if m > 0 else 1) - 1][j] = ONE
    return entries


def collapse_from_column_w_failure(c: MatrixTuple, verdict: Verdict) -> DiagonalCollapse:
    """
    Diagonal collapse whose pair fails column W, built from a column W No certificate

    A zero-determinant representative collapses directly. For an opposite-sign
    pair, walk from one representative to the other one column at a time; at
    the first sign change either one choice is C0 (indicator diagonals), or
    both are trailing members u, v and the weights t, 1 - t on that column
    with t = det R' / (det R' - det R) zero the determinant.
    """
    if not verdict.is_no or verdict.property != "column_w":
        raise ContractError("collapse_from_column_w_failure needs a column_w No verdict")
    n, k = c.n, c.k
    cert = verdict.certificate

    def _finish(entries: List[List[Fraction]]) -> DiagonalCollapse:
        diagonals = [Mat.diagonal(e) for e in entries]
        return DiagonalCollapse(diagonals, diagonal_collapse(c, diagonals))

    if cert.get("kind") == "zero_determinant":
        return _finish(_diagonals_for(cert["choices"], k, n))
    if cert.get("kind") == "singular_diagonal_collapse":
        raise ContractError("Probe certificates include D0; use the representative certificate instead")

    current = list(cert["choices"][0])
    target = list(cert["choices"][1])
    current_det = det(representative_matrix(c, current))
    for j in range(n):
        if current[j] == target[j]:
            continue
        step = list(current)
        step[j] = target[j]
        step_det = det(representative_matrix(c, step))
        if step_det == 0:
            return _finish(_diagonals_for(step, k, n))
        if sign(step_det) != sign(current_det):
            u, v = current[j], step[j]
            if u == 0 or v == 0:
                entries = _diagonals_for(current, k, n)
                for row in entries:
                    row[j] = ZERO
                entries[max(u, v) - 1][j] = ONE
                return _finish(entries)
            t = step_det / (step_det - current_det)
            entries = _diagonals_for(current, k, n)
            entries[u - 1][j] = t
            entries[v - 1][j] = ONE - t
            return _finish(entries)
        current, current_det = step, step_det
    raise ContractError("Certificate representatives do not change sign")
