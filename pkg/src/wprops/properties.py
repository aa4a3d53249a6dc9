"""
Tuple Properties
Column W, column W0, R0-W and SSM-W for matrix tuples (C0, ..., Ck)
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from loguru import logger

from exactmath import Mat, Vec, ZERO, ONE, det, feasible_point, sign, to_scalar, unit_row
from matclass import supports
from model import MatrixTuple, SolutionTuple, Verdict, check_complementarity, identity_tuple
from utils import make_rng, ordered_map
from utils.errors import DimensionError, InputFormatError


@dataclass(frozen=True)
class Representative:
    """Column representative: column j taken from member choices[j]"""
    choices: Tuple[int, ...]
    matrix: Mat


def representative_matrix(c: MatrixTuple, choices: Sequence[int]) -> Mat:
    return Mat.from_columns([c[m].column(j) for j, m in enumerate(choices)])


def representatives(c: MatrixTuple) -> List[Representative]:
    """All (k+1)^n column representatives in lexicographic order of their choices"""
    return [Representative(choices, representative_matrix(c, choices))
            for choices in itertools.product(range(c.k + 1), repeat=c.n)]


def _representative_dets(c: MatrixTuple) -> Tuple[List[Representative], List[Fraction]]:
    reps = representatives(c)
    dets = ordered_map(lambda r: det(r.matrix), reps)
    return reps, dets


# Column W

def column_w(c: MatrixTuple) -> Verdict:
    """
    Column W-property: every representative determinant has the same strict sign

    Returns:
        Yes with the common sign; No with a zero-determinant representative
        or a positive/negative pair
    """
    reps, dets = _representative_dets(c)
    signs = [sign(v) for v in dets]
    if all(s > 0 for s in signs) or all(s < 0 for s in signs):
        return Verdict.yes("column_w", sign=signs[0])

    zero = next((i for i, s in enumerate(signs) if s == 0), None)
    if zero is not None:
        return Verdict.no("column_w", kind="zero_determinant",
                          choices=list(reps[zero].choices), representative=reps[zero].matrix,
                          determinant=dets[zero])

    pos = signs.index(1)
    neg = signs.index(-1)
    return Verdict.no("column_w", kind="opposite_signs",
                      choices=[list(reps[pos].choices), list(reps[neg].choices)],
                      representatives=[reps[pos].matrix, reps[neg].matrix],
                      determinants=[dets[pos], dets[neg]])


def is_column_w_certificate(c: MatrixTuple, verdict: Verdict) -> bool:
    """Re-verify a column W verdict by recomputing the determinants it names"""
    cert = verdict.certificate
    if verdict.is_yes:
        _, dets = _representative_dets(c)
        return all(sign(v) == cert.get("sign") for v in dets)
    if not verdict.is_no:
        return False
    if cert.get("kind") == "zero_determinant":
        return det(representative_matrix(c, cert["choices"])) == 0
    if cert.get("kind") == "opposite_signs":
        first, second = (det(representative_matrix(c, ch)) for ch in cert["choices"])
        return first * second < 0
    return False


def column_w_diag_probe(c: MatrixTuple, trials: Optional[int] = None, rng_seed: int = 0) -> Verdict:
    """
    Sample nonnegative diagonal tuples (D0, ..., Dk) with positive diagonal sum

    Returns No with the diagonals when det(sum Ci Di) = 0 for a sample, else
    Unknown. The k+1 whole-member picks (Dm = I) are tried first; half of the
    random samples pick a single member per column.
    """
    if trials is None:
        from config.settings import PROPERTY_CONFIG
        trials = PROPERTY_CONFIG["diag_probe_trials"]
    n, k = c.n, c.k
    rng = make_rng(rng_seed)

    def _whole(m: int) -> List[List[int]]:
        return [[1 if i == m else 0] * n for i in range(k + 1)]

    def _sample(trial: int) -> List[List[int]]:
        diags = [[0] * n for _ in range(k + 1)]
        for j in range(n):
            if trial % 2 == 0:
                diags[int(rng.integers(0, k + 1))][j] = 1
            else:
                for m in range(k + 1):
                    diags[m][j] = int(rng.integers(0, 4))
                if all(diags[m][j] == 0 for m in range(k + 1)):
                    diags[int(rng.integers(0, k + 1))][j] = 1
        return diags

    candidates = [_whole(m) for m in range(k + 1)] + [_sample(t) for t in range(trials)]
    for diags in candidates:
        total = Mat.zeros(n)
        for member, diag in zip(c, diags):
            total = total + member @ Mat.diagonal(diag)
        if det(total) == 0:
            logger.debug(f"Diagonal probe hit a singular collapse: {diags}")
            return Verdict.no("column_w", kind="singular_diagonal_collapse",
                              diagonals=[[to_scalar(v) for v in d] for d in diags])
    return Verdict.unknown("column_w", trials=len(candidates))


# Column W0

def _parse_eps_grid(eps_grid: Optional[Sequence]) -> Tuple[Fraction, ...]:
    if eps_grid is None:
        from config.settings import PROPERTY_CONFIG
        eps_grid = PROPERTY_CONFIG["w0_eps_grid"]
    grid = tuple(to_scalar(e) for e in eps_grid)
    if not grid:
        raise InputFormatError("column_w0 needs a non-empty epsilon grid")
    if any(e <= 0 for e in grid):
        raise InputFormatError(f"Epsilon grid must be positive, got {[str(e) for e in grid]}")
    if any(b >= a for a, b in zip(grid, grid[1:])):
        raise InputFormatError(f"Epsilon grid must be strictly decreasing, got {[str(e) for e in grid]}")
    return grid


def _sign_on_positive_axis(c: MatrixTuple, n_tuple: MatrixTuple) -> Optional[int]:
    """
    Common strict sign of every representative determinant of C + eps*N
    as a polynomial in eps on (0, oo), or None when some polynomial has a
    positive root or the signs differ
    """
    eps = sympy.Symbol("eps", positive=True)
    common = None
    for choices in itertools.product(range(c.k + 1), repeat=c.n):
        entries = [[sympy.Rational(c[m][i, j].numerator, c[m][i, j].denominator)
                    + eps * sympy.Rational(n_tuple[m][i, j].numerator, n_tuple[m][i, j].denominator)
                    for j, m in enumerate(choices)] for i in range(c.n)]
        poly = sympy.Poly(sympy.Matrix(entries).det(method="berkowitz").expand(), eps)
        if poly.is_zero:
            return None
        roots_from_zero = poly.count_roots(0, None)
        if poly.eval(0) == 0:
            roots_from_zero -= 1
        if roots_from_zero > 0:
            return None
        s = 1 if poly.eval(1) > 0 else -1
        if common is None:
            common = s
        elif s != common:
            return None
    return common


def column_w0(c: MatrixTuple, n_candidates: Optional[Sequence[MatrixTuple]] = None,
              eps_grid: Optional[Sequence] = None, exact: bool = True) -> Verdict:
    """
    Semi-decision for the column W0-property

    Args:
        c: Matrix tuple
        n_candidates: Perturbation tuples N to try (default: the identity tuple)
        eps_grid: Positive, strictly decreasing epsilons
        exact: Confirm grid passes by a polynomial sign check in eps

    Returns:
        No when representative signs are strictly mixed; Yes with the
        candidate N when C + eps*N is column W on the grid (and for every
        eps > 0 when exact); Unknown otherwise
    """
    grid = _parse_eps_grid(eps_grid)
    reps, dets = _representative_dets(c)
    signs = [sign(v) for v in dets]
    if 1 in signs and -1 in signs:
        pos, neg = signs.index(1), signs.index(-1)
        return Verdict.no("column_w0", kind="mixed_signs",
                          choices=[list(reps[pos].choices), list(reps[neg].choices)],
                          determinants=[dets[pos], dets[neg]])

    candidates = list(n_candidates) if n_candidates is not None else [identity_tuple(c.n, c.k)]
    for index, n_tuple in enumerate(candidates):
        if len(n_tuple) != len(c) or n_tuple.n != c.n:
            raise DimensionError(f"Candidate {index} does not match the tuple shape")
        if not all(column_w(c + n_tuple.scale(e)).is_yes for e in grid):
            continue
        if not exact:
            return Verdict.yes("column_w0", candidate=n_tuple, eps_grid=list(grid), exact=False)
        if _sign_on_positive_axis(c, n_tuple) is not None:
            return Verdict.yes("column_w0", candidate=n_tuple, eps_grid=list(grid), exact=True)
        logger.debug(f"Candidate {index} passes the grid but not every eps > 0")
    return Verdict.unknown("column_w0", candidates_tried=len(candidates), eps_grid=list(grid))


# R0-W and SSM-W

def _homogeneous_rows(c: MatrixTuple) -> List[Tuple[Vec, Fraction]]:
    """C0 x0 - sum Ci xi = 0 over the stacked vector"""
    rows = []
    for r in range(c.n):
        row = list(c.c0.row(r))
        for ci in c.trailing:
            row.extend(-v for v in ci.row(r))
        rows.append((tuple(row), ZERO))
    return rows


def _r0_w_support_lp(c: MatrixTuple, alpha: Tuple[int, ...]) -> Optional[Vec]:
    n, k = c.n, c.k
    num_vars = (k + 1) * n
    eqs = _homogeneous_rows(c)
    ineqs = []
    for i in range(n):
        if i in alpha:
            ineqs.append((unit_row(num_vars, i, -ONE), ZERO))
            eqs.extend((unit_row(num_vars, j * n + i), ZERO) for j in range(1, k + 1))
        else:
            eqs.append((unit_row(num_vars, i), ZERO))
            ineqs.extend((unit_row(num_vars, j * n + i, -ONE), ZERO) for j in range(1, k + 1))
    eqs.append(((ONE,) * num_vars, ONE))
    return feasible_point(num_vars, eqs, ineqs)


def _ssm_w_support_lp(c: MatrixTuple, alpha: Tuple[int, ...]) -> Optional[Vec]:
    n, k = c.n, c.k
    num_vars = (k + 1) * n
    eqs = _homogeneous_rows(c)
    ineqs = []
    normalization = [ONE] * num_vars
    for i in range(n):
        if i in alpha:
            ineqs.append((unit_row(num_vars, i, -ONE), ZERO))
            eqs.extend((unit_row(num_vars, j * n + i), ZERO) for j in range(1, k + 1))
        else:
            ineqs.append((unit_row(num_vars, i), ZERO))
            ineqs.extend((unit_row(num_vars, j * n + i, -ONE), ZERO) for j in range(1, k + 1))
            normalization[i] = -ONE
    eqs.append((tuple(normalization), ONE))
    return feasible_point(num_vars, eqs, ineqs)


def _first_support_witness(c: MatrixTuple, solver) -> Optional[Tuple[Tuple[int, ...], SolutionTuple]]:
    alphas = supports(c.n, include_empty=True)
    results = ordered_map(lambda alpha: solver(c, alpha), alphas)
    logger.debug(f"Solved {len(alphas)} support LPs")
    for alpha, point in zip(alphas, results):
        if point is not None:
            return alpha, SolutionTuple.from_stacked(point, c.n)
    return None


def r0_w(c: MatrixTuple) -> Verdict:
    """
    R0-W property: x0 ∧ xj = 0 for all j with C0 x0 = sum Ci xi forces x = 0

    Decided by one feasibility LP per support alpha of x0 (by size, then
    lexicographic); No carries the first normalized witness.
    """
    found = _first_support_witness(c, _r0_w_support_lp)
    if found is None:
        return Verdict.yes("r0_w")
    alpha, witness = found
    return Verdict.no("r0_w", support=list(alpha), witness=witness)


def ssm_w(c: MatrixTuple) -> Verdict:
    """
    SSM-W property: xj >= 0, x0 * xj <= 0 for all j with C0 x0 = sum Ci xi forces x = 0

    Support alpha fixes the sign of x0 (>= 0 on alpha, <= 0 off it) and
    forces xj = 0 on alpha.
    """
    found = _first_support_witness(c, _ssm_w_support_lp)
    if found is None:
        return Verdict.yes("ssm_w")
    alpha, witness = found
    return Verdict.no("ssm_w", support=list(alpha), witness=witness)


def _solves_homogeneous(c: MatrixTuple, xs: SolutionTuple) -> bool:
    lhs = c.c0 @ xs[0]
    rhs = [ZERO] * c.n
    for ci, xi in zip(c.trailing, xs.xs[1:]):
        rhs = [a + b for a, b in zip(rhs, ci @ xi)]
    return list(lhs) == rhs


def is_r0_w_witness(c: MatrixTuple, xs: SolutionTuple) -> bool:
    if xs.n != c.n or xs.k != c.k:
        return False
    nonzero = any(v != 0 for x in xs.xs for v in x)
    return (nonzero and _solves_homogeneous(c, xs)
            and all(check_complementarity(xs[0], xs[j]) for j in range(1, c.k + 1)))


def is_ssm_w_witness(c: MatrixTuple, xs: SolutionTuple) -> bool:
    if xs.n != c.n or xs.k != c.k:
        return False
    nonzero = any(v != 0 for x in xs.xs for v in x)
    signs_ok = all(v >= 0 for x in xs.xs[1:] for v in x) and all(
        a * b <= 0 for j in range(1, c.k + 1) for a, b in zip(xs[0], xs[j]))
    return nonzero and signs_ok and _solves_homogeneous(c, xs)


def tuple_properties(c: MatrixTuple, eps_grid: Optional[Sequence] = None) -> Dict[str, Verdict]:
    """Column W, column W0, R0-W and SSM-W verdicts for one tuple"""
    return {
        "column_w": column_w(c),
        "column_w0": column_w0(c, eps_grid=eps_grid),
        "r0_w": r0_w(c),
        "ssm_w": ssm_w(c),
    }
