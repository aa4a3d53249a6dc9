"""
EHLCP-degree
Signed count of branch solutions of F(x) = (p, 0, ..., 0) at a random rational target
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from exactmath import Mat, ZERO, ONE, Vec, det, is_consistent, sign, solve_linear, vec
from model import Branch, MatrixTuple, branches, to_jsonable
from utils import make_rng, ordered_map
from utils.errors import DegreeUndefinedError, DimensionError, GenericityExhaustedError, InvalidInstanceError
from wprops import r0_w


@dataclass(frozen=True)
class DegreeResult:
    value: int
    generic_point: Vec
    solutions_counted: List[Tuple[Tuple[int, ...], int]] = field(default_factory=list)
    attempts: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "generic_point": to_jsonable(self.generic_point),
            "solutions_counted": [{"branch": list(b), "sign": s} for b, s in self.solutions_counted],
            "attempts": self.attempts,
        }


class _Degenerate(Exception):
    """Target lies on a branch boundary or in the range of a singular branch"""


def branch_system(c: MatrixTuple, d: Sequence[Vec], b: Branch, p: Vec) -> Tuple[Mat, Vec]:
    """
    Affine system of F restricted to a branch, rows in the order of F's components

    Block 0 rows are C0 x0 - sum Ci xi = p. For coordinate i at level l the
    active argument of each min is fixed: level 0 keeps xj_i = 0 (j >= 1);
    level l >= 1 keeps x0_i = 0, d_j,i - x_j,i = 0 for j < l and
    x_{j+1},i = 0 for j >= l.
    """
    n, k = c.n, c.k
    size = (k + 1) * n
    rows = [[ZERO] * size for _ in range(size)]
    rhs = [ZERO] * size

    for r in range(n):
        rows[r][:n] = list(c.c0.row(r))
        for j, cj in enumerate(c.trailing, start=1):
            rows[r][j * n:(j + 1) * n] = [-v for v in cj.row(r)]
        rhs[r] = p[r]

    for i, level in enumerate(b):
        for j in range(1, k + 1):
            row = rows[j * n + i]
            if level == 0 or j > level:
                row[j * n + i] = ONE
            elif j == 1:
                row[i] = ONE
            else:
                row[(j - 1) * n + i] = -ONE
                rhs[j * n + i] = -d[j - 2][i]
    return Mat.from_rows(rows), tuple(rhs)


def _strict_interior(z: Vec, b: Branch, d: Sequence[Vec], n: int, k: int) -> bool:
    """
    True when z lies strictly inside the branch region, False when outside;
    raises _Degenerate on the boundary
    """
    inside = True
    for i, level in enumerate(b):
        if level == 0:
            values = [(z[i], ZERO, None)]
        else:
            upper = d[level - 1][i] if level < k else None
            values = [(z[level * n + i], ZERO, upper)]
        for value, lower, upper in values:
            if value == lower or (upper is not None and value == upper):
                raise _Degenerate()
            if value < lower or (upper is not None and value > upper):
                inside = False
    return inside


def _count_at(c: MatrixTuple, d: Sequence[Vec], p: Vec) -> List[Tuple[Tuple[int, ...], int]]:
    n, k = c.n, c.k

    def _branch(b: Branch) -> Optional[Tuple[Tuple[int, ...], int]]:
        a, rhs = branch_system(c, d, b, p)
        jac_det = det(a)
        if jac_det == 0:
            if is_consistent(a, rhs):
                raise _Degenerate()
            return None
        z = solve_linear(a, rhs)
        if _strict_interior(z, b, d, n, k):
            return b.levels, sign(jac_det)
        return None

    return [hit for hit in ordered_map(_branch, branches(n, k)) if hit is not None]


def degree(c: MatrixTuple, d: Optional[Sequence] = None, rng_seed: int = 0,
           retry_limit: Optional[int] = None, target_denominator: Optional[int] = None) -> DegreeResult:
    """
    EHLCP-degree of a tuple with the R0-W property

    Args:
        c: Matrix tuple
        d: k-1 positive bound vectors (default all ones)
        rng_seed: Seed for the random target p
        retry_limit: Redraws allowed on degenerate targets
        target_denominator: Target entries are drawn from [-D, D] / D

    Returns:
        DegreeResult with the signed count and the branches counted

    Raises:
        DegreeUndefinedError: c does not have the R0-W property
        GenericityExhaustedError: every drawn target was degenerate
        ValueError: retry_limit or target_denominator below 1
    """
    from config.settings import SOLVER_CONFIG

    if retry_limit is None:
        retry_limit = SOLVER_CONFIG["degree_retry_limit"]
    if target_denominator is None:
        target_denominator = SOLVER_CONFIG["degree_target_denominator"]
    if retry_limit < 1 or target_denominator < 1:
        raise ValueError(f"retry_limit and target_denominator must be positive, "
                         f"got {retry_limit} and {target_denominator}")

    if r0_w(c).is_no:
        raise DegreeUndefinedError("not_r0_w")
    n, k = c.n, c.k
    d = [vec(dj) for dj in d] if d is not None else [(ONE,) * n for _ in range(k - 1)]
    if len(d) != k - 1 or any(len(dj) != n for dj in d):
        raise DimensionError(f"Expected {k - 1} bound vectors of length {n}")
    if any(v <= 0 for dj in d for v in dj):
        raise InvalidInstanceError("Bound vectors d must be strictly positive")

    rng = make_rng(rng_seed)
    for attempt in range(1, retry_limit + 1):
        p = tuple(Fraction(int(rng.integers(-target_denominator, target_denominator + 1)), target_denominator)
                  for _ in range(n))
        try:
            counted = _count_at(c, d, p)
        except _Degenerate:
            logger.warning(f"Degree target {[str(v) for v in p]} is not generic; redrawing")
            continue
        value = sum(s for _, s in counted)
        logger.debug(f"Degree {value} from {len(counted)} branch solutions (attempt {attempt})")
        return DegreeResult(value, p, counted, attempt)
    raise GenericityExhaustedError(f"No generic target found in {retry_limit} draws")
