"""
Exact Simplex Engine
Two-phase primal simplex over fractions with Bland's anti-cycling rule
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from utils.errors import DimensionError, InvariantViolation
from .rational import Vec, ZERO, ONE, to_scalar, dot

Constraint = Tuple[Vec, Fraction]


class LPStatus(Enum):
    """Outcome of a linear program"""
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LinearProgram:
    """
    maximize objective·x subject to row·x = rhs (eq) and row·x <= rhs (ineq)

    Variables are free unless flagged in `nonnegative`.
    """
    num_vars: int
    objective: Vec
    eq_constraints: Tuple[Constraint, ...] = ()
    ineq_constraints: Tuple[Constraint, ...] = ()
    nonnegative: Optional[Tuple[bool, ...]] = None

    def __post_init__(self):
        n = self.num_vars
        objective = tuple(to_scalar(v) for v in self.objective)
        if len(objective) != n:
            raise DimensionError(f"Objective has length {len(objective)}, expected {n}")

        def _coerce(constraints):
            out = []
            for row, rhs in constraints:
                row = tuple(to_scalar(v) for v in row)
                if len(row) != n:
                    raise DimensionError(f"Constraint row has length {len(row)}, expected {n}")
                out.append((row, to_scalar(rhs)))
            return tuple(out)

        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "eq_constraints", _coerce(self.eq_constraints))
        object.__setattr__(self, "ineq_constraints", _coerce(self.ineq_constraints))
        if self.nonnegative is not None:
            if len(self.nonnegative) != n:
                raise DimensionError(f"nonnegative flags have length {len(self.nonnegative)}, expected {n}")
            object.__setattr__(self, "nonnegative", tuple(bool(f) for f in self.nonnegative))

    def is_satisfied_by(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.num_vars:
            return False
        if self.nonnegative and any(flag and v < 0 for flag, v in zip(self.nonnegative, x)):
            return False
        return (all(dot(row, x) == rhs for row, rhs in self.eq_constraints)
                and all(dot(row, x) <= rhs for row, rhs in self.ineq_constraints))


@dataclass(frozen=True)
class LPResult:
    """Status, optimal value and a witness point"""
    status: LPStatus
    value: Optional[Fraction] = None
    witness: Optional[Vec] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL

    @property
    def is_feasible(self) -> bool:
        return self.status is not LPStatus.INFEASIBLE


def unit_row(num_vars: int, index: int, coeff=ONE) -> Vec:
    row = [ZERO] * num_vars
    row[index] = to_scalar(coeff)
    return tuple(row)


@dataclass
class _Presolved:
    fixed: Dict[int, Fraction] = field(default_factory=dict)
    eq_rows: List[List[Fraction]] = field(default_factory=list)
    eq_rhs: List[Fraction] = field(default_factory=list)
    ineq_rows: List[List[Fraction]] = field(default_factory=list)
    ineq_rhs: List[Fraction] = field(default_factory=list)
    infeasible: bool = False


def _presolve(p: LinearProgram, enabled: bool) -> _Presolved:
    """Substitute out variables fixed by singleton equality rows"""
    nonneg = p.nonnegative or (False,) * p.num_vars
    out = _Presolved(
        eq_rows=[list(r) for r, _ in p.eq_constraints],
        eq_rhs=[rhs for _, rhs in p.eq_constraints],
        ineq_rows=[list(r) for r, _ in p.ineq_constraints],
        ineq_rhs=[rhs for _, rhs in p.ineq_constraints],
    )

    changed = enabled
    while changed:
        changed = False
        for row, rhs in zip(out.eq_rows, out.eq_rhs):
            support = [j for j, a in enumerate(row) if a != 0]
            if len(support) != 1:
                continue
            j = support[0]
            value = rhs / row[j]
            if nonneg[j] and value < 0:
                out.infeasible = True
                return out
            out.fixed[j] = value
            for rows, rhss in ((out.eq_rows, out.eq_rhs), (out.ineq_rows, out.ineq_rhs)):
                for i, r in enumerate(rows):
                    if r[j] != 0:
                        rhss[i] -= r[j] * value
                        r[j] = ZERO
            changed = True
            break

    def _drop_empty(rows, rhss, is_eq):
        kept_rows, kept_rhs = [], []
        for r, rhs in zip(rows, rhss):
            if any(a != 0 for a in r):
                kept_rows.append(r)
                kept_rhs.append(rhs)
            elif (is_eq and rhs != 0) or (not is_eq and rhs < 0):
                return None
        return kept_rows, kept_rhs

    eqs = _drop_empty(out.eq_rows, out.eq_rhs, True)
    ineqs = _drop_empty(out.ineq_rows, out.ineq_rhs, False)
    if eqs is None or ineqs is None:
        out.infeasible = True
        return out
    out.eq_rows, out.eq_rhs = eqs
    out.ineq_rows, out.ineq_rhs = ineqs
    return out


class _Tableau:
    """Canonical-form tableau: rows of B^-1 A with right-hand side B^-1 b"""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int], max_pivots: int):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.max_pivots = max_pivots
        self.pivots = 0

    def pivot(self, r: int, c: int) -> None:
        self.pivots += 1
        if self.pivots > self.max_pivots:
            raise InvariantViolation(f"Simplex exceeded {self.max_pivots} pivots")
        piv = self.rows[r][c]
        pivot_row = [v / piv for v in self.rows[r]]
        pivot_rhs = self.rhs[r] / piv
        self.rows[r] = pivot_row
        self.rhs[r] = pivot_rhs
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f != 0:
                self.rows[i] = [a - f * b for a, b in zip(row, pivot_row)]
                self.rhs[i] -= f * pivot_rhs
        self.basis[r] = c

    def run(self, cost: Sequence[Fraction], n_cols: int) -> LPStatus:
        """Maximize cost over columns [0, n_cols) using Bland's rule"""
        while True:
            basic = set(self.basis)
            weighted = [(cost[b], row) for b, row in zip(self.basis, self.rows) if cost[b] != 0]
            entering = None
            for j in range(n_cols):
                if j in basic:
                    continue
                reduced = cost[j] - sum((cb * row[j] for cb, row in weighted), ZERO)
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return LPStatus.OPTIMAL

            best_key, leaving = None, None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best_key is None or key < best_key:
                        best_key, leaving = key, i
            if leaving is None:
                return LPStatus.UNBOUNDED
            self.pivot(leaving, entering)

    def values(self, n_cols: int) -> List[Fraction]:
        vals = [ZERO] * n_cols
        for b, v in zip(self.basis, self.rhs):
            if b < n_cols:
                vals[b] = v
        return vals


def lp_max(p: LinearProgram, presolve: bool = True, max_pivots: int = 100000) -> LPResult:
    """
    Solve a linear program exactly

    Args:
        p: Program to maximize
        presolve: Substitute out singleton equality rows first
        max_pivots: Guard against malformed input

    Returns:
        LPResult with status, optimal value and witness
    """
    pre = _presolve(p, presolve)
    if pre.infeasible:
        return LPResult(LPStatus.INFEASIBLE)

    nonneg = p.nonnegative or (False,) * p.num_vars
    free_vars = [j for j in range(p.num_vars) if j not in pre.fixed]

    # Structural columns: (variable, +1/-1); free variables are split
    columns: List[Tuple[int, int]] = []
    for j in free_vars:
        columns.append((j, 1))
        if not nonneg[j]:
            columns.append((j, -1))
    n_struct = len(columns)
    n_slack = len(pre.ineq_rows)
    n_cols = n_struct + n_slack

    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    basis: List[Optional[int]] = []
    for r, b in zip(pre.eq_rows, pre.eq_rhs):
        row = [r[j] * s for j, s in columns] + [ZERO] * n_slack
        rows.append(row)
        rhs.append(b)
        basis.append(None)
    for k, (r, b) in enumerate(zip(pre.ineq_rows, pre.ineq_rhs)):
        row = [r[j] * s for j, s in columns] + [ZERO] * n_slack
        row[n_struct + k] = ONE
        rows.append(row)
        rhs.append(b)
        basis.append(n_struct + k)

    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
            basis[i] = None

    # Phase 1: artificials only where no slack can start in the basis
    artificial_rows = [i for i, b in enumerate(basis) if b is None]
    n_art = len(artificial_rows)
    for i in range(len(rows)):
        rows[i] = rows[i] + [ZERO] * n_art
    for a, i in enumerate(artificial_rows):
        rows[i][n_cols + a] = ONE
        basis[i] = n_cols + a

    tableau = _Tableau(rows, rhs, basis, max_pivots)
    if n_art:
        phase1_cost = [ZERO] * n_cols + [-ONE] * n_art
        tableau.run(phase1_cost, n_cols + n_art)
        infeasibility = sum((v for b, v in zip(tableau.basis, tableau.rhs) if b >= n_cols), ZERO)
        if infeasibility > 0:
            logger.debug(f"LP infeasible after phase 1 ({tableau.pivots} pivots)")
            return LPResult(LPStatus.INFEASIBLE)

        # Drive remaining zero-level artificials out of the basis
        i = 0
        while i < len(tableau.rows):
            if tableau.basis[i] >= n_cols:
                j = next((j for j in range(n_cols) if tableau.rows[i][j] != 0), None)
                if j is None:
                    del tableau.rows[i]
                    del tableau.rhs[i]
                    del tableau.basis[i]
                    continue
                tableau.pivot(i, j)
            i += 1
        tableau.rows = [row[:n_cols] for row in tableau.rows]

    phase2_cost = [p.objective[j] * s for j, s in columns] + [ZERO] * n_slack
    status = tableau.run(phase2_cost, n_cols)

    col_values = tableau.values(n_cols)
    x = [ZERO] * p.num_vars
    for j, value in pre.fixed.items():
        x[j] = value
    for (j, s), v in zip(columns, col_values):
        x[j] += s * v
    witness = tuple(x)
    logger.trace(f"LP {status.value} after {tableau.pivots} pivots")

    if status is LPStatus.UNBOUNDED:
        return LPResult(LPStatus.UNBOUNDED, None, witness)
    return LPResult(LPStatus.OPTIMAL, dot(p.objective, witness), witness)


def feasible_point(num_vars: int, eq_constraints: Sequence[Constraint] = (),
                   ineq_constraints: Sequence[Constraint] = (),
                   nonnegative: Optional[Sequence[bool]] = None) -> Optional[Vec]:
    """Return a point satisfying the constraints, or None when infeasible"""
    program = LinearProgram(
        num_vars=num_vars,
        objective=(ZERO,) * num_vars,
        eq_constraints=tuple(eq_constraints),
        ineq_constraints=tuple(ineq_constraints),
        nonnegative=tuple(nonnegative) if nonnegative is not None else None,
    )
    result = lp_max(program)
    return result.witness if result.is_feasible else None


def max_margin(num_vars: int, eq_constraints: Sequence[Constraint],
               ineq_constraints: Sequence[Constraint], margin_index: int) -> Optional[Tuple[Fraction, Vec]]:
    """
    Maximize the margin variable at margin_index

    Returns:
        (optimal margin, witness), (None, witness) when the margin is unbounded,
        or None when the system is infeasible
    """
    objective = unit_row(num_vars, margin_index)
    result = lp_max(LinearProgram(num_vars, objective, tuple(eq_constraints), tuple(ineq_constraints)))
    if result.status is LPStatus.INFEASIBLE:
        return None
    return result.value, result.witness
