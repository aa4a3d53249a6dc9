"""
Random Generators
Seeded matrix tuples and instances of the kinds the theorem suites need
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from exactmath import Mat, ONE, det
from matclass import is_M_matrix
from model import Instance, MatrixTuple
from utils import make_rng
from utils.errors import ResampleBudgetExceeded
from wprops import column_w


class TupleKind(Enum):
    GENERAL = "general"
    COLUMN_W = "column_w"
    Z_NORMALIZED = "z_normalized"
    M_ZERO = "m_zero"
    SSMW_CANDIDATE = "ssmw_candidate"
    GRID_FRIENDLY = "grid_friendly"


class QMode(Enum):
    ANY = "any"
    NONNEG = "nonneg"
    POSITIVE = "positive"


class DMode(Enum):
    ONES = "ones"
    RANDOM = "random"


_KIND_CODES = {kind: code for code, kind in enumerate(TupleKind)}


@dataclass(frozen=True)
class GeneratorSpec:
    """Identical specs give identical tuples"""
    n: int
    k: int
    kind: TupleKind = TupleKind.GENERAL
    entry_range: Tuple[int, int] = (-3, 3)
    seed: int = 0
    half_probability: Optional[float] = None
    resample_budget: Optional[int] = None


def _harness_setting(name: str):
    from config.settings import HARNESS_CONFIG
    return HARNESS_CONFIG[name]


class _Sampler:
    """Entry sampler over a fixed integer range, occasionally producing halves"""

    def __init__(self, rng: np.random.Generator, entry_range: Tuple[int, int], half_probability: float):
        self.rng = rng
        self.lo, self.hi = int(entry_range[0]), int(entry_range[1])
        self.half_probability = half_probability

    def entry(self) -> Fraction:
        if self.rng.random() < self.half_probability:
            return Fraction(int(self.rng.integers(2 * self.lo, 2 * self.hi + 1)), 2)
        return Fraction(int(self.rng.integers(self.lo, self.hi + 1)))

    def magnitude(self) -> Fraction:
        return abs(self.entry())

    def positive(self) -> Fraction:
        return Fraction(int(self.rng.integers(1, max(self.hi, 1) + 1)))

    def matrix(self, n: int) -> Mat:
        return Mat.from_rows([[self.entry() for _ in range(n)] for _ in range(n)])

    def choice(self, values) -> int:
        return values[int(self.rng.integers(0, len(values)))]


def _z_matrix(s: _Sampler, n: int) -> Mat:
    return Mat.from_rows([[s.entry() if i == j else -s.magnitude() for j in range(n)] for i in range(n)])


def _dominant(s: _Sampler, n: int, z_pattern: bool) -> Mat:
    """Strictly row diagonally dominant with a positive diagonal"""
    rows = []
    for i in range(n):
        off = [(-s.magnitude() if z_pattern else s.entry()) for _ in range(n)]
        off[i] = Fraction(0)
        off[i] = sum(abs(v) for v in off) + s.positive()
        rows.append(off)
    return Mat.from_rows(rows)


def _near_identity(s: _Sampler, n: int) -> Tuple[Fraction, Mat]:
    e = s.matrix(n)
    largest = max((abs(v) for v in e.entries), default=Fraction(0))
    eps = Fraction(1, 2 * n * (int(largest) + 1))
    return eps, Mat.identity(n) + e.scale(eps)


def _draw(params: GeneratorSpec, s: _Sampler) -> MatrixTuple:
    n, k = params.n, params.k
    kind = params.kind
    if kind is TupleKind.GENERAL:
        return MatrixTuple(tuple(s.matrix(n) for _ in range(k + 1)))
    if kind is TupleKind.COLUMN_W:
        a = s.matrix(n)
        members = [Mat.identity(n)] + [_near_identity(s, n)[1] for _ in range(k)]
        return MatrixTuple(tuple(a @ m for m in members))
    if kind is TupleKind.Z_NORMALIZED:
        return MatrixTuple((Mat.identity(n),) + tuple(_z_matrix(s, n) for _ in range(k)))
    if kind is TupleKind.M_ZERO:
        return MatrixTuple((_dominant(s, n, z_pattern=True),) + tuple(_dominant(s, n, False) for _ in range(k)))
    if kind is TupleKind.SSMW_CANDIDATE:
        trailing = tuple(_dominant(s, n, False) if s.rng.random() < 0.7 else s.matrix(n) for _ in range(k))
        return MatrixTuple((_near_identity(s, n)[1],) + trailing)
    if kind is TupleKind.GRID_FRIENDLY:
        trailing = tuple(Mat.from_rows([[s.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)])
                         for _ in range(k))
        return MatrixTuple((Mat.identity(n),) + trailing)
    raise ValueError(f"Unknown tuple kind: {kind}")


def _certified(params: GeneratorSpec, c: MatrixTuple) -> bool:
    if params.kind is TupleKind.COLUMN_W:
        return column_w(c).is_yes
    if params.kind is TupleKind.M_ZERO:
        return is_M_matrix(c.c0).is_yes
    return True


def gen_tuple(params: GeneratorSpec) -> MatrixTuple:
    """
    Draw a matrix tuple of the requested kind

    Kinds promising a property (COLUMN_W, M_ZERO) are certified by the exact
    checker and resampled on failure.

    Raises:
        ResampleBudgetExceeded: no certified tuple within the budget
    """
    budget = params.resample_budget or _harness_setting("resample_budget")
    half = params.half_probability
    if half is None:
        half = 0.0 if params.kind is TupleKind.GRID_FRIENDLY else _harness_setting("half_probability")
    rng = make_rng(params.seed, params.n, params.k, _KIND_CODES[params.kind])
    sampler = _Sampler(rng, params.entry_range, half)

    for attempt in range(1, budget + 1):
        c = _draw(params, sampler)
        if params.kind is TupleKind.COLUMN_W and det(c.c0) == 0:
            continue
        if _certified(params, c):
            if attempt > 1:
                logger.debug(f"{params.kind.value} tuple certified after {attempt} draws")
            return c
    logger.warning(f"Resample budget of {budget} exhausted for {params.kind.value} (n={params.n}, k={params.k})")
    raise ResampleBudgetExceeded(f"Could not certify a {params.kind.value} tuple in {budget} draws")


def gen_instance(c: MatrixTuple, q_mode: QMode = QMode.ANY, d_mode: DMode = DMode.ONES, seed: int = 0,
                 entry_range: Tuple[int, int] = (-3, 3), half_probability: Optional[float] = None) -> Instance:
    """
    Draw (d, q) for a tuple

    Args:
        c: Matrix tuple
        q_mode: ANY, NONNEG (q >= 0) or POSITIVE (q > 0)
        d_mode: ONES or RANDOM (positive halves)
        seed: Stream seed
        entry_range: Integer range for q entries
        half_probability: Chance of a half-integer q entry

    Returns:
        Instance with strictly positive d
    """
    half = _harness_setting("half_probability") if half_probability is None else half_probability
    rng = make_rng(seed, c.n, c.k, 1000 + list(QMode).index(q_mode))
    s = _Sampler(rng, entry_range, half)
    if q_mode is QMode.ANY:
        q = [s.entry() for _ in range(c.n)]
    elif q_mode is QMode.NONNEG:
        q = [s.magnitude() for _ in range(c.n)]
    else:
        q = [s.positive() for _ in range(c.n)]

    if d_mode is DMode.ONES:
        d: List[List[Fraction]] = [[ONE] * c.n for _ in range(c.k - 1)]
    else:
        d = [[Fraction(int(rng.integers(1, 2 * max(s.hi, 1) + 1)), 2) for _ in range(c.n)]
             for _ in range(c.k - 1)]
    return Instance(c, tuple(tuple(dj) for dj in d), tuple(q))
