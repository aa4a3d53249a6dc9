"""
EHLCP Instances
Matrix tuples, instances (C, d, q) and candidate solution tuples
"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from exactmath import Mat, Vec, ONE, vec, zeros
from utils.errors import DimensionError, InvalidInstanceError


@dataclass(frozen=True)
class MatrixTuple:
    """Ordered tuple (C0, C1, ..., Ck) of square n x n matrices, k >= 1"""
    mats: Tuple[Mat, ...]

    def __post_init__(self):
        mats = tuple(self.mats)
        object.__setattr__(self, "mats", mats)
        if len(mats) < 2:
            raise DimensionError(f"A matrix tuple needs at least two members, got {len(mats)}")
        n = mats[0].n_rows
        for idx, m in enumerate(mats):
            if m.shape != (n, n):
                raise DimensionError(f"Member C{idx} has shape {m.shape}, expected ({n}, {n})")

    @classmethod
    def from_lists(cls, members: Sequence[Sequence[Sequence]]) -> "MatrixTuple":
        return cls(tuple(Mat.from_rows(m) for m in members))

    @property
    def n(self) -> int:
        return self.mats[0].n_rows

    @property
    def k(self) -> int:
        return len(self.mats) - 1

    @property
    def c0(self) -> Mat:
        return self.mats[0]

    @property
    def trailing(self) -> Tuple[Mat, ...]:
        return self.mats[1:]

    def __getitem__(self, index: int) -> Mat:
        return self.mats[index]

    def __iter__(self) -> Iterator[Mat]:
        return iter(self.mats)

    def __len__(self) -> int:
        return len(self.mats)

    def __add__(self, other: "MatrixTuple") -> "MatrixTuple":
        if len(self) != len(other):
            raise DimensionError(f"Tuples have {len(self)} and {len(other)} members")
        return MatrixTuple(tuple(a + b for a, b in zip(self.mats, other.mats)))

    def scale(self, alpha) -> "MatrixTuple":
        return MatrixTuple(tuple(m.scale(alpha) for m in self.mats))


def identity_tuple(n: int, k: int) -> MatrixTuple:
    return MatrixTuple(tuple(Mat.identity(n) for _ in range(k + 1)))


@dataclass(frozen=True)
class Instance:
    """
    One EHLCP: C0 x0 = q + sum Ci xi with the complementarity chain

    Args:
        c: Matrix tuple (C0, ..., Ck)
        d: k-1 bound vectors, strictly positive componentwise
        q: Right-hand side
    """
    c: MatrixTuple
    d: Tuple[Vec, ...]
    q: Vec

    def __post_init__(self):
        d = tuple(vec(dj) for dj in self.d)
        q = vec(self.q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "q", q)

        n, k = self.c.n, self.c.k
        if len(q) != n:
            raise DimensionError(f"q has length {len(q)}, expected {n}")
        if len(d) != k - 1:
            raise InvalidInstanceError(f"Expected {k - 1} bound vectors d for k={k}, got {len(d)}")
        for j, dj in enumerate(d, start=1):
            if len(dj) != n:
                raise DimensionError(f"d{j} has length {len(dj)}, expected {n}")
            if any(v <= 0 for v in dj):
                raise InvalidInstanceError(f"d{j} must be strictly positive, got {[str(v) for v in dj]}")

    @classmethod
    def with_unit_bounds(cls, c: MatrixTuple, q: Sequence) -> "Instance":
        return cls(c, tuple((ONE,) * c.n for _ in range(c.k - 1)), vec(q))

    @property
    def n(self) -> int:
        return self.c.n

    @property
    def k(self) -> int:
        return self.c.k

    def with_q(self, q: Sequence) -> "Instance":
        return Instance(self.c, self.d, vec(q))


@dataclass(frozen=True)
class SolutionTuple:
    """Candidate solution (x0, x1, ..., xk); stacked index of block j, coordinate i is j*n + i"""
    xs: Tuple[Vec, ...]

    def __post_init__(self):
        xs = tuple(vec(x) for x in self.xs)
        object.__setattr__(self, "xs", xs)
        if len(xs) < 2:
            raise DimensionError(f"A solution tuple needs at least two blocks, got {len(xs)}")
        n = len(xs[0])
        if n == 0 or any(len(x) != n for x in xs):
            raise DimensionError(f"Solution blocks have lengths {[len(x) for x in xs]}")

    @classmethod
    def from_stacked(cls, stacked: Sequence, n: int) -> "SolutionTuple":
        stacked = vec(stacked)
        if n <= 0 or len(stacked) % n:
            raise DimensionError(f"Stacked vector of length {len(stacked)} does not split into blocks of {n}")
        return cls(tuple(stacked[j:j + n] for j in range(0, len(stacked), n)))

    @classmethod
    def zero(cls, n: int, k: int) -> "SolutionTuple":
        return cls(tuple(zeros(n) for _ in range(k + 1)))

    @property
    def n(self) -> int:
        return len(self.xs[0])

    @property
    def k(self) -> int:
        return len(self.xs) - 1

    def __getitem__(self, j: int) -> Vec:
        return self.xs[j]

    def stacked(self) -> Vec:
        out: List = []
        for x in self.xs:
            out.extend(x)
        return tuple(out)

    def __repr__(self) -> str:
        blocks = ", ".join("(" + ", ".join(str(v) for v in x) + ")" for x in self.xs)
        return f"SolutionTuple({blocks})"
