"""
Exact Rational Arithmetic
Scalars, vectors and dense matrices over fractions.Fraction
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, List, Sequence, Tuple, Union

from utils.errors import DimensionError, InputFormatError

Scalar = Fraction
Vec = Tuple[Fraction, ...]
ScalarLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value: Any) -> Fraction:
    """
    Convert an int, Fraction or "p/q" string into an exact scalar

    Floats are refused: decision paths never see rounded input.
    """
    if isinstance(value, bool):
        raise InputFormatError(f"Boolean is not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputFormatError(f"Not a rational number: {value!r}") from e
    raise InputFormatError(f"Unsupported scalar type {type(value).__name__}: {value!r}")


def scalar_to_json(value: Fraction) -> Union[int, str]:
    """Integers stay integers, everything else becomes "p/q\""""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


# Vector helpers

def vec(values: Iterable[Any]) -> Vec:
    return tuple(to_scalar(v) for v in values)


def zeros(n: int) -> Vec:
    return (ZERO,) * n


def ones(n: int) -> Vec:
    return (ONE,) * n


def _check_same_length(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise DimensionError(f"Vector lengths differ: {len(x)} vs {len(y)}")


def add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    _check_same_length(x, y)
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    _check_same_length(x, y)
    return tuple(a - b for a, b in zip(x, y))


def scale(alpha: Fraction, x: Sequence[Fraction]) -> Vec:
    return tuple(alpha * a for a in x)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    _check_same_length(x, y)
    return sum((a * b for a, b in zip(x, y)), ZERO)


def hadamard(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    _check_same_length(x, y)
    return tuple(a * b for a, b in zip(x, y))


def is_zero(x: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in x)


def is_nonneg(x: Sequence[Fraction]) -> bool:
    return all(a >= 0 for a in x)


def is_positive(x: Sequence[Fraction]) -> bool:
    return all(a > 0 for a in x)


def vec_to_json(x: Sequence[Fraction]) -> List[Union[int, str]]:
    return [scalar_to_json(a) for a in x]


@dataclass(frozen=True)
class Mat:
    """Dense row-major matrix of exact rationals"""
    n_rows: int
    n_cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.n_rows <= 0 or self.n_cols <= 0:
            raise DimensionError(f"Matrix dimensions must be positive, got {self.n_rows}x{self.n_cols}")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise DimensionError(
                f"Expected {self.n_rows * self.n_cols} entries, got {len(self.entries)}"
            )

    # Constructors

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "Mat":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("Matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("Ragged rows")
        return cls(len(rows), width, tuple(to_scalar(v) for r in rows for v in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]]) -> "Mat":
        return cls.from_rows(list(zip(*columns)))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int = None) -> "Mat":
        n_cols = n_rows if n_cols is None else n_cols
        return cls(n_rows, n_cols, (ZERO,) * (n_rows * n_cols))

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "Mat":
        values = vec(values)
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else ZERO for i in range(n) for j in range(n)))

    # Access

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.n_cols + j]

    def row(self, i: int) -> Vec:
        return self.entries[i * self.n_cols:(i + 1) * self.n_cols]

    def column(self, j: int) -> Vec:
        return tuple(self.entries[i * self.n_cols + j] for i in range(self.n_rows))

    def rows(self) -> List[Vec]:
        return [self.row(i) for i in range(self.n_rows)]

    def columns(self) -> List[Vec]:
        return [self.column(j) for j in range(self.n_cols)]

    def diag(self) -> Vec:
        return tuple(self[i, i] for i in range(min(self.n_rows, self.n_cols)))

    def __iter__(self) -> Iterator[Vec]:
        return iter(self.rows())

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0
                   for i in range(self.n_rows) for j in range(self.n_cols) if i != j)

    # Arithmetic

    def transpose(self) -> "Mat":
        return Mat.from_rows(self.columns())

    def _check_same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"Shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(self.n_rows, self.n_cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(self.n_rows, self.n_cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        return self.scale(-ONE)

    def scale(self, alpha: Any) -> "Mat":
        alpha = to_scalar(alpha)
        return Mat(self.n_rows, self.n_cols, tuple(alpha * a for a in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.n_cols != other.n_rows:
                raise DimensionError(f"Cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Mat.from_rows([[dot(r, c) for c in cols] for r in self.rows()])
        other = tuple(other)
        if len(other) != self.n_cols:
            raise DimensionError(f"Cannot multiply {self.shape} matrix by vector of length {len(other)}")
        return tuple(dot(r, other) for r in self.rows())

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Mat":
        return Mat.from_rows([[self[i, j] for j in col_indices] for i in row_indices])

    def to_json(self) -> List[List[Union[int, str]]]:
        return [vec_to_json(r) for r in self.rows()]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows())
        return f"Mat[{body}]"


def sum_matrices(mats: Iterable[Mat]) -> Mat:
    mats = list(mats)
    if not mats:
        raise DimensionError("Cannot sum an empty list of matrices")
    total = mats[0]
    for m in mats[1:]:
        total = total + m
    return total
