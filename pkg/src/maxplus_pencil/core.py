"""Exact max-plus arithmetic over the rationals extended with a bottom element.

Finite scalars are :class:`fractions.Fraction`; the bottom element (minus
infinity) is the singleton :data:`BOTTOM`. ``BOTTOM`` compares below every
finite value but deliberately supports no arithmetic, so every sum or shift
has to go through :func:`otimes`.

Indices are 0-based throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class _Bottom:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return "BOTTOM"

    def __repr__(self):
        return "BOTTOM"

    def __str__(self):
        return "-inf"

    def __hash__(self):
        return hash("maxplus-bottom")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction, float)):
            return other != float("-inf")
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, (int, Fraction, float)):
            return True
        return NotImplemented

    def __gt__(self, other):
        if other is self or isinstance(other, (int, Fraction, float)):
            return False
        return NotImplemented

    def __ge__(self, other):
        if other is self:
            return True
        if isinstance(other, (int, Fraction, float)):
            return other == float("-inf")
        return NotImplemented


BOTTOM = _Bottom()

ExtReal = Union[Fraction, _Bottom]


def ext(value) -> ExtReal:
    """Coerce ``value`` to an extended real.

    Accepts ``BOTTOM``, ints, Fractions, strings such as ``"3/2"`` or
    ``"-inf"``, and the float ``-inf``. Other floats are rejected since they
    cannot be trusted to be exact.
    """
    if value is BOTTOM:
        return BOTTOM
    if isinstance(value, bool):
        raise TypeError("booleans are not max-plus scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if s in ("-inf", "-∞"):
            return BOTTOM
        return Fraction(s)
    if isinstance(value, float):
        if value == float("-inf"):
            return BOTTOM
        raise TypeError(f"refusing inexact float {value!r}; use int, Fraction or 'p/q'")
    raise TypeError(f"cannot interpret {value!r} as a max-plus scalar")


def is_finite(a: ExtReal) -> bool:
    return a is not BOTTOM


def oplus(a: ExtReal, b: ExtReal) -> ExtReal:
    """Max-plus addition: the maximum, with BOTTOM as least element."""
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return a if a >= b else b


def otimes(a: ExtReal, b: ExtReal) -> ExtReal:
    """Max-plus multiplication: ordinary addition, absorbed by BOTTOM."""
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    return a + b


def osum(values: Iterable[ExtReal]) -> ExtReal:
    return reduce(oplus, values, BOTTOM)


class Vector(tuple):
    """Immutable column of extended reals."""

    __slots__ = ()

    def __new__(cls, entries: Iterable = ()):
        if isinstance(entries, Vector):
            return entries
        vals = tuple(ext(e) for e in entries)
        if not vals:
            raise ValueError("a vector needs at least one entry")
        return super().__new__(cls, vals)

    def is_nontrivial(self) -> bool:
        return any(e is not BOTTOM for e in self)

    def is_finite(self) -> bool:
        return all(e is not BOTTOM for e in self)

    def __repr__(self):
        return "Vector([" + ", ".join(str(e) for e in self) + "])"


@dataclass(frozen=True)
class Matrix:
    """Dense, immutable max-plus matrix."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(ext(e) for e in r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("a matrix needs at least one row and one column")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {width}")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, index: tuple[int, int]) -> ExtReal:
        i, j = index
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return Vector(self.rows[i])

    def col(self, j: int) -> Vector:
        return Vector(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def entries(self) -> Iterable[ExtReal]:
        for r in self.rows:
            yield from r

    def is_finite(self) -> bool:
        return all(e is not BOTTOM for e in self.entries())

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise DimensionError(f"cannot stack {self.shape} over {other.shape}")
        return Matrix(self.rows + other.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionError(f"cannot place {self.shape} beside {other.shape}")
        return Matrix(tuple(a + b for a, b in zip(self.rows, other.rows)))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.rows)
        return f"Matrix([{body}])"


def as_matrix(A) -> Matrix:
    return A if isinstance(A, Matrix) else Matrix(A)


def identity(n: int) -> Matrix:
    """Max-plus identity: 0 on the diagonal, BOTTOM elsewhere."""
    if n < 1:
        raise ValueError("identity size must be positive")
    zero = Fraction(0)
    return Matrix(tuple(tuple(zero if i == j else BOTTOM for j in range(n)) for i in range(n)))


def mat_vec(A: Matrix, x: Sequence) -> Vector:
    A = as_matrix(A)
    x = Vector(x)
    if A.ncols != len(x):
        raise DimensionError(f"matrix has {A.ncols} columns, vector has {len(x)} entries")
    return Vector(osum(otimes(a, xj) for a, xj in zip(r, x)) for r in A.rows)


def mat_mat(A: Matrix, B: Matrix) -> Matrix:
    A, B = as_matrix(A), as_matrix(B)
    if A.ncols != B.nrows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    cols = B.columns()
    return Matrix(
        tuple(tuple(osum(otimes(a, b) for a, b in zip(r, c)) for c in cols) for r in A.rows)
    )


def scalar_mul(lam: ExtReal, A: Matrix) -> Matrix:
    lam = ext(lam)
    A = as_matrix(A)
    return Matrix(tuple(tuple(otimes(lam, e) for e in r) for r in A.rows))


def scalar_vec(lam: ExtReal, x: Sequence) -> Vector:
    lam = ext(lam)
    return Vector(otimes(lam, e) for e in Vector(x))


def supp(y: Sequence) -> frozenset[int]:
    """Indices of the finite entries of ``y``."""
    return frozenset(i for i, e in enumerate(Vector(y)) if e is not BOTTOM)


def t_set(y: Sequence, z: Sequence) -> frozenset[int]:
    """Indices on the common support where ``y_i - z_i`` is minimal.

    Empty when the supports do not meet.
    """
    y, z = Vector(y), Vector(z)
    if len(y) != len(z):
        raise DimensionError(f"length mismatch: {len(y)} vs {len(z)}")
    diffs = {i: y[i] - z[i] for i in supp(y) & supp(z)}
    if not diffs:
        return frozenset()
    best = min(diffs.values())
    return frozenset(i for i, d in diffs.items() if d == best)


def vec_leq(x: Sequence, y: Sequence) -> bool:
    """Entrywise ``x <= y`` in the extended order."""
    x, y = Vector(x), Vector(y)
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(y)}")
    return all(a <= b for a, b in zip(x, y))
