"""One-sided max-linear systems ``A ⊗ x = b``.

Two independent decisions are made for every system: the residuated
(principal) solution is multiplied back, and the T-sets of ``b`` against the
columns of ``A`` are checked for covering all rows. They must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BOTTOM, DimensionError, Matrix, Vector, as_matrix, mat_vec, t_set


class ConsistencyError(RuntimeError):
    """Two independent decision routes disagreed; always an implementation bug."""


@dataclass(frozen=True)
class OneSidedOutcome:
    solvable: bool
    principal: Vector
    cover: tuple  # cover[j] = T(b, A[:, j])

    @property
    def covered(self) -> frozenset:
        return frozenset().union(*self.cover)


def _check(A: Matrix, b: Vector) -> None:
    if len(b) != A.nrows:
        raise DimensionError(f"right-hand side has {len(b)} entries, matrix has {A.nrows} rows")
    if not b.is_finite():
        raise ValueError("right-hand side must be finite")


def principal_solution(A, b) -> Vector:
    """Greatest ``x`` with ``A ⊗ x <= b``.

    ``x_j`` is the minimum of ``b_i - a_ij`` over the finite entries of
    column ``j``; a column with no finite entry gets BOTTOM.
    """
    A, b = as_matrix(A), Vector(b)
    _check(A, b)
    x = []
    for j in range(A.ncols):
        cands = [b[i] - A.rows[i][j] for i in range(A.nrows) if A.rows[i][j] is not BOTTOM]
        x.append(min(cands) if cands else BOTTOM)
    return Vector(x)


def solve_one_sided(A, b) -> OneSidedOutcome:
    A, b = as_matrix(A), Vector(b)
    x = principal_solution(A, b)
    cover = tuple(t_set(b, A.col(j)) for j in range(A.ncols))
    by_cover = frozenset().union(*cover) == frozenset(range(A.nrows))
    by_residual = mat_vec(A, x) == b
    if by_cover != by_residual:
        raise ConsistencyError(
            f"T-set cover says {by_cover}, principal solution says {by_residual} for A={A!r}, b={b!r}"
        )
    return OneSidedOutcome(by_cover, x, cover)
