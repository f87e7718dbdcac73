"""Two-sided max-linear systems ``A ⊗ x = λ ⊗ B ⊗ x``.

Two deciders live here and are meant to be run against each other:

* :func:`alternating_solve` works on the separated form
  ``C(λ) ⊗ x = D ⊗ y`` with ``C(λ) = [A; λ⊗B]`` and ``D = [I; I]`` and
  alternates residuations until a fixed point or a provable divergence.
* :func:`pattern_oracle` enumerates which column attains the maximum on each
  side of each equation and decides every pattern as a system of difference
  constraints (Bellman-Ford negative-cycle detection).

Both work on integers after scaling every input by a common denominator.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import (
    BOTTOM,
    DimensionError,
    ExtReal,
    Matrix,
    Vector,
    as_matrix,
    ext,
    identity,
    mat_vec,
    scalar_mul,
    scalar_vec,
)
from .one_sided import ConsistencyError

ORACLE_GUARD = 10**7


class OracleSizeError(ValueError):
    """The pattern enumeration would exceed its size guard."""


class Status(str, enum.Enum):
    SOLVABLE = "solvable"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class SeparatedSystem:
    C: Matrix
    D: Matrix
    lam: Fraction

    @property
    def n(self) -> int:
        return self.D.ncols

    @property
    def m(self) -> int:
        return self.C.ncols


@dataclass(frozen=True)
class TwoSidedOutcome:
    status: Status
    method: str  # "dominance", "alternating" or "oracle"
    witness_x: Optional[Vector] = None
    witness_z: Optional[Vector] = None
    iterations: int = 0
    reason: str = ""

    @property
    def solvable(self) -> bool:
        return self.status is Status.SOLVABLE


@dataclass(frozen=True)
class Bounds:
    """Closed interval; either end may be the float sentinel ``±math.inf``."""

    lo: object
    hi: object

    def __contains__(self, lam) -> bool:
        return self.lo <= lam <= self.hi


def _same_shape(A: Matrix, B: Matrix) -> None:
    if A.shape != B.shape:
        raise DimensionError(f"A is {A.shape} but B is {B.shape}")


def _finite_lambda(lam) -> Fraction:
    lam = ext(lam)
    if lam is BOTTOM:
        raise ValueError("λ = -inf is not supported; only finite λ are spectrum candidates")
    return lam


def _scale(values) -> int:
    return math.lcm(1, *(v.denominator for v in values if v is not BOTTOM))


def separate(A, B, lam) -> SeparatedSystem:
    A, B = as_matrix(A), as_matrix(B)
    _same_shape(A, B)
    lam = _finite_lambda(lam)
    I = identity(A.nrows)
    return SeparatedSystem(A.vstack(scalar_mul(lam, B)), I.vstack(I), lam)


def cancel_equation(lhs: Sequence, rhs: Sequence) -> tuple[Vector, Vector]:
    """Delete coefficients strictly dominated by the opposite side.

    ``max_j(l_j + x_j) = max_j(r_j + x_j)`` keeps its solution set when
    ``l_j < r_j`` is replaced by ``l_j = -inf`` (and symmetrically).
    """
    lhs, rhs = Vector(lhs), Vector(rhs)
    if len(lhs) != len(rhs):
        raise DimensionError(f"length mismatch: {len(lhs)} vs {len(rhs)}")
    new_l, new_r = [], []
    for a, b in zip(lhs, rhs):
        new_l.append(BOTTOM if a < b else a)
        new_r.append(BOTTOM if b < a else b)
    return Vector(new_l), Vector(new_r)


def _strictly_below(u, v) -> bool:
    return all(a < b for a, b in zip(u, v))


def dominance_infeasible(A, B, lam) -> bool:
    """True if some row of one side is strictly below a finite row of the other.

    Cancellation then empties the dominated side of that equation, forcing
    every variable to BOTTOM.
    """
    A, B = as_matrix(A), as_matrix(B)
    _same_shape(A, B)
    lB = scalar_mul(_finite_lambda(lam), B)
    for ra, rb in zip(A.rows, lB.rows):
        if all(e is not BOTTOM for e in rb) and _strictly_below(ra, rb):
            return True
        if all(e is not BOTTOM for e in ra) and _strictly_below(rb, ra):
            return True
    return False


def _diff(a: ExtReal, b: ExtReal):
    if a is BOTTOM and b is BOTTOM:
        raise ValueError("lambda_bounds needs a_ij or b_ij finite at every position")
    if b is BOTTOM:
        return math.inf
    if a is BOTTOM:
        return -math.inf
    return a - b


def lambda_bounds(A, B) -> Optional[Bounds]:
    """Interval ``[max_i min_j (a_ij - b_ij), min_i max_j (a_ij - b_ij)]``.

    Every finite eigenvalue of the pencil lies inside it. Returns ``None``
    when the interval is empty.
    """
    A, B = as_matrix(A), as_matrix(B)
    _same_shape(A, B)
    d = [[_diff(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)]
    lo = max(min(r) for r in d)
    hi = min(max(r) for r in d)
    if lo > hi:
        return None
    return Bounds(lo, hi)


def verify_witness(A, B, lam, x) -> bool:
    """Exact check of ``A ⊗ x = λ ⊗ B ⊗ x`` with ``x`` nontrivial."""
    A, B = as_matrix(A), as_matrix(B)
    _same_shape(A, B)
    x = Vector(x)
    if len(x) != A.ncols:
        raise DimensionError(f"witness has {len(x)} entries, matrices have {A.ncols} columns")
    if not x.is_nontrivial():
        return False
    return mat_vec(A, x) == scalar_vec(_finite_lambda(lam), mat_vec(B, x))


def _split(sys: SeparatedSystem) -> tuple[Matrix, Matrix]:
    n = sys.n
    return Matrix(sys.C.rows[:n]), Matrix(sys.C.rows[n:])


def alternating_solve(sys: SeparatedSystem, max_iterations: Optional[int] = None) -> TwoSidedOutcome:
    """Alternate ``y <- max{y : D⊗y <= C⊗x}`` and ``x <- max{x : C⊗x <= D⊗y}``.

    Starts from ``x = 0``. Every solution below the start stays below every
    iterate, so a fixed point is the greatest such solution. A coordinate
    that falls more than ``(2n+m)·R`` below its start (``R`` the range of the
    finite entries of ``C``) cannot be finite in that solution and is set to
    BOTTOM; once all coordinates are gone the system is infeasible.
    """
    C = sys.C
    n, m = sys.n, sys.m
    if C.nrows != 2 * n:
        raise DimensionError(f"C has {C.nrows} rows, expected {2 * n}")
    for j in range(m):
        if all(r[j] is BOTTOM for r in C.rows):
            raise ValueError(f"column {j} of C has no finite entry")

    q = _scale(C.entries())
    c = [[None if e is BOTTOM else int(e * q) for e in r] for r in C.rows]
    finite = [v for r in c for v in r if v is not None]
    floor = -(2 * n + m) * (max(finite) - min(finite))
    if max_iterations is None:
        max_iterations = m * (-floor + 2 * (max(finite) - min(finite)) + 2) + 2

    cols = [[(i, r[j]) for i, r in enumerate(c) if r[j] is not None] for j in range(m)]
    x = [0] * m
    for it in range(1, max_iterations + 1):
        cx = []
        for r in c:
            best = None
            for cij, xj in zip(r, x):
                if cij is not None and xj is not None:
                    v = cij + xj
                    if best is None or v > best:
                        best = v
            cx.append(best)
        y = [None if (cx[i] is None or cx[n + i] is None) else min(cx[i], cx[n + i]) for i in range(n)]
        dy = y + y
        new_x = []
        for col in cols:
            best = 0
            for k, (i, cij) in enumerate(col):
                if dy[i] is None:
                    best = None
                    break
                v = dy[i] - cij
                if k == 0 or v < best:
                    best = v
            if best is not None and best < floor:
                best = None
            new_x.append(best)
        if all(v is None for v in new_x):
            return TwoSidedOutcome(Status.INFEASIBLE, "alternating", iterations=it, reason="divergence-cap")
        if new_x == x:
            wx = Vector(BOTTOM if v is None else Fraction(v, q) for v in x)
            wz = mat_vec(C, wx)
            A, lB = _split(sys)
            if mat_vec(A, wx) != mat_vec(lB, wx):
                raise ConsistencyError(f"alternating fixed point is not a solution: {wx!r}")
            return TwoSidedOutcome(Status.SOLVABLE, "alternating", wx, wz, it, "fixed-point")
        x = new_x
    return TwoSidedOutcome(Status.INFEASIBLE, "alternating", iterations=max_iterations, reason="iteration-cap")


def _relax(edges, pot):
    # Bellman-Ford warm-started from pot; None on a negative cycle.
    d = list(pot)
    for _ in range(len(d) + 1):
        changed = False
        for u, v, w in edges:
            t = d[u] + w
            if t < d[v]:
                d[v] = t
                changed = True
        if not changed:
            return d
    return None


def pattern_oracle(A, B, lam, max_patterns: int = ORACLE_GUARD) -> TwoSidedOutcome:
    """Brute-force decision by enumerating argmax patterns.

    For each equation ``i`` a pair ``(p, r)`` is chosen: ``p`` attains the
    maximum of ``A_i ⊗ x`` and ``r`` that of ``λ⊗B_i ⊗ x``. The pattern
    induces difference constraints on ``x``; patterns are explored depth
    first in lexicographic order, pruning a prefix once its constraints have
    a negative cycle. The reported witness belongs to the lexicographically
    first feasible pattern.
    """
    A, B = as_matrix(A), as_matrix(B)
    _same_shape(A, B)
    lam = _finite_lambda(lam)
    if not (A.is_finite() and B.is_finite()):
        raise ValueError("pattern_oracle needs finite matrices")
    n, m = A.shape
    if m ** (2 * n) > max_patterns:
        raise OracleSizeError(f"{m}^{2 * n} patterns exceed the guard of {max_patterns}")

    q = _scale([*A.entries(), *B.entries(), lam])
    a = [[int(e * q) for e in r] for r in A.rows]
    b = [[int(e * q) for e in r] for r in B.rows]
    L = int(lam * q)

    # Edge (u, v, w) encodes x_v <= x_u + w.
    choices = []
    for i in range(n):
        row = []
        for p in range(m):
            for r in range(m):
                e = L + b[i][r] - a[i][p]
                edges = [(r, p, e), (p, r, -e)]
                ok = True
                for j in range(m):
                    w = min(a[i][p] - a[i][j], a[i][p] - L - b[i][j])
                    if j == p:
                        if w < 0:
                            ok = False
                            break
                    else:
                        edges.append((p, j, w))
                if ok:
                    row.append(edges)
        choices.append(row)

    checked = 0

    # Satisfied edges are still carried along; they constrain deeper relaxations.
    def search(i, edges, pot):
        nonlocal checked
        if i == n:
            return pot
        for row_edges in choices[i]:
            checked += 1
            all_edges = edges + row_edges
            if all(pot[u] + w >= pot[v] for u, v, w in row_edges):
                new_pot = pot
            else:
                new_pot = _relax(all_edges, pot)
                if new_pot is None:
                    continue
            found = search(i + 1, all_edges, new_pot)
            if found is not None:
                return found
        return None

    pot = search(0, [], [0] * m)
    if pot is None:
        return TwoSidedOutcome(Status.INFEASIBLE, "oracle", iterations=checked, reason="no feasible pattern")
    top = max(pot)
    x = Vector(Fraction(v - top, q) for v in pot)
    if not verify_witness(A, B, lam, x):
        raise ConsistencyError(f"oracle potential is not a solution: {x!r}")
    z = mat_vec(A.vstack(scalar_mul(lam, B)), x)
    return TwoSidedOutcome(Status.SOLVABLE, "oracle", x, z, checked, "feasible pattern")
