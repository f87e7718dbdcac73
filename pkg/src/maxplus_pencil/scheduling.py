"""Synchronising two banks of machines.

Machine ``j`` of the first bank starts at ``x_j``; its twin in the second
bank starts at ``x_j + λ``. Product pair ``i`` is complete when
``max_j(x_j + a_ij) == max_j(λ + x_j + b_ij)``. Feasible offsets ``λ`` are
exactly the spectrum of the pencil ``(a, b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import BOTTOM, Matrix, Vector, as_matrix, mat_vec
from .one_sided import principal_solution
from .spectrum import Spectrum, compute_spectrum, membership
from .two_sided import separate, verify_witness


@dataclass(frozen=True)
class ScheduleInstance:
    durations_a: Matrix
    durations_b: Matrix

    def __post_init__(self):
        a, b = as_matrix(self.durations_a), as_matrix(self.durations_b)
        if a.shape != b.shape:
            raise ValueError(f"banks disagree in shape: {a.shape} vs {b.shape}")
        for e in (*a.entries(), *b.entries()):
            if e is BOTTOM or e < 0:
                raise ValueError(f"durations must be finite and nonnegative, got {e}")
        object.__setattr__(self, "durations_a", a)
        object.__setattr__(self, "durations_b", b)


@dataclass(frozen=True)
class ScheduleSolution:
    lam: Fraction
    starts_x: tuple
    completion: tuple
    component: int = 0

    @property
    def starts_y(self) -> tuple:
        return tuple(self.lam + s for s in self.starts_x)


def to_eigenproblem(inst: ScheduleInstance) -> tuple[Matrix, Matrix]:
    return inst.durations_a, inst.durations_b


def is_synchronised(inst: ScheduleInstance, sol: ScheduleSolution) -> bool:
    """Direct evaluation of both completion times for every product pair."""
    for i, (ra, rb) in enumerate(zip(inst.durations_a.rows, inst.durations_b.rows)):
        left = max(s + a for s, a in zip(sol.starts_x, ra))
        right = max(sol.lam + s + b for s, b in zip(sol.starts_x, rb))
        if not left == right == sol.completion[i]:
            return False
    return True


def schedule_at(inst: ScheduleInstance, lam, component: int = 0) -> ScheduleSolution | None:
    """Normalised schedule for offset ``lam``, or None if ``lam`` is infeasible."""
    A, B = to_eigenproblem(inst)
    out = membership(A, B, lam)
    if not out.solvable:
        return None
    C = separate(A, B, lam).C
    # The greatest solution with the same completions is finite.
    x = principal_solution(C, mat_vec(C, out.witness_x))
    if not verify_witness(A, B, lam, x):
        return None
    shift = min(x)
    starts = tuple(v - shift for v in x)
    completion = tuple(mat_vec(A, Vector(starts)))
    return ScheduleSolution(Fraction(lam), starts, completion, component)


def solve_schedule(inst: ScheduleInstance, spec: Spectrum | None = None) -> list[ScheduleSolution]:
    """Schedules at both ends and the middle of every feasible offset component."""
    if spec is None:
        spec = compute_spectrum(*to_eigenproblem(inst))
    sols = []
    for k, (lo, hi) in enumerate(spec.components):
        for lam in sorted({lo, (lo + hi) / 2, hi}):
            sol = schedule_at(inst, lam, k)
            if sol is not None:
                sols.append(sol)
    return sols
