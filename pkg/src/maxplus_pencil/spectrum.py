"""Pencils with a prescribed spectrum, explicit eigenvectors, and spectrum scans.

Given disjoint closed intervals ``[a_i, c_i]`` (points allowed) in ascending
order, :func:`synth_matrices` builds 2 x 3m matrices ``A, B`` whose two-sided
spectrum is exactly the union of the intervals. For each ``λ`` in an interval
a vector ``z`` lying in both column spans of the separated system is written
down directly, and the eigenvector is recovered from it by residuation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .core import BOTTOM, Matrix, Vector, as_matrix, ext
from .one_sided import ConsistencyError, principal_solution, solve_one_sided
from .two_sided import (
    ORACLE_GUARD,
    Bounds,
    Status,
    TwoSidedOutcome,
    alternating_solve,
    dominance_infeasible,
    lambda_bounds,
    pattern_oracle,
    separate,
    verify_witness,
)

# Pattern count above which membership() skips the oracle cross-check.
CROSS_CHECK_LIMIT = 9**4
SCAN_BUDGET = 10**7


class IntervalSystemError(ValueError):
    """The intervals are not ascending, disjoint, closed and well ordered."""


class ScanBudgetError(ValueError):
    """Too many breakpoints to scan."""


def _rational(v) -> Fraction:
    v = ext(v)
    if v is BOTTOM:
        raise IntervalSystemError("interval endpoints must be finite")
    return v


@dataclass(frozen=True)
class IntervalSystem:
    intervals: tuple

    def __post_init__(self):
        ivs = tuple((_rational(a), _rational(c)) for a, c in self.intervals)
        if not ivs:
            raise IntervalSystemError("at least one interval is required")
        for k, (a, c) in enumerate(ivs):
            if a > c:
                raise IntervalSystemError(f"endpoint order violated: interval {k} has a={a} > c={c}")
        for k in range(len(ivs) - 1):
            if not ivs[k][1] < ivs[k + 1][0]:
                raise IntervalSystemError(
                    f"ordering violated: interval {k} ends at {ivs[k][1]}, "
                    f"interval {k + 1} starts at {ivs[k + 1][0]}"
                )
        object.__setattr__(self, "intervals", ivs)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def midpoint(self, i: int) -> Fraction:
        a, c = self.intervals[i]
        return (a + c) / 2

    def triple(self, i: int) -> tuple[Fraction, Fraction, Fraction]:
        a, c = self.intervals[i]
        return a, (a + c) / 2, c

    def locate(self, lam) -> Optional[int]:
        """Index of the interval containing ``lam``, or None."""
        lam = ext(lam)
        for i, (a, c) in enumerate(self.intervals):
            if a <= lam <= c:
                return i
        return None


@dataclass(frozen=True)
class Sample:
    lam: Fraction
    outcome: TwoSidedOutcome

    @property
    def status(self) -> Status:
        return self.outcome.status


@dataclass(frozen=True)
class Spectrum:
    components: tuple  # ((lo, hi), ...), ascending
    bounds: Optional[Bounds]
    samples: tuple = ()
    heuristic: bool = True

    def __contains__(self, lam) -> bool:
        return any(lo <= lam <= hi for lo, hi in self.components)


def synth_matrices(sys: IntervalSystem) -> tuple[Matrix, Matrix]:
    """Column triples ``(a, b, c)`` / ``(2a, 2b, 2c)`` in A, ``(0, 0, 0)`` / ``(a, c, b)`` in B."""
    top_a, bot_a, top_b, bot_b = [], [], [], []
    zero = Fraction(0)
    for i in range(len(sys)):
        a, b, c = sys.triple(i)
        top_a += [a, b, c]
        bot_a += [2 * a, 2 * b, 2 * c]
        top_b += [zero, zero, zero]
        bot_b += [a, c, b]
    return Matrix((top_a, bot_a)), Matrix((top_b, bot_b))


def _interval_index(sys: IntervalSystem, i: int) -> None:
    if not 0 <= i < len(sys):
        raise IndexError(f"interval index {i} out of range for {len(sys)} intervals")


def columns_uvw(sys: IntervalSystem, i: int, lam) -> tuple[Vector, Vector, Vector]:
    _interval_index(sys, i)
    lam = _rational(lam)
    a, b, c = sys.triple(i)
    u = Vector((a, 2 * a, lam, a + lam))
    v = Vector((b, 2 * b, lam, c + lam))
    w = Vector((c, 2 * c, lam, b + lam))
    return u, v, w


def witness_case3(sys: IntervalSystem, i: int, lam) -> Vector:
    """``z = (0, λ+b-a, 0, λ+b-a)`` for ``a <= λ <= b``."""
    _interval_index(sys, i)
    lam = _rational(lam)
    a, b, _ = sys.triple(i)
    if not a <= lam <= b:
        raise ValueError(f"λ={lam} is outside [{a}, {b}]")
    t = lam + b - a
    return Vector((0, t, 0, t))


def witness_case4(sys: IntervalSystem, i: int, lam) -> Vector:
    """``z = (0, c, 0, c)`` for ``b <= λ <= c``."""
    _interval_index(sys, i)
    lam = _rational(lam)
    _, b, c = sys.triple(i)
    if not b <= lam <= c:
        raise ValueError(f"λ={lam} is outside [{b}, {c}]")
    return Vector((0, c, 0, c))


def witness_vector(sys: IntervalSystem, lam) -> tuple[int, Vector]:
    """Containing interval and the common vector of both spans; the second formula wins at the midpoint."""
    lam = _rational(lam)
    i = sys.locate(lam)
    if i is None:
        raise ValueError(f"λ={lam} lies in no interval")
    if lam < sys.midpoint(i):
        return i, witness_case3(sys, i, lam)
    return i, witness_case4(sys, i, lam)


def eigenvector_from_witness(sys: IntervalSystem, lam) -> Vector:
    lam = _rational(lam)
    _, z = witness_vector(sys, lam)
    A, B = synth_matrices(sys)
    x = principal_solution(separate(A, B, lam).C, z)
    if not verify_witness(A, B, lam, x):
        raise ConsistencyError(f"residuated eigenvector fails at λ={lam}: {x!r}")
    return x


def membership(A, B, lam, cross_check_limit: int = CROSS_CHECK_LIMIT) -> TwoSidedOutcome:
    """Decide whether ``lam`` is an eigenvalue of the pencil ``(A, B)``.

    Dominance is tried first, then the alternating method. When the
    matrices are finite and have at most ``cross_check_limit`` patterns, the
    pattern oracle is also run and must agree.
    """
    A, B = as_matrix(A), as_matrix(B)
    lam = _rational(lam)
    if dominance_infeasible(A, B, lam):
        return TwoSidedOutcome(Status.INFEASIBLE, "dominance", reason="dominated row")
    result = alternating_solve(separate(A, B, lam))
    if result.solvable and not verify_witness(A, B, lam, result.witness_x):
        raise ConsistencyError(f"alternating witness fails at λ={lam}")
    n, m = A.shape
    if A.is_finite() and B.is_finite() and m ** (2 * n) <= min(cross_check_limit, ORACLE_GUARD):
        check = pattern_oracle(A, B, lam)
        if check.status is not result.status:
            raise ConsistencyError(
                f"alternating says {result.status.value}, oracle says {check.status.value} at λ={lam}"
            )
    return result


def breakpoints(A: Matrix, B: Matrix, bounds: Bounds) -> list[Fraction]:
    """All differences ``a_ij - b_kl`` inside ``bounds``, plus the bounds themselves."""
    avals = {e for e in A.entries() if e is not BOTTOM}
    bvals = {e for e in B.entries() if e is not BOTTOM}
    pts = {a - b for a in avals for b in bvals if bounds.lo <= a - b <= bounds.hi}
    pts.update(v for v in (bounds.lo, bounds.hi) if isinstance(v, Fraction))
    return sorted(pts)


def interval_system_of(A: Matrix, B: Matrix) -> Optional[IntervalSystem]:
    """Recover the interval system if ``(A, B)`` is a synthesized pencil."""
    if A.nrows != 2 or A.ncols % 3 or A.shape != B.shape or not A.is_finite():
        return None
    row = A.rows[0]
    try:
        sys = IntervalSystem(tuple((row[k], row[k + 2]) for k in range(0, A.ncols, 3)))
    except IntervalSystemError:
        return None
    return sys if synth_matrices(sys) == (A, B) else None


def compute_spectrum(A, B, cross_check_limit: int = CROSS_CHECK_LIMIT, scan_budget: int = SCAN_BUDGET) -> Spectrum:
    """Scan the breakpoints and the midpoints between them.

    Assumes every component is closed with endpoints among the breakpoints.
    That holds for synthesized pencils; for any other input the result is
    marked ``heuristic``.
    """
    A, B = as_matrix(A), as_matrix(B)
    if not (A.is_finite() and B.is_finite()):
        raise ValueError("compute_spectrum needs finite matrices")
    heuristic = interval_system_of(A, B) is None
    bounds = lambda_bounds(A, B)
    if bounds is None:
        return Spectrum((), None, (), heuristic)
    pts = breakpoints(A, B, bounds)
    if len(pts) ** 2 > scan_budget:
        raise ScanBudgetError(f"{len(pts)} breakpoints exceed the scan budget")
    grid = []
    for k, p in enumerate(pts):
        if k:
            grid.append((pts[k - 1] + p) / 2)
        grid.append(p)
    samples = tuple(Sample(lam, membership(A, B, lam, cross_check_limit)) for lam in grid)

    components = []
    run = None
    for s in samples:
        if s.outcome.solvable:
            run = (run[0], s.lam) if run else (s.lam, s.lam)
        elif run:
            components.append(run)
            run = None
    if run:
        components.append(run)
    return Spectrum(tuple(components), bounds, samples, heuristic)


@dataclass(frozen=True)
class Check:
    name: str
    lam: Optional[Fraction]
    passed: bool
    detail: str = ""
    witness: Optional[Vector] = None


@dataclass
class TheoremReport:
    system: IntervalSystem
    checks: list = field(default_factory=list)
    spectrum: Optional[Spectrum] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def add(self, name, lam, passed, detail="", witness=None):
        self.checks.append(Check(name, lam, bool(passed), detail, witness))


def interval_samples(a: Fraction, c: Fraction, k: int) -> list[Fraction]:
    """``k`` evenly spaced points of ``[a, c]`` including both ends, plus the midpoint."""
    if a == c:
        return [a]
    k = max(k, 2)
    pts = {a + (c - a) * t / (k - 1) for t in range(k)}
    pts.add((a + c) / 2)
    return sorted(pts)


def gap_samples(lo, hi, k: int) -> list[Fraction]:
    """``k`` points strictly inside ``(lo, hi)``."""
    return [lo + (hi - lo) * t / (k + 1) for t in range(1, k + 1)]


def outside_samples(sys: IntervalSystem, k: int) -> list[Fraction]:
    first, last = sys.intervals[0][0], sys.intervals[-1][1]
    width = max(Fraction(1), last - first)
    below = [first - width * t / k for t in range(1, k + 1)]
    above = [last + width * t / k for t in range(1, k + 1)]
    return below + above


def _tsets_cover(sys: IntervalSystem, lam, z) -> bool:
    A, B = synth_matrices(sys)
    out = solve_one_sided(separate(A, B, lam).C, z)
    return out.solvable and out.covered == frozenset(range(4))


def verify_theorem(
    sys: IntervalSystem,
    samples_per_region: int = 5,
    scan: bool = True,
    extra_points: Sequence = (),
) -> TheoremReport:
    """Check the synthesized pencil against the prescribed intervals.

    Failures are recorded in the report, never raised.
    """
    report = TheoremReport(sys)
    A, B = synth_matrices(sys)
    first, last = sys.intervals[0][0], sys.intervals[-1][1]
    bounds = lambda_bounds(A, B)
    report.add(
        "bounds contain the intervals",
        None,
        bounds is not None and first in bounds and last in bounds,
        f"bounds={bounds}",
    )

    inside = []
    for i, (a, c) in enumerate(sys):
        inside += [(i, lam) for lam in interval_samples(a, c, samples_per_region)]
    outside = outside_samples(sys, samples_per_region)
    for k in range(len(sys) - 1):
        outside += gap_samples(sys.intervals[k][1], sys.intervals[k + 1][0], samples_per_region)
    for lam in extra_points:
        lam = _rational(lam)
        i = sys.locate(lam)
        if i is None:
            outside.append(lam)
        else:
            inside.append((i, lam))

    for i, lam in sorted(set(inside), key=lambda t: t[1]):
        try:
            _, z = witness_vector(sys, lam)
            x = eigenvector_from_witness(sys, lam)
            ok = verify_witness(A, B, lam, x) and _tsets_cover(sys, lam, z)
            report.add("eigenvector", lam, ok, f"interval {i}", x)
        except (ValueError, ConsistencyError) as exc:
            report.add("eigenvector", lam, False, str(exc))
        try:
            out = membership(A, B, lam)
            report.add("member", lam, out.solvable, out.method, out.witness_x)
        except ConsistencyError as exc:
            report.add("member", lam, False, str(exc))

    for lam in sorted(set(outside)):
        try:
            out = membership(A, B, lam)
            report.add("non-member", lam, not out.solvable, out.method)
        except ConsistencyError as exc:
            report.add("non-member", lam, False, str(exc))

    if scan:
        spec = compute_spectrum(A, B)
        report.spectrum = spec
        report.add(
            "scanned spectrum equals the intervals",
            None,
            spec.components == sys.intervals,
            f"components={[(str(lo), str(hi)) for lo, hi in spec.components]}",
        )
    return report
