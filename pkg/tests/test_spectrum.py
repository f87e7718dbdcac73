from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxplus_pencil import (
    IntervalSystem,
    IntervalSystemError,
    Matrix,
    Status,
    columns_uvw,
    compute_spectrum,
    eigenvector_from_witness,
    lambda_bounds,
    membership,
    separate,
    solve_one_sided,
    synth_matrices,
    t_set,
    verify_theorem,
    verify_witness,
    witness_case3,
    witness_case4,
)
from maxplus_pencil.spectrum import interval_samples, interval_system_of, witness_vector

endpoint = st.fractions(min_value=-10, max_value=10, max_denominator=4)


@st.composite
def interval_systems(draw, max_intervals=3):
    m = draw(st.integers(1, max_intervals))
    pts = sorted(draw(st.sets(endpoint, min_size=2 * m, max_size=2 * m)))
    points = draw(st.lists(st.booleans(), min_size=m, max_size=m))
    return IntervalSystem([(pts[2 * i], pts[2 * i] if points[i] else pts[2 * i + 1]) for i in range(m)])


@st.composite
def system_and_lambda(draw):
    sys = draw(interval_systems())
    i = draw(st.integers(0, len(sys) - 1))
    a, c = sys.intervals[i]
    t = draw(st.fractions(min_value=0, max_value=1, max_denominator=12))
    return sys, i, a + (c - a) * t


def test_interval_system_invariants():
    IntervalSystem([(0, 2), (5, 5)])
    with pytest.raises(IntervalSystemError, match="ordering violated"):
        IntervalSystem([(0, 2), (1, 3)])
    with pytest.raises(IntervalSystemError, match="ordering violated"):
        IntervalSystem([(0, 2), (2, 3)])
    with pytest.raises(IntervalSystemError, match="endpoint order"):
        IntervalSystem([(3, 2)])
    with pytest.raises(IntervalSystemError):
        IntervalSystem([])
    sys = IntervalSystem([(F(1, 3), F(1, 2))])
    a, b, c = sys.triple(0)
    assert 2 * b == a + c and b == F(5, 12)


def test_synth_examples():
    A, B = synth_matrices(IntervalSystem([(0, 2)]))
    assert A == Matrix([[0, 1, 2], [0, 2, 4]])
    assert B == Matrix([[0, 0, 0], [0, 2, 1]])
    A, B = synth_matrices(IntervalSystem([(5, 5)]))
    assert A == Matrix([[5, 5, 5], [10, 10, 10]])
    assert B == Matrix([[0, 0, 0], [5, 5, 5]])
    A, B = synth_matrices(IntervalSystem([(0, 2), (5, 5)]))
    assert A == Matrix([[0, 1, 2, 5, 5, 5], [0, 2, 4, 10, 10, 10]])
    assert B == Matrix([[0, 0, 0, 0, 0, 0], [0, 2, 1, 5, 5, 5]])


def test_columns_uvw_examples():
    u, v, w = columns_uvw(IntervalSystem([(0, 2)]), 0, F(1, 2))
    h = F(1, 2)
    assert (u, v, w) == ((0, 0, h, h), (1, 2, h, F(5, 2)), (2, 4, h, F(3, 2)))
    u, v, w = columns_uvw(IntervalSystem([(5, 5)]), 0, 5)
    assert u == v == w == (5, 10, 5, 10)
    with pytest.raises(IndexError):
        columns_uvw(IntervalSystem([(5, 5)]), 1, 5)


@given(interval_systems(), endpoint)
def test_columns_uvw_match_separated_system(sys, lam):
    A, B = synth_matrices(sys)
    C = separate(A, B, lam).C
    for i in range(len(sys)):
        assert list(columns_uvw(sys, i, lam)) == [C.col(3 * i + k) for k in range(3)]


def test_witness_examples():
    sys = IntervalSystem([(0, 2)])
    assert witness_case3(sys, 0, F(1, 2)) == (0, F(3, 2), 0, F(3, 2))
    assert witness_case3(sys, 0, 0) == (0, 1, 0, 1)
    assert witness_case4(sys, 0, F(3, 2)) == (0, 2, 0, 2)
    pt = IntervalSystem([(5, 5)])
    assert witness_case3(pt, 0, 5) == witness_case4(pt, 0, 5) == (0, 5, 0, 5)
    with pytest.raises(ValueError):
        witness_case3(sys, 0, F(3, 2))
    with pytest.raises(ValueError):
        witness_case4(sys, 0, F(1, 2))


def test_case3_tsets_at_one_half():
    sys = IntervalSystem([(0, 2)])
    z = witness_case3(sys, 0, F(1, 2))
    u, v, w = columns_uvw(sys, 0, F(1, 2))
    assert (t_set(z, u), t_set(z, v), t_set(z, w)) == ({2}, {0, 3}, {1})


def test_case4_tsets_at_three_halves():
    sys = IntervalSystem([(0, 2)])
    z = witness_case4(sys, 0, F(3, 2))
    _, v, w = columns_uvw(sys, 0, F(3, 2))
    assert (t_set(z, v), t_set(z, w)) == ({2, 3}, {0, 1})


def test_midpoint_uses_the_second_formula():
    sys = IntervalSystem([(0, 2)])
    assert witness_vector(sys, 1) == (0, witness_case4(sys, 0, 1))


@given(system_and_lambda())
def test_witness_in_both_spans(case):
    sys, i, lam = case
    _, z = witness_vector(sys, lam)
    assert z[0] == z[2] and z[1] == z[3]
    A, B = synth_matrices(sys)
    out = solve_one_sided(separate(A, B, lam).C, z)
    assert out.solvable and out.covered == {0, 1, 2, 3}
    # block i alone already covers
    u, v, w = columns_uvw(sys, i, lam)
    assert set().union(t_set(z, u), t_set(z, v), t_set(z, w)) == {0, 1, 2, 3}


@given(system_and_lambda())
def test_proof_attainment_claims(case):
    sys, i, lam = case
    a, b, c = sys.triple(i)
    u, v, w = columns_uvw(sys, i, lam)
    if a <= lam <= b:
        z = witness_case3(sys, i, lam)
        assert -lam <= -a <= b - 2 * a <= lam + b - 3 * a
        tu, tv, tw = t_set(z, u), t_set(z, v), t_set(z, w)
        if a < lam < b:
            assert tu == {2} and tv >= {0, 3} and tw == {1}
        else:
            assert tu >= {2} and tv >= {0, 3} and tw >= {1}
    if b <= lam <= c:
        z = witness_case4(sys, i, lam)
        tv, tw = t_set(z, v), t_set(z, w)
        if b < lam < c:
            assert tv == {2, 3} and tw == {0, 1}
        else:
            assert tv >= {2, 3} and tw >= {0, 1}


def test_eigenvector_examples():
    sys = IntervalSystem([(0, 2)])
    assert eigenvector_from_witness(sys, F(1, 2)) == (F(-1, 2), -1, F(-5, 2))
    A, B = synth_matrices(sys)
    assert verify_witness(A, B, F(3, 2), eigenvector_from_witness(sys, F(3, 2)))
    pt = IntervalSystem([(5, 5)])
    A, B = synth_matrices(pt)
    assert verify_witness(A, B, 5, eigenvector_from_witness(pt, 5))
    with pytest.raises(ValueError):
        eigenvector_from_witness(sys, 3)


def test_membership_examples():
    A, B = synth_matrices(IntervalSystem([(0, 2), (5, 5)]))
    assert membership(A, B, 1).solvable
    gap = membership(A, B, 3)
    assert gap.status is Status.INFEASIBLE and gap.method == "alternating"
    out = membership(A, B, 6)
    assert out.status is Status.INFEASIBLE and out.method == "dominance"


def test_compute_spectrum_examples():
    A, B = synth_matrices(IntervalSystem([(0, 2), (5, 5)]))
    spec = compute_spectrum(A, B)
    assert spec.components == ((0, 2), (5, 5)) and not spec.heuristic
    spec = compute_spectrum(Matrix([[0]]), Matrix([[0]]))
    assert spec.components == ((0, 0),) and spec.heuristic
    A, B = synth_matrices(IntervalSystem([(1, 1)]))
    assert compute_spectrum(A, B).components == ((1, 1),)
    spec = compute_spectrum(Matrix([[0, 0]]), Matrix([[1, 1]]))
    assert spec.components == ((-1, -1),)
    assert compute_spectrum(Matrix([[0], [0]]), Matrix([[1], [2]])).components == ()


def test_spectrum_samples_are_consistent():
    A, B = synth_matrices(IntervalSystem([(0, 1), (3, 3)]))
    spec = compute_spectrum(A, B)
    for s in spec.samples:
        assert s.outcome.solvable == (s.lam in spec)
        if s.outcome.solvable:
            assert verify_witness(A, B, s.lam, s.outcome.witness_x)
            assert s.lam in spec.bounds
    assert [s.lam for s in spec.samples] == sorted(s.lam for s in spec.samples)


def test_interval_system_recovery():
    sys = IntervalSystem([(0, 1), (3, 3)])
    assert interval_system_of(*synth_matrices(sys)) == sys
    A, B = synth_matrices(sys)
    assert interval_system_of(A, Matrix([[1] * 6, [0] * 6])) is None


@settings(max_examples=15)
@given(interval_systems())
def test_spectrum_reproduces_intervals(sys):
    A, B = synth_matrices(sys)
    spec = compute_spectrum(A, B)
    assert spec.components == sys.intervals
    b = lambda_bounds(A, B)
    assert all(lo in b and hi in b for lo, hi in spec.components)


def test_interval_samples_default_five():
    assert interval_samples(F(0), F(2), 5) == [0, F(1, 2), 1, F(3, 2), 2]
    assert interval_samples(F(3), F(3), 5) == [3]


@pytest.mark.parametrize(
    "intervals, components",
    [([(0, 2)], 1), ([(0, 0)], 1), ([(0, 1), (2, 3), (7, 7)], 3)],
)
def test_verify_theorem_examples(intervals, components):
    report = verify_theorem(IntervalSystem(intervals), 5)
    assert report.passed, report.failures
    assert len(report.spectrum.components) == components


def test_verify_theorem_single_point_statuses():
    report = verify_theorem(IntervalSystem([(0, 0)]), 1, scan=False)
    members = {c.lam: c.passed for c in report.checks if c.name == "member"}
    non = {c.lam for c in report.checks if c.name == "non-member"}
    assert members == {0: True}
    assert {-1, 1} <= non
    assert report.passed
