"""Exact max-plus linear algebra and two-sided pencil spectra."""

from .core import (
    BOTTOM,
    DimensionError,
    ExtReal,
    Matrix,
    Vector,
    ext,
    identity,
    mat_mat,
    mat_vec,
    oplus,
    otimes,
    scalar_mul,
    supp,
    t_set,
)
from .one_sided import ConsistencyError, OneSidedOutcome, principal_solution, solve_one_sided
from .two_sided import (
    Bounds,
    OracleSizeError,
    SeparatedSystem,
    Status,
    TwoSidedOutcome,
    alternating_solve,
    cancel_equation,
    dominance_infeasible,
    lambda_bounds,
    pattern_oracle,
    separate,
    verify_witness,
)
from .spectrum import (
    IntervalSystem,
    IntervalSystemError,
    Spectrum,
    columns_uvw,
    compute_spectrum,
    eigenvector_from_witness,
    membership,
    synth_matrices,
    verify_theorem,
    witness_case3,
    witness_case4,
)

__version__ = "0.1.0"
