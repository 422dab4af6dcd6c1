"""Linear canonical transform, weighted convolution algebra, delta sequences,
and finite-truncation Boehmian quotients, with a verification harness that
checks every claimed identity numerically."""

from .boehmian import (
    BoehmianRep,
    LimitResult,
    SpectralBoehmianRep,
    add,
    boehm_convolve,
    boehm_derivative,
    boehm_lct,
    boehm_lct_limit,
    check_lct_well_defined,
    delta_convergence_diag,
    embed,
    equivalent,
    scalar_mul,
    small_delta_convergence_diag,
    spectral_equivalent,
)
from .conv_algebra import (
    a_convolve,
    convolution_theorem_rhs,
    spectral_product,
    spectral_unit,
    weight,
)
from .delta_seq import (
    ConditionReport,
    DeltaFamily,
    approx_identity_check,
    bump_family,
    check_condition_i,
    check_condition_ii,
    condition_ii_passes,
    delta_convolve_closure,
    normalized_lct_of_delta,
    paper_example_delta,
    paper_example_family,
    spectral_closure,
    tail_mass,
    triangular_delta,
    triangular_family,
)
from .errors import (
    BranchError,
    ConvergenceWarning,
    DeterminantError,
    DomainError,
    GridError,
    LctbError,
    NonFiniteError,
    ShapeError,
    SmoothnessError,
    ToleranceError,
    TruncationWarning,
)
from .lct_core import (
    Grid,
    LctParams,
    SampledSignal,
    invert_params,
    lct_inverse,
    lct_transform,
    make_params,
    special_params,
)
from .verify_harness import (
    CLAIM_IDS,
    CheckCase,
    TestBattery,
    VerificationReport,
    run_all,
)

__version__ = "0.1.0"
