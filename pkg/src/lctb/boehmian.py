"""Finite-truncation quotients of sequences (Boehmian representatives).

A representative of depth N pairs numerators (f_1..f_N) with delta-sequence
denominators (delta_1..delta_N) under the cross-compatibility

    f_m *A delta_n = f_n *A delta_m   for all m, n <= N,

measured here as an L2 residual.  All limit statements about the infinite
objects become monotone-decrease assertions over the truncation depth, and
equality becomes an equivalence residual against a tolerance; the module
never claims exact equality.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .conv_algebra import a_convolve, spectral_product
from .delta_seq import DeltaFamily, PAD_CELLS
from .errors import ConvergenceWarning, ShapeError, SmoothnessError, ToleranceError
from .lct_core import (
    Grid,
    LctParams,
    SampledSignal,
    add_signals,
    l2_distance,
    lct_transform,
    pad_signal,
    scale_signal,
)

DEFAULT_COMPAT_TOL = 1e-4
SPECTRAL_TOL = 1e-3


@dataclass(frozen=True)
class BoehmianRep:
    """Depth-N truncation of a quotient of sequences."""

    numerators: tuple
    denominators: tuple
    denom_bounds: tuple
    params: LctParams
    compat_residual: float

    def __post_init__(self):
        if len(self.numerators) != len(self.denominators):
            raise ShapeError("numerator/denominator count mismatch")
        if len(self.numerators) < 2:
            raise ShapeError("a quotient truncation needs depth >= 2")

    @property
    def depth(self) -> int:
        return len(self.numerators)


@dataclass(frozen=True)
class SpectralBoehmianRep:
    """Transform-side representative: transformed numerators over transformed deltas."""

    numerators: tuple
    denominators: tuple
    params: LctParams
    cross_residual: float

    @property
    def depth(self) -> int:
        return len(self.numerators)


@dataclass(frozen=True)
class LimitResult:
    """Deepest transformed numerator plus the Cauchy diagnostic of the chain."""

    signal: SampledSignal
    cauchy_diffs: tuple


def _compat_residual(nums, dens, A: LctParams) -> float:
    worst = 0.0
    for m in range(len(nums)):
        for n in range(m + 1, len(nums)):
            x = a_convolve(nums[m], dens[n], A)
            y = a_convolve(nums[n], dens[m], A)
            worst = max(worst, l2_distance(x, y))
    return worst


def make_boehmian(numerators, denominators, denom_bounds, A: LctParams,
                  tol: float | None = DEFAULT_COMPAT_TOL) -> BoehmianRep:
    """Assemble a representative, measuring (and optionally gating) compatibility."""
    residual = _compat_residual(list(numerators), list(denominators), A)
    if tol is not None and residual > tol:
        raise ToleranceError(
            f"quotient compatibility residual {residual:.3e} exceeds {tol:.1e}")
    return BoehmianRep(tuple(numerators), tuple(denominators), tuple(denom_bounds),
                       A, residual)


def embed(f: SampledSignal, family: DeltaFamily, depth: int = 4,
          A: LctParams | None = None,
          tol: float | None = DEFAULT_COMPAT_TOL) -> BoehmianRep:
    """Identify a signal with the quotient (f *A delta_n) / delta_n."""
    if A is not None and A != family.params:
        raise ShapeError("embedding parameters must match the family's")
    A = family.params
    dens = [family.member(n, step=f.dt) for n in range(1, depth + 1)]
    bounds = [family.support_bound(n) for n in range(1, depth + 1)]
    nums = [a_convolve(f, d, A) for d in dens]
    return make_boehmian(nums, dens, bounds, A, tol=tol)


def _check_compatible(B1: BoehmianRep, B2: BoehmianRep):
    if B1.depth != B2.depth:
        raise ShapeError(f"depth mismatch: {B1.depth} vs {B2.depth}")
    if B1.params != B2.params:
        raise ShapeError("representatives use different transform parameters")


def equivalent(B1: BoehmianRep, B2: BoehmianRep) -> float:
    """Equivalence residual: max_n ||f_n *A psi_n - g_n *A phi_n||_2."""
    _check_compatible(B1, B2)
    worst = 0.0
    for n in range(B1.depth):
        x = a_convolve(B1.numerators[n], B2.denominators[n], B1.params)
        y = a_convolve(B2.numerators[n], B1.denominators[n], B1.params)
        worst = max(worst, l2_distance(x, y))
    return worst


def add(B1: BoehmianRep, B2: BoehmianRep,
        tol: float | None = DEFAULT_COMPAT_TOL) -> BoehmianRep:
    """Sum of quotients: (f_n * psi_n + g_n * phi_n) / (phi_n * psi_n)."""
    _check_compatible(B1, B2)
    A = B1.params
    nums, dens, bounds = [], [], []
    for n in range(B1.depth):
        nums.append(add_signals(
            a_convolve(B1.numerators[n], B2.denominators[n], A),
            a_convolve(B2.numerators[n], B1.denominators[n], A)))
        dens.append(a_convolve(B1.denominators[n], B2.denominators[n], A))
        bounds.append(B1.denom_bounds[n] + B2.denom_bounds[n])
    return make_boehmian(nums, dens, bounds, A, tol=tol)


def scalar_mul(lam: complex, B: BoehmianRep) -> BoehmianRep:
    # compatibility is bilinear, so the residual scales exactly with |lam|
    nums = tuple(scale_signal(lam, f) for f in B.numerators)
    return BoehmianRep(nums, B.denominators, B.denom_bounds, B.params,
                       abs(lam) * B.compat_residual)


def boehm_convolve(B1: BoehmianRep, B2: BoehmianRep,
                   tol: float | None = DEFAULT_COMPAT_TOL) -> BoehmianRep:
    """Convolution of quotients: (f_n *A g_n) / (phi_n *A psi_n)."""
    _check_compatible(B1, B2)
    A = B1.params
    nums = [a_convolve(B1.numerators[n], B2.numerators[n], A) for n in range(B1.depth)]
    dens = [a_convolve(B1.denominators[n], B2.denominators[n], A) for n in range(B1.depth)]
    bounds = [B1.denom_bounds[n] + B2.denom_bounds[n] for n in range(B1.depth)]
    return make_boehmian(nums, dens, bounds, A, tol=tol)


def _kth_difference(sig: SampledSignal, k: int) -> SampledSignal:
    padded = pad_signal(sig, PAD_CELLS + k)
    vals = padded.samples
    for _ in range(k):
        vals = np.gradient(vals, padded.dt)
    return SampledSignal(padded.t0, padded.dt, vals)


def boehm_derivative(B: BoehmianRep, k: int, smooth_family: DeltaFamily,
                     tol: float | None = None) -> BoehmianRep:
    """k-th derivative: convolve with the quotient (delta_n^(k)) / delta_n.

    Member derivatives are k-fold second-order central differences on
    zero-padded member grids (padding keeps the stencil mass-exact at the
    support edges).  Non-smooth families are rejected for k >= 2.

    At finite depth the derivative quotient carries a genuine compatibility
    residual of order (support width)^2 * |a/b| when a != 0 (the quotient
    property only holds in the limit), so construction records the residual
    instead of gating it unless a tolerance is passed.
    """
    if k == 0:
        return B
    if k < 0:
        raise ShapeError(f"derivative order must be >= 0, got {k}")
    if k >= 2 and not smooth_family.smooth:
        raise SmoothnessError(
            f"family {smooth_family.name!r} is not smooth enough for k = {k}")
    step = B.numerators[0].dt
    members = [smooth_family.member(n, step=step) for n in range(1, B.depth + 1)]
    d_nums = [_kth_difference(m, k) for m in members]
    bounds = [smooth_family.support_bound(n) for n in range(1, B.depth + 1)]
    deriv_quotient = make_boehmian(d_nums, members, bounds, B.params, tol=tol)
    return boehm_convolve(B, deriv_quotient, tol=tol)


def _require_same_denominators(B_seq, B):
    for j, rep in enumerate(B_seq):
        _check_compatible(rep, B)
        for dn, dm in zip(rep.denominators, B.denominators):
            if dn.n != dm.n or abs(dn.t0 - dm.t0) > 1e-12 or abs(dn.dt - dm.dt) > 1e-15:
                raise ShapeError(f"sequence member {j} uses a different denominator family")
            if np.max(np.abs(dn.samples - dm.samples)) > 1e-12:
                raise ShapeError(f"sequence member {j} uses a different denominator family")


def delta_convergence_diag(B_seq, B: BoehmianRep,
                           family: DeltaFamily | None = None) -> list[float]:
    """Residuals ||(F_j - F) *A delta_j||_2 for a sequence sharing F's denominators.

    With shared denominators the convolution collapses exactly to the j-th
    numerator difference, which is what is measured.  The optional family
    argument, when given, is checked against the shared denominators.
    """
    _require_same_denominators(B_seq, B)
    if family is not None:
        for n, den in enumerate(B.denominators, start=1):
            ref = family.member(n, step=den.dt)
            if ref.n != den.n or np.max(np.abs(ref.samples - den.samples)) > 1e-12:
                raise ShapeError("representatives do not use the given family")
    if len(B_seq) > B.depth:
        raise ShapeError(f"sequence longer ({len(B_seq)}) than truncation depth {B.depth}")
    return [l2_distance(B_seq[j].numerators[j], B.numerators[j])
            for j in range(len(B_seq))]


def small_delta_convergence_diag(B_seq, B: BoehmianRep,
                                 family: DeltaFamily | None = None,
                                 k_list=None) -> np.ndarray:
    """Residual matrix ||(F_j - F) *A delta_k||_2 indexed by (j, k).

    Convergence in the weaker sense requires decrease along j for every
    fixed k.
    """
    _require_same_denominators(B_seq, B)
    if k_list is None:
        k_list = list(range(1, B.depth + 1))
    if any(k < 1 or k > B.depth for k in k_list):
        raise ShapeError(f"k indices {k_list} exceed depth {B.depth}")
    out = np.empty((len(B_seq), len(k_list)))
    for j, rep in enumerate(B_seq):
        for i, k in enumerate(k_list):
            out[j, i] = l2_distance(rep.numerators[k - 1], B.numerators[k - 1])
    return out


def _rel_product_residual(x: SampledSignal, y: SampledSignal) -> float:
    denom = max(x.norm2(), y.norm2(), 1e-300)
    return l2_distance(x, y) / denom


def boehm_lct(B: BoehmianRep, ugrid: Grid,
              tol: float | None = SPECTRAL_TOL) -> SpectralBoehmianRep:
    """Entrywise transform of a quotient onto the spectral side.

    Cross-compatibility under the normalized product (transform of numerator
    m times transformed delta n, against the swapped pair) is verified; it is
    the transform-side image of the quotient identity.
    """
    A = B.params
    nums = [lct_transform(f, A, ugrid) for f in B.numerators]
    dens = [lct_transform(d, A, ugrid) for d in B.denominators]
    worst = 0.0
    for m in range(B.depth):
        for n in range(m + 1, B.depth):
            x = spectral_product(nums[m], dens[n], A)
            y = spectral_product(nums[n], dens[m], A)
            worst = max(worst, _rel_product_residual(x, y))
    if tol is not None and worst > tol:
        raise ToleranceError(
            f"spectral cross-compatibility residual {worst:.3e} exceeds {tol:.1e}")
    return SpectralBoehmianRep(tuple(nums), tuple(dens), A, worst)


def spectral_equivalent(S1: SpectralBoehmianRep, S2: SpectralBoehmianRep) -> float:
    """Equivalence residual on the spectral side, under the normalized product."""
    if S1.depth != S2.depth:
        raise ShapeError(f"depth mismatch: {S1.depth} vs {S2.depth}")
    if S1.params != S2.params:
        raise ShapeError("spectral representatives use different parameters")
    worst = 0.0
    for n in range(S1.depth):
        x = spectral_product(S1.numerators[n], S2.denominators[n], S1.params)
        y = spectral_product(S2.numerators[n], S1.denominators[n], S1.params)
        worst = max(worst, _rel_product_residual(x, y))
    return worst


def check_lct_well_defined(B1: BoehmianRep, B2: BoehmianRep,
                           ugrid: Grid) -> tuple[float, float]:
    """Equivalent inputs must map to equivalent spectral images.

    Returns (time-side equivalence residual, spectral equivalence residual of
    the transformed pair).
    """
    time_res = equivalent(B1, B2)
    spec_res = spectral_equivalent(boehm_lct(B1, ugrid, tol=None),
                                   boehm_lct(B2, ugrid, tol=None))
    return time_res, spec_res


def boehm_lct_limit(B: BoehmianRep, ugrid: Grid) -> LimitResult:
    """Transform of the quotient as a function: the deepest transformed numerator.

    The Cauchy diagnostic is the sup difference of consecutive transformed
    numerators over the (compact) output grid; it should decrease with depth
    and a ConvergenceWarning is issued when it does not.
    """
    A = B.params
    chain = [lct_transform(f, A, ugrid) for f in B.numerators]
    diffs = tuple(
        float(np.max(np.abs(chain[i + 1].samples - chain[i].samples)))
        for i in range(len(chain) - 1))
    if any(diffs[i + 1] >= diffs[i] for i in range(len(diffs) - 1)):
        warnings.warn("Cauchy diagnostic is not strictly decreasing; "
                      "the truncation may be too shallow for this quotient",
                      ConvergenceWarning, stacklevel=2)
    return LimitResult(chain[-1], diffs)
