"""Chirp-weighted convolution and its spectral-side product.

The weighted convolution is

    (f *A g)(t) = integral f(tau) g(t - tau) W(t, tau) dtau,
    W(t, tau) = exp(i * tau * (tau - t) * a / b),

and the matching product on the transform side multiplies pointwise and
rescales by sqrt(2*i*pi*b) * exp(-i*d*u^2/(2b)), which turns the transform
into a convolution-to-product homomorphism.

The weight factorises exactly as W(t, tau) = C(tau) C(t - tau) / C(t) with
C(x) = exp(i*a*x^2/(2b)), so on matching lattices the trapezoidal quadrature
of the weighted integral equals a plain discrete convolution of chirped
samples.  a_convolve uses that form; it is the same O(N*M) trapezoid sum,
just factored, and tests pin it against the literal kernel-matrix evaluation.
"""

import numpy as np

from .errors import BranchError, GridError
from .lct_core import Grid, LctParams, SampledSignal, from_grid, _trapezoid_weights

STEP_TOL = 1e-12


def weight(t, tau, A: LctParams):
    """The unit-modulus convolution weight W(t, tau); b must be nonzero."""
    if A.b_is_zero:
        raise BranchError("the convolution weight is defined only for b != 0")
    t = np.asarray(t, dtype=np.float64)
    tau = np.asarray(tau, dtype=np.float64)
    out = np.exp(1j * tau * (tau - t) * (A.a / A.b))
    return complex(out) if out.ndim == 0 else out


def _chirp(A: LctParams, x: np.ndarray) -> np.ndarray:
    return np.exp(0.5j * (A.a / A.b) * x * x)


def a_convolve(f: SampledSignal, g: SampledSignal, A: LctParams) -> SampledSignal:
    """Weighted convolution of two signals sampled with the same step.

    Output grid: start = f.t0 + g.t0, same step, count = f.n + g.n - 1,
    which is exact support arithmetic for compactly supported inputs.
    Values of g outside its grid count as zero.
    """
    if A.b_is_zero:
        raise BranchError("weighted convolution requires b != 0")
    if abs(f.dt - g.dt) > STEP_TOL:
        raise GridError(f"step mismatch: {f.dt!r} vs {g.dt!r}")
    h = f.dt
    cf = _chirp(A, f.times()) * f.samples * _trapezoid_weights(f.n)
    cg = _chirp(A, g.times()) * g.samples
    out = np.convolve(cf, cg) * h
    t_out = f.t0 + g.t0 + h * np.arange(f.n + g.n - 1)
    out /= _chirp(A, t_out)
    return SampledSignal(f.t0 + g.t0, h, out)


def _require_same_grid(F: SampledSignal, G: SampledSignal):
    if abs(F.dt - G.dt) > STEP_TOL or abs(F.t0 - G.t0) > STEP_TOL or F.n != G.n:
        raise GridError("spectral product needs both factors on the same grid")


def convolution_theorem_rhs(F: SampledSignal, G: SampledSignal, A: LctParams) -> SampledSignal:
    """Spectral side of the convolution identity.

    sqrt(2*i*pi*b) * exp(-i*d*u^2/(2b)) * F(u) * G(u), principal root.
    """
    if A.b_is_zero:
        raise BranchError("the spectral product requires b != 0")
    _require_same_grid(F, G)
    u = F.times()
    fac = np.sqrt(2j * np.pi * A.b) * np.exp(-1j * A.d * u * u / (2 * A.b))
    return SampledSignal(F.t0, F.dt, fac * F.samples * G.samples)


def spectral_product(F: SampledSignal, G: SampledSignal, A: LctParams) -> SampledSignal:
    """The product on the transform-range space.

    Defined as the normalized product of convolution_theorem_rhs, not the
    bare pointwise product: with the sqrt(2*i*pi*b) chirp factor included
    the transform maps weighted convolution to this product exactly.
    """
    return convolution_theorem_rhs(F, G, A)


def spectral_unit(A: LctParams, ugrid: Grid) -> SampledSignal:
    """Identity element of the spectral product: the limit of transformed deltas.

    Equals sqrt(1/(2*pi*i*b)) * exp(i*d*u^2/(2b)), the reciprocal of the
    normalization chirp.
    """
    if A.b_is_zero:
        raise BranchError("the spectral unit requires b != 0")
    u = ugrid.points()
    vals = np.sqrt(1.0 / (2j * np.pi * A.b)) * np.exp(0.5j * (A.d / A.b) * u * u)
    return from_grid(ugrid, vals)
