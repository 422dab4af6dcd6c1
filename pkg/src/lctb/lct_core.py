"""Parameter algebra and the numerical linear canonical transform.

The transform acts on complex signals sampled on uniform grids.  For b != 0
it is evaluated as a trapezoidal quadrature of the chirp kernel

    F(u) = sqrt(1/(2*pi*i*b)) * integral exp((i/2)[(a/b)t^2 - (2/b)ut + (d/b)u^2]) f(t) dt

and for b = 0 it degenerates to the scaled chirp-multiplied resampling
sqrt(d) * exp(i*c*d*u^2/2) * f(d*u).  All complex square roots take the
principal branch (argument in (-pi, pi]).
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BranchError,
    DeterminantError,
    DomainError,
    GridError,
    NonFiniteError,
    TruncationWarning,
)

DET_TOL = 1e-12
EDGE_TOL = 1e-10
# offsets between lattices are accepted when within this fraction of a step
LATTICE_TOL = 1e-6

_CHUNK = 1 << 22  # max kernel-matrix entries evaluated at once


@dataclass(frozen=True)
class LctParams:
    """Real transform parameters (a, b, c, d) with ad - bc = 1."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.d)
        if not all(math.isfinite(v) for v in vals):
            raise NonFiniteError(f"parameters must be finite, got {vals}")
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > DET_TOL:
            raise DeterminantError(f"ad - bc = {det!r}, expected 1 within {DET_TOL}")

    @property
    def b_is_zero(self) -> bool:
        return self.b == 0.0


def make_params(a: float, b: float, c: float, d: float) -> LctParams:
    """Validate and build an LctParams tuple."""
    return LctParams(float(a), float(b), float(c), float(d))


def invert_params(A: LctParams) -> LctParams:
    """Parameters of the inverse transform: (d, -b, -c, a)."""
    return LctParams(A.d, -A.b, -A.c, A.a)


def special_params(kind: str, theta: float | None = None) -> LctParams:
    """Named parameter tuples: 'fourier', 'identity', or 'frft' with angle theta."""
    if kind == "fourier":
        return LctParams(0.0, 1.0, -1.0, 0.0)
    if kind == "identity":
        return LctParams(1.0, 0.0, 0.0, 1.0)
    if kind == "frft":
        if theta is None:
            raise ValueError("frft parameters need an angle")
        return LctParams(math.cos(theta), math.sin(theta), -math.sin(theta), math.cos(theta))
    raise ValueError(f"unknown parameter kind {kind!r}")


@dataclass(frozen=True)
class Grid:
    """Uniform sampling grid: start, step > 0, count >= 2."""

    start: float
    step: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.step)):
            raise NonFiniteError("grid start/step must be finite")
        if self.step <= 0:
            raise GridError(f"grid step must be positive, got {self.step}")
        if self.count < 2:
            raise GridError(f"grid needs at least 2 points, got {self.count}")

    @property
    def end(self) -> float:
        return self.start + self.step * (self.count - 1)

    def points(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count)


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Complex signal on a uniform grid; the stand-in for an L^1 ∩ L^2 function.

    Samples are stored read-only; the value is treated as zero outside the
    grid.  Discrete norms are Riemann sums weighted by the step.
    """

    t0: float
    dt: float
    samples: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.array(self.samples, dtype=np.complex128, copy=True)
        if arr.ndim != 1 or arr.size < 2:
            raise GridError("signal needs a 1-D sample array with at least 2 points")
        if not (math.isfinite(self.t0) and math.isfinite(self.dt)) or self.dt <= 0:
            raise GridError(f"bad grid origin/step ({self.t0}, {self.dt})")
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise NonFiniteError("signal samples must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def t_end(self) -> float:
        return self.t0 + self.dt * (self.n - 1)

    @property
    def grid(self) -> Grid:
        return Grid(self.t0, self.dt, self.n)

    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n)

    def norm1(self) -> float:
        return float(self.dt * np.sum(np.abs(self.samples)))

    def norm2(self) -> float:
        return float(np.sqrt(self.dt * np.sum(np.abs(self.samples) ** 2)))


def from_grid(grid: Grid, values: np.ndarray) -> SampledSignal:
    if len(values) != grid.count:
        raise GridError(f"{len(values)} values for a {grid.count}-point grid")
    return SampledSignal(grid.start, grid.step, values)


def sample_at(sig: SampledSignal, x: np.ndarray) -> np.ndarray:
    """Linear interpolation of the signal at arbitrary points, zero outside."""
    t = sig.times()
    re = np.interp(x, t, sig.samples.real, left=0.0, right=0.0)
    im = np.interp(x, t, sig.samples.imag, left=0.0, right=0.0)
    return re + 1j * im


def steps_match(x: SampledSignal, y: SampledSignal, tol: float = 1e-12) -> bool:
    return abs(x.dt - y.dt) <= tol


def lattice_offset(x: SampledSignal, y: SampledSignal) -> int:
    """Integer number of steps from x.t0 to y.t0; GridError if off-lattice."""
    if not steps_match(x, y):
        raise GridError(f"step mismatch: {x.dt!r} vs {y.dt!r}")
    off = (y.t0 - x.t0) / x.dt
    k = round(off)
    if abs(off - k) > LATTICE_TOL:
        raise GridError(f"grids are offset by a non-integer number of steps ({off})")
    return k


def align_union(x: SampledSignal, y: SampledSignal) -> tuple[np.ndarray, np.ndarray, float]:
    """Zero-extend both signals onto their union lattice.

    Returns (x_values, y_values, start) on a common grid with the shared step.
    """
    k = lattice_offset(x, y)
    start = min(x.t0, y.t0)
    ox = round((x.t0 - start) / x.dt)
    oy = round((y.t0 - start) / x.dt)
    n = max(ox + x.n, oy + y.n)
    xv = np.zeros(n, dtype=np.complex128)
    yv = np.zeros(n, dtype=np.complex128)
    xv[ox:ox + x.n] = x.samples
    yv[oy:oy + y.n] = y.samples
    return xv, yv, start


def add_signals(x: SampledSignal, y: SampledSignal) -> SampledSignal:
    xv, yv, start = align_union(x, y)
    return SampledSignal(start, x.dt, xv + yv)


def sub_signals(x: SampledSignal, y: SampledSignal) -> SampledSignal:
    xv, yv, start = align_union(x, y)
    return SampledSignal(start, x.dt, xv - yv)


def scale_signal(lam: complex, x: SampledSignal) -> SampledSignal:
    return SampledSignal(x.t0, x.dt, lam * x.samples)


def restrict(sig: SampledSignal, grid: Grid) -> SampledSignal:
    """Values of the signal on the given lattice-compatible grid, zero outside."""
    if abs(sig.dt - grid.step) > 1e-12:
        raise GridError(f"step mismatch: {sig.dt!r} vs {grid.step!r}")
    off = (grid.start - sig.t0) / sig.dt
    k = round(off)
    if abs(off - k) > LATTICE_TOL:
        raise GridError("target grid is off the signal lattice")
    out = np.zeros(grid.count, dtype=np.complex128)
    lo = max(k, 0)
    hi = min(k + grid.count, sig.n)
    if hi > lo:
        out[lo - k:hi - k] = sig.samples[lo:hi]
    return SampledSignal(grid.start, grid.step, out)


def pad_signal(sig: SampledSignal, cells: int) -> SampledSignal:
    """Zero-extend a signal by the given number of steps on both sides."""
    if cells <= 0:
        return sig
    out = np.zeros(sig.n + 2 * cells, dtype=np.complex128)
    out[cells:cells + sig.n] = sig.samples
    return SampledSignal(sig.t0 - cells * sig.dt, sig.dt, out)


def l2_distance(x: SampledSignal, y: SampledSignal) -> float:
    xv, yv, _ = align_union(x, y)
    return float(np.sqrt(x.dt * np.sum(np.abs(xv - yv) ** 2)))


def rel_l2_error(x: SampledSignal, ref: SampledSignal) -> float:
    denom = max(ref.norm2(), 1e-300)
    return l2_distance(x, ref) / denom


def _trapezoid_weights(n: int) -> np.ndarray:
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    return w


def _warn_if_truncated(f: SampledSignal):
    edge = max(abs(f.samples[0]), abs(f.samples[-1]))
    if edge > EDGE_TOL:
        warnings.warn(
            f"signal magnitude {edge:.2e} at the grid boundary exceeds {EDGE_TOL:.0e}; "
            "the transform truncates it to zero there",
            TruncationWarning,
            stacklevel=3,
        )


def lct_transform(f: SampledSignal, A: LctParams, ugrid: Grid) -> SampledSignal:
    """Forward transform of a sampled signal onto the output grid.

    b != 0: trapezoidal quadrature of the chirp kernel over f's grid, one
    output point per ugrid entry, O(N*M).  b = 0: requires d > 0 and every
    d*u inside f's grid (linear interpolation); otherwise DomainError.
    """
    if A.b_is_zero:
        return _lct_b0(f, A, ugrid)
    _warn_if_truncated(f)
    a, b, d = A.a, A.b, A.d
    t = f.times()
    u = ugrid.points()
    K = np.sqrt(1.0 / (2j * np.pi * b))
    # chirp-weighted integrand; trapezoid weights and dt folded in
    ch = np.exp(0.5j * (a / b) * t * t) * f.samples * _trapezoid_weights(f.n) * f.dt
    out = np.empty(ugrid.count, dtype=np.complex128)
    rows = max(1, _CHUNK // f.n)
    for lo in range(0, ugrid.count, rows):
        hi = min(lo + rows, ugrid.count)
        kernel = np.exp((-1j / b) * np.outer(u[lo:hi], t))
        out[lo:hi] = kernel @ ch
    out *= K * np.exp(0.5j * (d / b) * u * u)
    return from_grid(ugrid, out)


def _lct_b0(f: SampledSignal, A: LctParams, ugrid: Grid) -> SampledSignal:
    if A.d <= 0:
        raise BranchError(f"b = 0 requires d > 0 for the real sqrt(d), got d = {A.d}")
    u = ugrid.points()
    x = A.d * u
    pad = f.dt  # one step of slack at either end
    if x.min() < f.t0 - pad or x.max() > f.t_end + pad:
        raise DomainError(
            f"b = 0 branch needs d*u within [{f.t0}, {f.t_end}]; "
            f"requested [{x.min()}, {x.max()}]"
        )
    vals = math.sqrt(A.d) * np.exp(0.5j * A.c * A.d * u * u) * sample_at(f, x)
    return from_grid(ugrid, vals)


def lct_inverse(F: SampledSignal, A: LctParams, tgrid: Grid) -> SampledSignal:
    """Inverse transform: the forward transform with parameters (d, -b, -c, a)."""
    return lct_transform(F, invert_params(A), tgrid)
