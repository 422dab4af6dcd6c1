"""Delta sequences: generation, axioms, and their spectral limit.

A delta sequence is a family of compactly supported signals delta_n whose
chirp-weighted mass integral exp(i*a*t^2/(2b)) * delta_n(t) dt equals 1 for
every n and whose tails vanish as n grows.  Members carry the conjugate
chirp exp(-i*a*t^2/(2b)) so the mass integrand is a plain real profile.

Three families ship:

* ``triangular`` - profile n^2*t on [0, 1/n], n^2*(2/n - t) on [1/n, 2/n].
  Unit mass analytically; with the kink points on the lattice the trapezoid
  mass is exact.
* ``paper_example`` - same but with first branch ``t`` instead of ``n^2*t``.
  Its mass is 1/2 + 1/(2n^2), not 1; it is kept as a negative control and
  the condition checker must flag it.
* ``bump`` - the symmetric smooth profile exp(-1/(1 - (n t)^2)), rescaled
  numerically on its grid so the discrete mass is exactly 1.  Infinitely
  differentiable, so usable for derivative quotients.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .conv_algebra import a_convolve, spectral_product
from .errors import BranchError, GridError
from .lct_core import (
    Grid,
    LctParams,
    SampledSignal,
    from_grid,
    l2_distance,
    lct_transform,
    restrict,
    _trapezoid_weights,
)

COND_I_TOL = 1e-6        # analytic identities, fine grids
COND_I_TOL_QUAD = 1e-4   # quadrature-limited identities (convolved members)
AUTO_INTERVALS = 64      # minimum sample intervals across a member's support
PAD_CELLS = 2            # zero cells beyond the support, keeps stencils exact


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the delta-sequence axioms for one member."""

    n: int
    condition_i_value: complex
    tolerance: float
    passed_i: bool
    tail_mass: float | None = None
    passed_ii: bool | None = None


def _chirp_conj(A: LctParams, t: np.ndarray) -> np.ndarray:
    return np.exp(-0.5j * (A.a / A.b) * t * t)


def _require_branch(A: LctParams):
    if A.b_is_zero:
        raise BranchError("delta sequences are defined for b != 0")


def _triangular_profile(n: float, t: np.ndarray, literal_first_branch: bool) -> np.ndarray:
    up = t if literal_first_branch else n * n * t
    down = n * n * (2.0 / n - t)
    prof = np.where(t <= 1.0 / n, up, down)
    prof = np.where((t < 0) | (t > 2.0 / n), 0.0, prof)
    if literal_first_branch:
        # two-sided mean at the jump node, so the trapezoid mass matches the
        # piecewise integral exactly
        at_kink = np.isclose(t, 1.0 / n, rtol=0, atol=1e-9 / n)
        prof = np.where(at_kink, 0.5 * (1.0 / n + n), prof)
    return prof


def paper_example_delta(n: int, A: LctParams, grid: Grid) -> SampledSignal:
    """The literal two-branch example member on the given grid (unit mass fails)."""
    _require_branch(A)
    _check_covers(grid, 0.0, 2.0 / n)
    t = grid.points()
    return from_grid(grid, _chirp_conj(A, t) * _triangular_profile(n, t, True))


def triangular_delta(n: int, A: LctParams, grid: Grid) -> SampledSignal:
    """Corrected triangular member (first branch scaled to n^2*t, mass exactly 1)."""
    _require_branch(A)
    _check_covers(grid, 0.0, 2.0 / n)
    t = grid.points()
    return from_grid(grid, _chirp_conj(A, t) * _triangular_profile(n, t, False))


def _check_covers(grid: Grid, lo: float, hi: float):
    if grid.start > lo + 1e-12 or grid.end < hi - 1e-12:
        raise GridError(f"grid [{grid.start}, {grid.end}] does not cover [{lo}, {hi}]")


def _member_grid(lo: float, hi: float, step: float, pad: int) -> Grid:
    start = (np.floor(lo / step + 1e-9) - pad) * step
    count = int(np.ceil((hi - start) / step - 1e-9)) + 1 + pad
    return Grid(start, step, count)


@dataclass(frozen=True)
class DeltaFamily:
    """Indexed generator of delta-sequence members.

    ``scale_map`` sends the index n to the width parameter actually used, so
    the same profiles can be reindexed (e.g. geometrically) for truncated
    quotient constructions.  ``smooth`` marks families that may be
    finite-difference differentiated.
    """

    name: str
    params: LctParams
    kind: str  # "triangular" | "paper_example" | "bump"
    scale_map: Callable[[int], float] = lambda n: float(n)
    smooth: bool = False

    def scale(self, n: int) -> float:
        s = float(self.scale_map(n))
        if s <= 0:
            raise GridError(f"scale map must be positive, got {s} at index {n}")
        return s

    def support_bound(self, n: int) -> float:
        """Half-width bound: member n is supported in [-bound, bound]."""
        s = self.scale(n)
        return 1.0 / s if self.kind == "bump" else 2.0 / s

    def auto_step(self, n: int) -> float:
        """Default member step: at least AUTO_INTERVALS intervals across the support."""
        return (1.0 / self.scale(n)) / (AUTO_INTERVALS // 2)

    def member(self, n: int, step: float | None = None, pad: int = PAD_CELLS) -> SampledSignal:
        """Member n sampled at the given step (default: auto-refined)."""
        _require_branch(self.params)
        if n < 1:
            raise GridError(f"member index must be >= 1, got {n}")
        s = self.scale(n)
        if step is None:
            step = self.auto_step(n)
        if self.kind == "bump":
            # symmetric lattice through 0 keeps the discrete first moment zero
            m = int(np.ceil((1.0 / s) / step - 1e-9)) + pad
            grid = Grid(-m * step, step, 2 * m + 1)
            return _bump_member(s, self.params, grid)
        grid = _member_grid(0.0, 2.0 / s, step, pad)
        t = grid.points()
        prof = _triangular_profile(s, t, self.kind == "paper_example")
        return from_grid(grid, _chirp_conj(self.params, t) * prof)


def _bump_member(s: float, A: LctParams, grid: Grid) -> SampledSignal:
    t = grid.points()
    x = s * t
    prof = np.zeros_like(t)
    inside = np.abs(x) < 1.0
    prof[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    mass = float(np.sum(_trapezoid_weights(len(t)) * prof) * grid.step)
    if mass <= 0:
        raise GridError(f"bump at scale {s} has no support on a step-{grid.step} grid")
    return from_grid(grid, _chirp_conj(A, t) * (prof / mass))


def triangular_family(A: LctParams, scale_map=None) -> DeltaFamily:
    return DeltaFamily("triangular", A, "triangular",
                       scale_map or (lambda n: float(n)), smooth=False)


def paper_example_family(A: LctParams, scale_map=None) -> DeltaFamily:
    return DeltaFamily("paper_example", A, "paper_example",
                       scale_map or (lambda n: float(n)), smooth=False)


def bump_family(A: LctParams, scale_map=None) -> DeltaFamily:
    return DeltaFamily("bump", A, "bump",
                       scale_map or (lambda n: float(n)), smooth=True)


def check_condition_i(delta: SampledSignal, A: LctParams,
                      tol: float = COND_I_TOL, n: int = 0) -> ConditionReport:
    """Trapezoidal value of the chirp-weighted mass integral and a pass flag."""
    _require_branch(A)
    t = delta.times()
    integrand = np.exp(0.5j * (A.a / A.b) * t * t) * delta.samples
    value = complex(np.sum(_trapezoid_weights(delta.n) * integrand) * delta.dt)
    return ConditionReport(n=n, condition_i_value=value, tolerance=tol,
                           passed_i=abs(value - 1.0) <= tol)


def tail_mass(delta: SampledSignal, eps: float) -> float:
    """Riemann mass of |delta| outside [-eps, eps] on the sample lattice."""
    t = delta.times()
    mask = np.abs(t) > eps
    return float(delta.dt * np.sum(np.abs(delta.samples[mask])))


def check_condition_ii(family: DeltaFamily, eps: float, n_list,
                       tol: float = COND_I_TOL) -> list[ConditionReport]:
    """Tail masses outside [-eps, eps] for each index.

    A member passes when its tail is below tolerance or its support already
    sits inside the window (then the tail is exactly zero).  Sequence-level
    acceptance additionally wants the masses non-increasing; see
    condition_ii_passes.
    """
    if eps <= 0:
        raise GridError(f"eps must be positive, got {eps}")
    reports = []
    for n in n_list:
        member = family.member(n)
        tm = tail_mass(member, eps)
        inside = family.support_bound(n) <= eps
        ci = check_condition_i(member, family.params, n=n)
        reports.append(ConditionReport(
            n=n, condition_i_value=ci.condition_i_value, tolerance=tol,
            passed_i=ci.passed_i, tail_mass=tm,
            passed_ii=inside or tm <= tol,
        ))
    return reports


def condition_ii_passes(reports: list[ConditionReport], tol: float = COND_I_TOL) -> bool:
    tails = [r.tail_mass for r in reports]
    non_increasing = all(tails[i + 1] <= tails[i] + 1e-15 for i in range(len(tails) - 1))
    return non_increasing and tails[-1] <= tol


def delta_convolve_closure(phi: DeltaFamily, psi: DeltaFamily, A: LctParams,
                           n: int, tol: float = COND_I_TOL_QUAD) -> ConditionReport:
    """Closure of the delta set under weighted convolution, checked at index n.

    Convolves the two members and re-runs the mass condition on the result;
    the tail is measured beyond the summed support bounds (exactly zero for
    honest compact supports).
    """
    step = min(phi.auto_step(n), psi.auto_step(n))
    pm = phi.member(n, step=step)
    qm = psi.member(n, step=step)
    conv = a_convolve(pm, qm, A)
    ci = check_condition_i(conv, A, tol=tol, n=n)
    bound = phi.support_bound(n) + psi.support_bound(n)
    tm = tail_mass(conv, bound)
    return ConditionReport(n=n, condition_i_value=ci.condition_i_value,
                           tolerance=tol, passed_i=ci.passed_i,
                           tail_mass=tm, passed_ii=tm <= tol)


def approx_identity_check(f: SampledSignal, family: DeltaFamily, A: LctParams,
                          n_list) -> list[float]:
    """L2 distances ||f *A delta_n - f|| on f's own grid, one per index.

    Members are regenerated at f's step so the convolution lattices match.
    With a fixed grid the sequence eventually plateaus at the quadrature
    floor instead of reaching zero.
    """
    errs = []
    for n in n_list:
        member = family.member(n, step=f.dt)
        conv = a_convolve(f, member, A)
        errs.append(l2_distance(restrict(conv, f.grid), f))
    return errs


def normalized_lct_of_delta(family: DeltaFamily, A: LctParams, compact: Grid,
                            n_list) -> list[float]:
    """Sup deviation of the normalized transformed member from 1 on a window.

    The transform of a delta member tends to the reciprocal normalization
    chirp, not to the constant 1; multiplying by sqrt(2*i*pi*b) *
    exp(-i*d*u^2/(2b)) recovers the constant-1 limit that the sup norm
    measures here.
    """
    _require_branch(A)
    u = compact.points()
    fac = np.sqrt(2j * np.pi * A.b) * np.exp(-1j * A.d * u * u / (2 * A.b))
    devs = []
    for n in n_list:
        F = lct_transform(family.member(n), A, compact)
        devs.append(float(np.max(np.abs(fac * F.samples - 1.0))))
    return devs


def spectral_closure(phi: DeltaFamily, psi: DeltaFamily, A: LctParams, n: int,
                     ugrid: Grid, tol: float = 1e-3) -> tuple[float, ConditionReport]:
    """Closure on the transform side at index n.

    The normalized product of the two transformed members must equal the
    transform of their weighted convolution (which itself stays a delta
    member).  Returns the relative L2 residual of that identity plus the
    closure report of the convolved member.
    """
    step = min(phi.auto_step(n), psi.auto_step(n))
    pm = phi.member(n, step=step)
    qm = psi.member(n, step=step)
    lhs = spectral_product(lct_transform(pm, A, ugrid), lct_transform(qm, A, ugrid), A)
    conv = a_convolve(pm, qm, A)
    rhs = lct_transform(conv, A, ugrid)
    denom = max(rhs.norm2(), 1e-300)
    residual = l2_distance(lhs, rhs) / denom
    return residual, delta_convolve_closure(phi, psi, A, n)
