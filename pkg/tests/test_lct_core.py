import math

import numpy as np
import pytest

from lctb.errors import (
    BranchError,
    DeterminantError,
    DomainError,
    GridError,
    NonFiniteError,
    TruncationWarning,
)
from lctb.lct_core import (
    Grid,
    SampledSignal,
    add_signals,
    from_grid,
    invert_params,
    l2_distance,
    lct_inverse,
    lct_transform,
    make_params,
    pad_signal,
    rel_l2_error,
    restrict,
    scale_signal,
    special_params,
)


class TestParams:
    def test_fourier_tuple_is_valid(self):
        A = make_params(0, 1, -1, 0)
        assert (A.a, A.b, A.c, A.d) == (0, 1, -1, 0)
        assert not A.b_is_zero

    def test_identity_tuple_is_valid(self):
        A = make_params(1, 0, 0, 1)
        assert A.b_is_zero

    def test_unit_determinant_enforced(self):
        with pytest.raises(DeterminantError):
            make_params(1, 1, 1, 1)

    def test_non_finite_rejected(self):
        with pytest.raises(NonFiniteError):
            make_params(math.nan, 1, -1, 0)
        with pytest.raises(NonFiniteError):
            make_params(0, math.inf, -1, 0)

    def test_inverse_parameters(self):
        assert invert_params(make_params(0, 1, -1, 0)) == make_params(0, -1, 1, 0)
        ident = make_params(1, 0, 0, 1)
        assert invert_params(ident) == ident
        A = make_params(2, 1, 3, 2)
        inv = invert_params(A)
        assert (inv.a, inv.b, inv.c, inv.d) == (2, -1, -3, 2)
        assert inv.a * inv.d - inv.b * inv.c == pytest.approx(1.0, abs=1e-15)

    def test_inverse_is_involutive(self, A1):
        assert invert_params(invert_params(A1)) == A1

    def test_special_params(self):
        assert special_params("fourier") == make_params(0, 1, -1, 0)
        assert special_params("frft", 0.0) == make_params(1, 0, 0, 1)
        A = special_params("frft", math.pi / 4)
        r = math.sqrt(2) / 2
        assert A.a == pytest.approx(r) and A.b == pytest.approx(r)
        assert A.c == pytest.approx(-r) and A.d == pytest.approx(r)
        with pytest.raises(ValueError):
            special_params("laplace")


class TestSignalAndGrid:
    def test_grid_validation(self):
        with pytest.raises(GridError):
            Grid(0.0, -1.0, 10)
        with pytest.raises(GridError):
            Grid(0.0, 1.0, 1)

    def test_signal_validation(self):
        with pytest.raises(NonFiniteError):
            SampledSignal(0.0, 0.1, np.array([1.0, math.nan]))
        with pytest.raises(GridError):
            SampledSignal(0.0, -0.1, np.array([1.0, 2.0]))
        with pytest.raises(GridError):
            SampledSignal(0.0, 0.1, np.array([1.0]))

    def test_samples_are_read_only(self):
        sig = SampledSignal(0.0, 0.1, np.arange(4, dtype=complex))
        with pytest.raises(ValueError):
            sig.samples[0] = 5.0

    def test_norms_are_riemann_sums(self):
        sig = SampledSignal(0.0, 0.5, np.array([1.0, -2.0, 2.0j]))
        assert sig.norm1() == pytest.approx(0.5 * 5.0)
        assert sig.norm2() == pytest.approx(math.sqrt(0.5 * 9.0))

    def test_lattice_alignment_helpers(self):
        x = SampledSignal(0.0, 0.25, np.ones(4, complex))
        y = SampledSignal(0.5, 0.25, 2 * np.ones(4, complex))
        s = add_signals(x, y)
        assert s.t0 == 0.0 and s.n == 6
        assert s.samples[0] == 1 and s.samples[2] == 3 and s.samples[-1] == 2
        off_lattice = SampledSignal(0.1, 0.25, np.ones(4, complex))
        with pytest.raises(GridError):
            add_signals(x, off_lattice)
        with pytest.raises(GridError):
            add_signals(x, SampledSignal(0.0, 0.5, np.ones(4, complex)))

    def test_restrict_and_pad(self):
        x = SampledSignal(0.0, 0.25, np.arange(8, dtype=complex))
        sub = restrict(x, Grid(0.5, 0.25, 3))
        assert np.array_equal(sub.samples, np.array([2, 3, 4], dtype=complex))
        wide = restrict(x, Grid(-0.5, 0.25, 12))
        assert wide.samples[0] == 0 and wide.samples[2] == 0 and wide.samples[3] == 1
        padded = pad_signal(x, 2)
        assert padded.n == 12 and padded.t0 == -0.5
        assert padded.samples[0] == 0 and padded.samples[2] == 0


class TestTransform:
    def test_fourier_of_gaussian_matches_analytic(self, signals, A_fourier):
        ug = Grid(-6.0, 1.0 / 64, 769)
        F = lct_transform(signals["gaussian"], A_fourier, ug)
        u = ug.points()
        exact = from_grid(ug, np.exp(-1j * np.pi / 4) * np.exp(-u * u / 2))
        assert rel_l2_error(F, exact) <= 1e-4

    def test_identity_params_resample(self, signals):
        sub = Grid(-4.0, 1.0 / 64, 513)
        out = lct_transform(signals["gaussian"], special_params("identity"), sub)
        assert l2_distance(out, restrict(signals["gaussian"], sub)) <= 1e-12

    def test_b_zero_scaling_branch(self, signals):
        # (2, 0, 0, 1/2) with c = 0 reads off as sqrt(1/2) * f(u/2)
        A = make_params(2.0, 0.0, 0.0, 0.5)
        sub = Grid(-4.0, 1.0 / 64, 513)
        out = lct_transform(signals["gaussian"], A, sub)
        f = signals["gaussian"]
        expected = from_grid(sub, math.sqrt(0.5)
                             * np.interp(0.5 * sub.points(), f.times(), f.samples.real))
        assert rel_l2_error(out, expected) <= 1e-12

    def test_b_zero_requires_positive_d(self):
        sig = SampledSignal(-1.0, 0.01, np.ones(201, complex))
        with pytest.raises(BranchError):
            lct_transform(sig, make_params(-2.0, 0.0, 0.0, -0.5), Grid(-0.5, 0.01, 11))

    def test_b_zero_domain_check(self, signals):
        with pytest.raises(DomainError):
            lct_transform(signals["gaussian"], special_params("identity"),
                          Grid(-20.0, 0.1, 401))

    def test_truncation_warning_on_non_decayed_signal(self, A1):
        sig = SampledSignal(-1.0, 0.01, np.ones(201, complex))
        with pytest.warns(TruncationWarning):
            lct_transform(sig, A1, Grid(-1.0, 0.05, 41))

    @pytest.mark.parametrize("name", ["gaussian", "chirped_gaussian", "windowed_sine"])
    def test_round_trip(self, signals, tgrid, ugrid_wide, name, A1):
        for A in (A1, special_params("fourier"), special_params("frft", math.pi / 4)):
            f = signals[name]
            back = lct_inverse(lct_transform(f, A, ugrid_wide), A, tgrid)
            assert rel_l2_error(back, f) <= 1e-4

    @pytest.mark.parametrize("name", ["gaussian", "chirped_gaussian", "windowed_sine"])
    def test_unitarity(self, signals, ugrid_wide, name, A1, A_neg):
        for A in (A1, A_neg, special_params("frft", math.pi / 4)):
            f = signals[name]
            F = lct_transform(f, A, ugrid_wide)
            assert abs(F.norm2() / f.norm2() - 1.0) <= 1e-3

    def test_linearity_is_exact(self, signals, A1):
        ug = Grid(-4.0, 1.0 / 32, 257)
        f, g = signals["gaussian"], signals["chirped_gaussian"]
        lam = 0.3 - 1.2j
        lhs = lct_transform(add_signals(f, scale_signal(lam, g)), A1, ug)
        rhs = add_signals(lct_transform(f, A1, ug),
                          scale_signal(lam, lct_transform(g, A1, ug)))
        assert rel_l2_error(lhs, rhs) <= 1e-12

    def test_branch_consistency_towards_b_zero(self):
        # A(eps) = (1, eps, 0, 1) approaches the identity resampling branch
        grid = Grid(-1.0, 1.0 / 2048, 4097)
        t = grid.points()
        x = t / 0.5
        vals = np.zeros_like(t)
        inside = np.abs(x) < 1
        vals[inside] = np.exp(-1.0 / (1 - x[inside] ** 2))
        f = from_grid(grid, vals.astype(complex))
        ug = Grid(-0.6, 1.0 / 128, 154)
        exact = lct_transform(f, special_params("identity"), ug)
        devs = [rel_l2_error(lct_transform(f, make_params(1.0, eps, 0.0, 1.0), ug),
                             exact)
                for eps in (1e-2, 1e-3)]
        assert devs[1] < devs[0]

    def test_inverse_equals_transform_with_inverse_params(self, signals, A1, ugrid_wide, tgrid):
        F = lct_transform(signals["gaussian"], A1, ugrid_wide)
        direct = lct_transform(F, invert_params(A1), tgrid)
        via_inverse = lct_inverse(F, A1, tgrid)
        assert l2_distance(direct, via_inverse) == 0.0
