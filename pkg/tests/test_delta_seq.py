import numpy as np
import pytest

from lctb.conv_algebra import a_convolve
from lctb.delta_seq import (
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
from lctb.errors import BranchError, GridError
from lctb.lct_core import Grid, from_grid, lct_transform, special_params


class TestTriangular:
    def test_endpoints_vanish(self, A1):
        n = 4
        grid = Grid(0.0, 1.0 / 128, 65)
        member = triangular_delta(n, A1, grid)
        t = member.times()
        assert member.samples[np.argmin(np.abs(t))] == 0
        assert member.samples[np.argmin(np.abs(t - 2.0 / n))] == 0

    def test_peak_modulus_is_n(self, A1):
        n = 8
        fam = triangular_family(A1)
        member = fam.member(n)
        t = member.times()
        k = np.argmin(np.abs(t - 1.0 / n))
        assert abs(member.samples[k]) == pytest.approx(n, rel=1e-12)

    @pytest.mark.parametrize("n", [4, 8, 16, 64])
    def test_unit_mass(self, A1, n):
        rep = check_condition_i(triangular_family(A1).member(n), A1, n=n)
        assert abs(rep.condition_i_value - 1.0) <= 1e-8
        assert rep.passed_i

    def test_support_bound_shrinks(self, A1):
        fam = triangular_family(A1)
        bounds = [fam.support_bound(n) for n in (1, 2, 4, 8)]
        assert bounds == [2.0, 1.0, 0.5, 0.25]

    def test_b_zero_rejected(self):
        fam = triangular_family(special_params("identity"))
        with pytest.raises(BranchError):
            fam.member(4)

    def test_explicit_grid_must_cover_support(self, A1):
        with pytest.raises(GridError):
            triangular_delta(4, A1, Grid(0.0, 1.0 / 64, 9))


class TestPaperExample:
    def test_literal_mass_matches_symbolic_value(self, A1):
        # first branch lacks the n^2 factor, so the mass is 1/2 + 1/(2 n^2)
        for n in (2, 4, 8):
            rep = check_condition_i(paper_example_family(A1).member(n), A1, n=n)
            assert abs(rep.condition_i_value - (0.5 + 0.5 / n ** 2)) <= 1e-6
            assert not rep.passed_i

    def test_n2_value_explicitly(self, A1):
        rep = check_condition_i(paper_example_family(A1).member(2), A1, n=2)
        assert rep.condition_i_value.real == pytest.approx(0.625, abs=1e-6)

    def test_explicit_grid_constructor(self, A1):
        grid = Grid(0.0, 1.0 / 256, 300)
        member = paper_example_delta(2, A1, grid)
        assert abs(member.samples[0]) == 0.0


class TestConditions:
    def test_zero_signal_fails_condition_i(self, A1):
        zero = from_grid(Grid(0.0, 0.01, 101), np.zeros(101, complex))
        rep = check_condition_i(zero, A1)
        assert rep.condition_i_value == 0
        assert not rep.passed_i

    def test_tails_inside_window_are_exactly_zero(self, A1):
        fam = triangular_family(A1)
        reports = check_condition_ii(fam, 0.5, (4,))
        assert reports[0].tail_mass == 0.0
        assert reports[0].passed_ii

    def test_tail_sequence_decreases_then_vanishes(self, A1):
        fam = triangular_family(A1)
        reports = check_condition_ii(fam, 0.1, (2, 4, 8, 32))
        tails = [r.tail_mass for r in reports]
        assert tails[0] > tails[1] > tails[2] > tails[3] == 0.0
        assert condition_ii_passes(reports)

    def test_constant_support_family_fails(self, A1):
        fixed = triangular_family(A1, scale_map=lambda n: 2.0)
        reports = check_condition_ii(fixed, 0.1, (2, 4, 8))
        assert not condition_ii_passes(reports)


class TestClosure:
    @pytest.mark.parametrize("n", [4, 8, 16])
    def test_convolved_members_keep_unit_mass(self, A1, n):
        rep = delta_convolve_closure(triangular_family(A1), triangular_family(A1),
                                     A1, n)
        assert abs(rep.condition_i_value - 1.0) <= 1e-4

    def test_support_of_convolution_adds(self, A1):
        n = 8
        fam = triangular_family(A1)
        conv = a_convolve(fam.member(n), fam.member(n), A1)
        # support inside [0, 4/n] up to the zero padding cells
        nz = np.nonzero(np.abs(conv.samples) > 1e-14)[0]
        t = conv.times()
        assert t[nz[0]] >= -1e-9
        assert t[nz[-1]] <= 4.0 / n + 1e-9

    def test_tail_beyond_quarter_vanishes_for_n32(self, A1):
        fam = triangular_family(A1)
        conv = a_convolve(fam.member(32), fam.member(32), A1)
        assert tail_mass(conv, 0.25) == 0.0


class TestApproxIdentity:
    def test_errors_decrease_for_every_battery_signal(self, signals, A1):
        fam = triangular_family(A1)
        for name, f in signals.items():
            errs = approx_identity_check(f, fam, A1, (4, 16, 64))
            assert errs[0] > errs[1] > errs[2], name

    def test_zero_signal_gives_zeros(self, signals, A1):
        zero = from_grid(signals["gaussian"].grid,
                         np.zeros(signals["gaussian"].n, complex))
        assert max(approx_identity_check(zero, triangular_family(A1), A1, (4, 16))) == 0.0

    def test_coarse_grid_floor_is_documented_behavior(self, A1):
        # on a fixed coarse grid the members degenerate once the support is
        # sub-cell, and the error stops improving instead of reaching zero
        grid = Grid(-8.0, 1.0 / 16, 256)
        t = grid.points()
        f = from_grid(grid, np.exp(-t * t / 2).astype(complex))
        errs = approx_identity_check(f, triangular_family(A1), A1, (4, 8, 16, 64))
        assert errs[0] > errs[1] > errs[2]
        assert errs[3] >= errs[2]


class TestSpectralLimit:
    def test_normalized_sup_deviation_decreases(self, A1):
        compact = Grid(-2.0, 1.0 / 64, 257)
        devs = normalized_lct_of_delta(triangular_family(A1), A1, compact, (4, 16, 64))
        assert devs[0] > devs[1] > devs[2]

    def test_point_mass_like_member_has_small_deviation(self, A1):
        compact = Grid(-2.0, 1.0 / 64, 257)
        devs = normalized_lct_of_delta(bump_family(A1), A1, compact, (256,))
        assert devs[0] <= 1e-2

    def test_unnormalized_limit_is_not_one(self, A1):
        # |transform of a member at 0| approaches 1/sqrt(2 pi |b|), not 1
        compact = Grid(-2.0, 1.0 / 64, 257)
        F = lct_transform(triangular_family(A1).member(32), A1, compact)
        mid = abs(F.samples[compact.count // 2])
        assert mid == pytest.approx(1.0 / np.sqrt(2 * np.pi * abs(A1.b)), abs=1e-3)
        assert abs(mid - 1.0) > 0.25

    def test_spectral_closure_identity(self, A1):
        ug = Grid(-4.0, 1.0 / 32, 257)
        residual, rep = spectral_closure(triangular_family(A1),
                                         triangular_family(A1), A1, 8, ug)
        assert residual <= 1e-3
        assert abs(rep.condition_i_value - 1.0) <= 1e-4


class TestBumpFamily:
    def test_discrete_mass_is_exactly_one(self, A1):
        fam = bump_family(A1)
        for n in (3, 8, 17):
            rep = check_condition_i(fam.member(n), A1, n=n)
            assert abs(rep.condition_i_value - 1.0) <= 1e-12

    def test_family_is_marked_smooth(self, A1):
        assert bump_family(A1).smooth
        assert not triangular_family(A1).smooth
        assert not paper_example_family(A1).smooth

    def test_member_grid_is_symmetric(self, A1):
        member = bump_family(A1).member(8)
        assert member.t0 == pytest.approx(-member.t_end)

    def test_scale_map_must_be_positive(self, A1):
        fam = bump_family(A1, scale_map=lambda n: -1.0)
        with pytest.raises(GridError):
            fam.member(1)
