import json
import os
import subprocess
import sys

import numpy as np
import pytest

from lctb import sigio
from lctb.lct_core import rel_l2_error

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "lctb.cli", *args],
                          capture_output=True, text=True)


def fixture(name):
    return os.path.join(FIXTURES, name)


class TestTransformCommand:
    def test_identity_params_reproduce_input(self, tmp_path):
        r = run_cli("transform", fixture("gaussian.csv"),
                    "--params", "1,0,0,1", "--out", str(tmp_path))
        assert r.returncode == 0
        out = sigio.read_signal_csv(tmp_path / "transform.csv")
        ref = sigio.read_signal_csv(fixture("gaussian.csv"))
        assert np.array_equal(out.samples, ref.samples)

    def test_fourier_matches_bundled_oracle(self, tmp_path):
        r = run_cli("transform", fixture("gaussian.csv"), "--params", "0,1,-1,0",
                    "--grid=-6:0.015625:769", "--out", str(tmp_path))
        assert r.returncode == 0
        out = sigio.read_signal_csv(tmp_path / "transform.csv")
        expected = sigio.read_signal_csv(fixture("gaussian_fourier_expected.csv"))
        assert rel_l2_error(out, expected) <= 1e-4

    def test_round_trip_through_inverse_flag(self, tmp_path):
        r1 = run_cli("transform", fixture("gaussian.csv"), "--params", "2,1,3,2",
                     "--grid=-24:0.03125:1536", "--out", str(tmp_path))
        assert r1.returncode == 0
        r2 = run_cli("transform", str(tmp_path / "transform.csv"), "--inverse",
                     "--params", "2,1,3,2", "--grid=-8:0.015625:1024",
                     "--out", str(tmp_path))
        assert r2.returncode == 0
        back = sigio.read_signal_csv(tmp_path / "inverse.csv")
        ref = sigio.read_signal_csv(fixture("gaussian.csv"))
        assert rel_l2_error(back, ref) <= 1e-4

    def test_outputs_are_bit_reproducible(self, tmp_path):
        a = tmp_path / "a"
        b = tmp_path / "b"
        for out in (a, b):
            r = run_cli("transform", fixture("gaussian.csv"), "--params", "2,1,3,2",
                        "--out", str(out))
            assert r.returncode == 0
        assert (a / "transform.csv").read_bytes() == (b / "transform.csv").read_bytes()

    def test_malformed_csv_exits_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("time,real\n0,1\n")
        r = run_cli("transform", str(bad), "--out", str(tmp_path))
        assert r.returncode == 2
        err = json.loads(r.stderr.strip().splitlines()[-1])
        assert err["exit_code"] == 2

    def test_non_equispaced_csv_exits_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("t,re,im\n0,1,0\n0.1,1,0\n0.25,1,0\n")
        assert run_cli("transform", str(bad), "--out", str(tmp_path)).returncode == 2

    def test_bad_params_exit_2(self, tmp_path):
        r = run_cli("transform", fixture("gaussian.csv"), "--params", "1,1,1,1",
                    "--out", str(tmp_path))
        assert r.returncode == 2

    def test_plot_writes_svg(self, tmp_path):
        r = run_cli("transform", fixture("gaussian.csv"), "--params", "0,1,-1,0",
                    "--plot", "--out", str(tmp_path))
        assert r.returncode == 0
        svg = (tmp_path / "transform.svg").read_text()
        assert svg.lstrip().startswith("<?xml")


class TestConvolveCommand:
    def test_box_box_gives_triangle(self, tmp_path):
        r = run_cli("convolve", fixture("box.csv"), fixture("box.csv"),
                    "--params", "0,1,-1,0", "--out", str(tmp_path))
        assert r.returncode == 0
        out = sigio.read_signal_csv(tmp_path / "convolve.csv")
        expected = sigio.read_signal_csv(fixture("triangle_expected.csv"))
        assert rel_l2_error(out, expected) <= 2e-2

    def test_zero_input_gives_zero_output(self, tmp_path):
        zero = tmp_path / "zero.csv"
        sig = sigio.read_signal_csv(fixture("box.csv"))
        sigio.write_signal_csv(
            type(sig)(sig.t0, sig.dt, np.zeros(sig.n, complex)), str(zero))
        r = run_cli("convolve", str(zero), fixture("box.csv"),
                    "--params", "0,1,-1,0", "--out", str(tmp_path))
        assert r.returncode == 0
        out = sigio.read_signal_csv(tmp_path / "convolve.csv")
        assert out.norm2() == 0.0

    def test_mismatched_steps_exit_2(self, tmp_path):
        other = tmp_path / "other.csv"
        other.write_text("t,re,im\n0,1,0\n0.013,1,0\n0.026,1,0\n")
        r = run_cli("convolve", fixture("box.csv"), str(other),
                    "--params", "0,1,-1,0", "--out", str(tmp_path))
        assert r.returncode == 2


class TestDeltaCommand:
    def test_triangular_sidecar_reports_unit_mass(self, tmp_path):
        r = run_cli("delta", "triangular", "8", "--out", str(tmp_path))
        assert r.returncode == 0
        side = json.loads((tmp_path / "delta_triangular_8.json").read_text())
        assert side["condition_i"]["value_re"] == pytest.approx(1.0, abs=1e-6)
        assert side["condition_i"]["passed"] is True

    def test_literal_example_flagged(self, tmp_path):
        r = run_cli("delta", "paper_example", "2", "--out", str(tmp_path))
        assert r.returncode == 0
        side = json.loads((tmp_path / "delta_paper_example_2.json").read_text())
        assert side["condition_i"]["value_re"] == pytest.approx(0.625, abs=1e-6)
        assert side["condition_i"]["passed"] is False

    def test_zero_index_exits_2(self, tmp_path):
        assert run_cli("delta", "triangular", "0", "--out", str(tmp_path)).returncode == 2

    def test_unknown_family_exits_2(self, tmp_path):
        assert run_cli("delta", "sinc", "4", "--out", str(tmp_path)).returncode == 2


class TestVerifyCommand:
    def test_single_claim_report_file(self, tmp_path):
        r = run_cli("verify", "thm-3.14-c", "--out", str(tmp_path))
        assert r.returncode == 0
        reports = json.loads((tmp_path / "reports.json").read_text())
        assert len(reports) == 1
        assert reports[0]["claim_id"] == "thm-3.14-c"
        assert reports[0]["passed"] is True
        assert "runtime_ms" not in reports[0]

    def test_unknown_claim_exits_2(self, tmp_path):
        assert run_cli("verify", "thm-9.9-z", "--out", str(tmp_path)).returncode == 2

    def test_deferred_claim_reports_gated_false(self, tmp_path):
        r = run_cli("verify", "thm-3.14-d", "--out", str(tmp_path))
        assert r.returncode == 0
        reports = json.loads((tmp_path / "reports.json").read_text())
        assert reports[0]["gated"] is False


class TestBoehmCommand:
    def test_embed_writes_numerators_and_summary(self, tmp_path):
        r = run_cli("boehm", "embed", "--input", fixture("gaussian.csv"),
                    "--params", "2,1,3,2", "--out", str(tmp_path))
        assert r.returncode == 0
        for i in range(1, 5):
            assert (tmp_path / f"boehm_numerator_{i}.csv").exists()
        summary = json.loads((tmp_path / "boehm_embed.json").read_text())
        assert summary["depth"] == 4
        assert summary["compat_residual"] <= 1e-4
        assert summary["passed"] is True

    def test_lct_of_zero_quotient_gives_zero_files(self, tmp_path):
        zero = tmp_path / "zero.csv"
        ref = sigio.read_signal_csv(fixture("gaussian.csv"))
        sigio.write_signal_csv(
            type(ref)(ref.t0, ref.dt, np.zeros(ref.n, complex)), str(zero))
        r = run_cli("boehm", "lct", "--input", str(zero),
                    "--params", "2,1,3,2", "--out", str(tmp_path))
        assert r.returncode == 0
        for i in range(1, 5):
            out = sigio.read_signal_csv(tmp_path / f"boehm_lct_numerator_{i}.csv")
            assert out.norm2() == 0.0

    def test_derive_with_triangular_k2_exits_2(self, tmp_path):
        r = run_cli("boehm", "derive", "--input", fixture("gaussian.csv"),
                    "--params", "2,1,3,2", "--k", "2", "--out", str(tmp_path))
        assert r.returncode == 2
        err = json.loads(r.stderr.strip().splitlines()[-1])
        assert err["error"] == "SmoothnessError"

    def test_converge_reports_decreasing_residuals(self, tmp_path):
        r = run_cli("boehm", "converge", "--input", fixture("gaussian.csv"),
                    "--params", "2,1,3,2", "--out", str(tmp_path))
        assert r.returncode == 0
        summary = json.loads((tmp_path / "boehm_converge.json").read_text())
        assert summary["delta_convergence_decreasing"] is True


class TestConfig:
    def test_config_file_drives_params(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "params": [0, 1, -1, 0],
            "ugrid": {"start": -6.0, "step": 0.015625, "count": 769},
            "out": str(tmp_path),
        }))
        r = run_cli("transform", fixture("gaussian.csv"), "--config", str(cfg))
        assert r.returncode == 0
        out = sigio.read_signal_csv(tmp_path / "transform.csv")
        expected = sigio.read_signal_csv(fixture("gaussian_fourier_expected.csv"))
        assert rel_l2_error(out, expected) <= 1e-4

    def test_invalid_config_exits_2(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"family": "unknown-family"}))
        r = run_cli("transform", fixture("gaussian.csv"), "--config", str(cfg),
                    "--out", str(tmp_path))
        assert r.returncode == 2

    def test_cli_flags_override_config(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"params": [2, 1, 3, 2]}))
        r = run_cli("transform", fixture("gaussian.csv"), "--config", str(cfg),
                    "--params", "1,0,0,1", "--out", str(tmp_path))
        assert r.returncode == 0
        out = sigio.read_signal_csv(tmp_path / "transform.csv")
        ref = sigio.read_signal_csv(fixture("gaussian.csv"))
        assert np.array_equal(out.samples, ref.samples)
