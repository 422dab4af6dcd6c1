"""Signal/report serialization and run configuration for the CLI.

Signals travel as CSV with header ``t,re,im``, one row per grid point,
serialized with 17 significant digits so parse/print round-trips are exact.
Reports and configuration use JSON.  Plots are written as SVG so no display
is needed.
"""

import csv
import json
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .delta_seq import bump_family, paper_example_family, triangular_family
from .errors import GridError
from .lct_core import Grid, LctParams, SampledSignal, make_params

STEP_REL_TOL = 1e-9  # relative equispacing tolerance for parsed time columns

FAMILY_BUILDERS = {
    "triangular": triangular_family,
    "paper_example": paper_example_family,
    "bump": bump_family,
}


def write_signal_csv(sig: SampledSignal, path: str):
    t = sig.times()
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "re", "im"])
        for i in range(sig.n):
            writer.writerow([f"{t[i]:.17g}",
                             f"{sig.samples[i].real:.17g}",
                             f"{sig.samples[i].imag:.17g}"])


def read_signal_csv(path: str) -> SampledSignal:
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise GridError(f"cannot read signal file {path!r}: {exc}") from exc
    if not rows or [c.strip() for c in rows[0]] != ["t", "re", "im"]:
        raise GridError(f"{path!r}: expected header 't,re,im'")
    body = [r for r in rows[1:] if r]
    if len(body) < 2:
        raise GridError(f"{path!r}: need at least 2 data rows")
    try:
        data = np.array([[float(v) for v in row] for row in body], dtype=float)
    except (ValueError, IndexError) as exc:
        raise GridError(f"{path!r}: malformed row: {exc}") from exc
    if data.shape[1] != 3:
        raise GridError(f"{path!r}: rows must have exactly 3 columns")
    if not np.all(np.isfinite(data)):
        # bad input file, not a numerical failure: report as a parse error
        raise GridError(f"{path!r}: non-finite values")
    t = data[:, 0]
    steps = np.diff(t)
    dt = (t[-1] - t[0]) / (len(t) - 1)
    if dt <= 0:
        raise GridError(f"{path!r}: time column must increase")
    if np.max(np.abs(steps - dt)) > STEP_REL_TOL * abs(dt):
        raise GridError(f"{path!r}: time column is not equispaced "
                        f"(worst step deviation {np.max(np.abs(steps - dt)):.3e})")
    return SampledSignal(float(t[0]), float(dt), data[:, 1] + 1j * data[:, 2])


def _grid_from_json(obj, label: str) -> Grid:
    try:
        return Grid(float(obj["start"]), float(obj["step"]), int(obj["count"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise GridError(f"bad {label} grid spec {obj!r}: {exc}") from exc


def parse_grid_spec(text: str) -> Grid:
    """Parse 'start:step:count' command-line grid syntax."""
    parts = text.split(":")
    if len(parts) != 3:
        raise GridError(f"grid spec {text!r} must be start:step:count")
    try:
        return Grid(float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise GridError(f"bad grid spec {text!r}: {exc}") from exc


def parse_params_spec(text: str) -> LctParams:
    """Parse 'a,b,c,d' command-line parameter syntax."""
    parts = text.split(",")
    if len(parts) != 4:
        raise GridError(f"params spec {text!r} must be a,b,c,d")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise GridError(f"bad params spec {text!r}: {exc}") from exc
    return make_params(*vals)


DEFAULT_TOLERANCES = {
    "embed": 1e-4,
    "spectral": 1e-3,
    "condition_i": 1e-6,
}


@dataclass
class RunConfig:
    """Validated run settings shared by the CLI commands."""

    params: LctParams = field(default_factory=lambda: make_params(2.0, 1.0, 3.0, 2.0))
    tgrid: Grid | None = None
    ugrid: Grid | None = None
    family: str = "triangular"
    depth: int = 4
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    outdir: str = "lctb-out"

    def __post_init__(self):
        if self.family not in FAMILY_BUILDERS:
            raise GridError(f"unknown family {self.family!r}; "
                            f"choose from {sorted(FAMILY_BUILDERS)}")
        if self.depth < 2:
            raise GridError(f"depth must be >= 2, got {self.depth}")
        for key, val in self.tolerances.items():
            if not (isinstance(val, (int, float)) and math.isfinite(val) and val > 0):
                raise GridError(f"tolerance {key!r} must be a positive number")

    def build_family(self):
        return FAMILY_BUILDERS[self.family](self.params)


def load_config(path: str | None) -> RunConfig:
    if path is None:
        return RunConfig()
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise GridError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GridError(f"config {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise GridError(f"config {path!r} must hold a JSON object")
    kwargs = {}
    if "params" in raw:
        vals = raw["params"]
        if not (isinstance(vals, list) and len(vals) == 4):
            raise GridError("config 'params' must be a 4-element list")
        kwargs["params"] = make_params(*[float(v) for v in vals])
    for key in ("tgrid", "ugrid"):
        if key in raw and raw[key] is not None:
            kwargs[key] = _grid_from_json(raw[key], key)
    for key in ("family", "depth"):
        if key in raw:
            kwargs[key] = raw[key]
    if "out" in raw:
        kwargs["outdir"] = raw["out"]
    if "tolerances" in raw:
        tols = dict(DEFAULT_TOLERANCES)
        tols.update(raw["tolerances"])
        kwargs["tolerances"] = tols
    return RunConfig(**kwargs)


def report_to_dict(report) -> dict:
    """JSON-ready view of a VerificationReport.

    runtime_ms is intentionally omitted so report files are bit-reproducible
    across runs; timing appears on the human-readable table instead.
    """
    return {
        "claim_id": report.claim_id,
        "inputs": report.inputs,
        "lhs_norm": report.lhs_norm,
        "rhs_norm": report.rhs_norm,
        "residual": report.residual,
        "tolerance": report.tolerance,
        "passed": report.passed,
        "gated": report.gated,
        "cases": [
            {"name": c.name, "residual": c.residual, "tolerance": c.tolerance,
             "passed": c.passed}
            for c in report.cases
        ],
    }


def write_json(obj, path: str):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def ensure_outdir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path


def plot_signal_svg(sig: SampledSignal, path: str, title: str = ""):
    """Two-panel magnitude/phase SVG of a signal; no display required."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    t = sig.times()
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
    ax1.plot(t, np.abs(sig.samples))
    ax1.set_ylabel("|value|")
    if title:
        ax1.set_title(title)
    ax2.plot(t, np.angle(sig.samples))
    ax2.set_ylabel("arg(value)")
    ax2.set_xlabel("grid")
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
