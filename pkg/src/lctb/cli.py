"""Command-line front end.

Subcommands: transform, convolve, delta, verify, boehm.  Signals move as
``t,re,im`` CSV files; reports and summaries as JSON; optional plots as SVG.
Exit codes: 0 success, 1 verification failure, 2 input/config error,
3 numerical error.  Errors additionally emit one machine-readable JSON line
on standard error.  LCTB_THREADS caps the parallelism of ``verify``.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import sigio
from .boehmian import (
    boehm_derivative,
    boehm_lct,
    boehm_lct_limit,
    delta_convergence_diag,
    embed,
    small_delta_convergence_diag,
)
from .conv_algebra import a_convolve
from .delta_seq import check_condition_i, tail_mass
from .errors import LctbError, NonFiniteError, ToleranceError
from .lct_core import (
    Grid,
    add_signals,
    from_grid,
    lct_inverse,
    lct_transform,
    scale_signal,
)
from .verify_harness import CLAIM_CHECKS, CLAIM_IDS, TestBattery, run_all

DEFAULT_UGRID = Grid(-4.0, 1.0 / 32, 257)


def _exit_code_for(exc: Exception) -> int:
    if isinstance(exc, (NonFiniteError, ToleranceError)):
        return 3
    return 2


def _emit_error(exc: Exception, code: int):
    line = json.dumps({"error": type(exc).__name__, "message": str(exc),
                       "exit_code": code})
    print(line, file=sys.stderr)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="lctb", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON run configuration")
        p.add_argument("--params", help="transform parameters 'a,b,c,d'")
        p.add_argument("--grid", help="output grid 'start:step:count'")
        p.add_argument("--out", help="output directory (default lctb-out)")
        p.add_argument("--plot", action="store_true", help="also write an SVG plot")

    p = sub.add_parser("transform", help="transform a signal CSV")
    p.add_argument("input", help="input signal CSV")
    p.add_argument("--inverse", action="store_true",
                   help="apply the inverse transform")
    common(p)

    p = sub.add_parser("convolve", help="weighted convolution of two signal CSVs")
    p.add_argument("f", help="first signal CSV")
    p.add_argument("g", help="second signal CSV")
    common(p)

    p = sub.add_parser("delta", help="emit a delta-sequence member and its checks")
    p.add_argument("family", help="family name (triangular, paper_example, bump)")
    p.add_argument("n", type=int, help="member index (>= 1)")
    common(p)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("claim", help="claim id or 'all'")
    common(p)

    p = sub.add_parser("boehm", help="quotient-representation operations")
    p.add_argument("action", choices=("embed", "lct", "converge", "derive"))
    p.add_argument("--input", required=True, help="input signal CSV")
    p.add_argument("--k", type=int, default=1, help="derivative order for derive")
    p.add_argument("--depth", type=int, help="truncation depth override")
    common(p)
    return top


def _load(args) -> sigio.RunConfig:
    cfg = sigio.load_config(args.config)
    if args.params:
        cfg.params = sigio.parse_params_spec(args.params)
    if args.grid:
        cfg.ugrid = sigio.parse_grid_spec(args.grid)
    if args.out:
        cfg.outdir = args.out
    return cfg


def _cmd_transform(args) -> int:
    cfg = _load(args)
    sig = sigio.read_signal_csv(args.input)
    ugrid = cfg.ugrid or sig.grid
    if args.inverse:
        out = lct_inverse(sig, cfg.params, ugrid)
        name = "inverse"
    else:
        out = lct_transform(sig, cfg.params, ugrid)
        name = "transform"
    outdir = sigio.ensure_outdir(cfg.outdir)
    path = os.path.join(outdir, f"{name}.csv")
    sigio.write_signal_csv(out, path)
    print(path)
    if args.plot:
        svg = os.path.join(outdir, f"{name}.svg")
        sigio.plot_signal_svg(out, svg, title=name)
        print(svg)
    return 0


def _cmd_convolve(args) -> int:
    cfg = _load(args)
    f = sigio.read_signal_csv(args.f)
    g = sigio.read_signal_csv(args.g)
    out = a_convolve(f, g, cfg.params)
    outdir = sigio.ensure_outdir(cfg.outdir)
    path = os.path.join(outdir, "convolve.csv")
    sigio.write_signal_csv(out, path)
    print(path)
    if args.plot:
        svg = os.path.join(outdir, "convolve.svg")
        sigio.plot_signal_svg(out, svg, title="weighted convolution")
        print(svg)
    return 0


def _cmd_delta(args) -> int:
    cfg = _load(args)
    if args.family not in sigio.FAMILY_BUILDERS:
        raise LctbError(f"unknown family {args.family!r}")
    family = sigio.FAMILY_BUILDERS[args.family](cfg.params)
    step = cfg.ugrid.step if cfg.ugrid else None
    member = family.member(args.n, step=step)
    tol = cfg.tolerances.get("condition_i", 1e-6)
    report = check_condition_i(member, cfg.params, tol=tol, n=args.n)
    eps = 0.1
    sidecar = {
        "family": args.family,
        "n": args.n,
        "support_bound": family.support_bound(args.n),
        "condition_i": {
            "value_re": report.condition_i_value.real,
            "value_im": report.condition_i_value.imag,
            "tolerance": tol,
            "passed": report.passed_i,
        },
        "tail": {
            "eps": eps,
            "mass": tail_mass(member, eps),
        },
    }
    outdir = sigio.ensure_outdir(cfg.outdir)
    stem = f"delta_{args.family}_{args.n}"
    path = os.path.join(outdir, stem + ".csv")
    sigio.write_signal_csv(member, path)
    sigio.write_json(sidecar, os.path.join(outdir, stem + ".json"))
    print(path)
    print(os.path.join(outdir, stem + ".json"))
    if args.plot:
        svg = os.path.join(outdir, stem + ".svg")
        sigio.plot_signal_svg(member, svg, title=stem)
        print(svg)
    return 0


def _cmd_verify(args) -> int:
    cfg = _load(args)
    if args.claim != "all" and args.claim not in CLAIM_CHECKS:
        raise LctbError(f"unknown claim id {args.claim!r}; "
                        f"known ids: {', '.join(CLAIM_IDS)}")
    claims = None if args.claim == "all" else [args.claim]
    reports = run_all(TestBattery.default(), claims=claims)
    outdir = sigio.ensure_outdir(cfg.outdir)
    path = os.path.join(outdir, "reports.json")
    sigio.write_json([sigio.report_to_dict(r) for r in reports], path)
    width = max(len(r.claim_id) for r in reports)
    print(f"{'claim':{width}s}  status  gated  residual   tolerance  runtime")
    for r in reports:
        print(f"{r.claim_id:{width}s}  {'PASS' if r.passed else 'FAIL':6s}"
              f"  {'yes' if r.gated else 'no':5s}"
              f"  {r.residual:9.3e}  {r.tolerance:9.1e}  {r.runtime_ms:7.0f}ms")
    print(path)
    gated_fail = [r for r in reports if r.gated and not r.passed]
    return 1 if gated_fail else 0


def _cmd_boehm(args) -> int:
    cfg = _load(args)
    if args.depth:
        cfg.depth = args.depth
    f = sigio.read_signal_csv(args.input)
    family = cfg.build_family()
    outdir = sigio.ensure_outdir(cfg.outdir)
    tol = cfg.tolerances.get("embed", 1e-4)

    if args.action == "embed":
        rep = embed(f, family, depth=cfg.depth, tol=tol)
        for i, num in enumerate(rep.numerators, start=1):
            sigio.write_signal_csv(num, os.path.join(outdir, f"boehm_numerator_{i}.csv"))
        for i, den in enumerate(rep.denominators, start=1):
            sigio.write_signal_csv(den, os.path.join(outdir, f"boehm_denominator_{i}.csv"))
        summary = {"depth": rep.depth, "family": cfg.family,
                   "compat_residual": rep.compat_residual,
                   "tolerance": tol, "passed": rep.compat_residual <= tol}
        path = os.path.join(outdir, "boehm_embed.json")
        sigio.write_json(summary, path)
        print(path)
        return 0

    if args.action == "lct":
        rep = embed(f, family, depth=cfg.depth, tol=tol)
        ugrid = cfg.ugrid or DEFAULT_UGRID
        spec = boehm_lct(rep, ugrid, tol=cfg.tolerances.get("spectral", 1e-3))
        for i, num in enumerate(spec.numerators, start=1):
            sigio.write_signal_csv(num, os.path.join(outdir, f"boehm_lct_numerator_{i}.csv"))
        for i, den in enumerate(spec.denominators, start=1):
            sigio.write_signal_csv(den, os.path.join(outdir, f"boehm_lct_denominator_{i}.csv"))
        limit = boehm_lct_limit(rep, ugrid)
        sigio.write_signal_csv(limit.signal, os.path.join(outdir, "boehm_lct_limit.csv"))
        summary = {"depth": spec.depth, "family": cfg.family,
                   "cross_residual": spec.cross_residual,
                   "cauchy_diffs": list(limit.cauchy_diffs)}
        path = os.path.join(outdir, "boehm_lct.json")
        sigio.write_json(summary, path)
        print(path)
        return 0

    if args.action == "converge":
        rep = embed(f, family, depth=cfg.depth, tol=tol)
        t = f.times()
        pert = from_grid(f.grid, np.exp(1j * t) * f.samples)
        seq = [embed(add_signals(f, scale_signal(2.0 ** -j, pert)),
                     family, depth=cfg.depth, tol=tol)
               for j in range(1, cfg.depth + 1)]
        diag = delta_convergence_diag(seq, rep)
        matrix = small_delta_convergence_diag(seq, rep)
        limit = boehm_lct_limit(rep, cfg.ugrid or DEFAULT_UGRID)
        decreasing = all(b < a for a, b in zip(diag, diag[1:]))
        summary = {
            "depth": cfg.depth,
            "delta_convergence_residuals": list(diag),
            "delta_convergence_decreasing": decreasing,
            "small_delta_matrix": [list(row) for row in matrix],
            "cauchy_diffs": list(limit.cauchy_diffs),
        }
        path = os.path.join(outdir, "boehm_converge.json")
        sigio.write_json(summary, path)
        print(path)
        return 0

    # derive
    rep = embed(f, family, depth=cfg.depth, tol=tol)
    deriv = boehm_derivative(rep, args.k, family)
    for i, num in enumerate(deriv.numerators, start=1):
        sigio.write_signal_csv(num, os.path.join(outdir, f"boehm_derivative_{i}.csv"))
    summary = {"depth": deriv.depth, "order": args.k, "family": cfg.family,
               "compat_residual": deriv.compat_residual}
    path = os.path.join(outdir, "boehm_derive.json")
    sigio.write_json(summary, path)
    print(path)
    return 0


_COMMANDS = {
    "transform": _cmd_transform,
    "convolve": _cmd_convolve,
    "delta": _cmd_delta,
    "verify": _cmd_verify,
    "boehm": _cmd_boehm,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except LctbError as exc:
        code = _exit_code_for(exc)
        _emit_error(exc, code)
        return code
    except (ValueError, OSError) as exc:
        _emit_error(exc, 2)
        return 2
    except FloatingPointError as exc:
        _emit_error(exc, 3)
        return 3


if __name__ == "__main__":
    sys.exit(main())
