"""Certify transient growth of e^{Mt} and M^n from invariant subspaces.

    nonnormal analyze  FILE [--mode exp|pow]
    nonnormal numrange FILE
    nonnormal sweep    FILE --mode exp|pow|pow-continuous
    nonnormal demo     [--theta R]

Output files go to --output-dir, else $NONNORMAL_OUTPUT_DIR, else the
current directory. Exit codes: 0 success, 2 input or domain error,
3 numerical convergence failure.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import document
from .config import AnalysisConfig
from .document import MatrixDocument
from .errors import ConvergenceError, DomainError, RangeError
from .linalg import frobenius_norm
from .numrange import ellipse_2x2, matrix_from_angle, nr_boundary_sample
from .oracle import (
    confirm_exp,
    confirm_pow,
    derivative_at_zero,
    exp_horizon,
    pow_horizon,
    rayleigh_samples,
    sweep_exp,
    sweep_pow,
    sweep_pow_continuous,
)
from .transient import Mode, scan

OUTPUT_ENV = "NONNORMAL_OUTPUT_DIR"
EXIT_OK, EXIT_INPUT, EXIT_CONVERGENCE = 0, 2, 3

FIG1_LAMBDA1 = -0.1 + 0.9j
FIG1_LAMBDA2 = -0.4 - 0.5j
FIG1_THETA = 2 * math.pi / 7


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def analyze_matrix(a: np.ndarray, config: AnalysisConfig, mode: Mode | None = None, name: str = "matrix") -> dict:
    """Scan, then referee every certified mode with a direct norm sweep."""
    report = scan(
        a,
        mode=mode,
        cluster_tol=config.cluster_tol * frobenius_norm(a),
        rank_tol=config.rank_tol,
        invariance_tol=config.invariance_tol,
    )
    oracle = {}
    modes = report.certified_modes()
    if Mode.EXP in modes:
        c = confirm_exp(a, config.t_max, config.steps, config.oracle_threshold)
        oracle["exp"] = {"method": c.method, "peak_t": c.peak_parameter, "peak_norm": c.peak_norm, "confirmed": c.confirmed}
    if Mode.POW in modes:
        c = confirm_pow(a, config.s_max, config.steps, config.n_max, config.oracle_threshold)
        oracle["pow"] = {
            "method": c.method,
            "peak_s": c.peak_parameter,
            "peak_norm": c.peak_norm,
            "confirmed": c.confirmed,
            "integer_peak_norm": c.integer_peak_norm,
            "integer_gap": c.integer_gap,
        }
    samples = rayleigh_samples(a, 10_000, config.seed)
    return {
        "name": name,
        "size": int(a.shape[0]),
        "eigenpairs": [
            {"value": _pair(p.value), "chain_length": p.chain_length, "vector": [_pair(x) for x in p.vector]}
            for p in report.eigenpairs
        ],
        "stable_exp": report.stable_exp,
        "stable_pow": report.stable_pow,
        "omega_full": report.omega_full,
        "derivative_at_zero": derivative_at_zero(a, config.derivative_h),
        "rayleigh_max_re": float(np.max(samples.real)),
        "certificates": [
            {
                "kind": c.kind.value,
                "eig_indices": list(c.eig_indices),
                "theta": c.theta,
                "threshold": c.threshold,
                "omega_restricted": c.omega_restricted,
                "verdict": c.verdict,
                "invariance_defect": c.invariance_defect,
                "oracle_confirmed": oracle.get(c.mode.value, {}).get("confirmed") if c.verdict else None,
            }
            for c in report.certificates
        ],
        "certified": bool(report.certified),
        "oracle": oracle,
        "notes": report.notes
        + ([] if report.certified else ["no certificate found (the conditions are sufficient only)"]),
        "config": config.to_dict(),
    }


def numrange_rows(a: np.ndarray, config: AnalysisConfig):
    points = nr_boundary_sample(a, config.boundary_points)
    meta = {"omega": document.fmt(float(np.max(points.real)))}
    if a.shape == (2, 2):
        e = ellipse_2x2(a)
        meta.update(
            center=f"{document.fmt(e.center.real)},{document.fmt(e.center.imag)}",
            major_axis=document.fmt(e.major_axis),
            minor_axis=document.fmt(e.minor_axis),
        )
    return [(z.real, z.imag) for z in points], meta


def sweep_curve(a: np.ndarray, config: AnalysisConfig, mode: str):
    if mode == "exp":
        t_max = config.t_max if config.t_max is not None else exp_horizon(a)
        return sweep_exp(a, t_max, config.steps)
    if mode == "pow":
        return sweep_pow(a, config.n_max)
    if mode == "pow-continuous":
        s_max = config.s_max if config.s_max is not None else pow_horizon(a)
        return sweep_pow_continuous(a, s_max, config.steps)
    raise DomainError(f"unknown sweep mode {mode!r}")


def write_sweep(curve, path, mode: str) -> Path:
    p, peak = curve.peak
    meta = {"mode": mode, "peak_parameter": document.fmt(p), "peak_norm": document.fmt(peak)}
    return document.write_csv(path, (curve.parameter_name, "norm"), curve.samples, meta)


def write_numrange(a, config, path) -> Path:
    rows, meta = numrange_rows(a, config)
    return document.write_csv(path, ("re", "im"), rows, meta)


def write_report(report: dict, path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(report, indent=1) + "\n")
    return path


def run_demo(out_dir, theta: float = FIG1_THETA, config: AnalysisConfig | None = None) -> tuple[dict, list[Path]]:
    """Rebuild the two-eigenvalue example end to end into out_dir."""
    config = config or AnalysisConfig()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    a = matrix_from_angle(FIG1_LAMBDA1, FIG1_LAMBDA2, theta)
    doc = MatrixDocument("fig1", a)
    files = [document.dump(doc, out_dir / "fig1_matrix.json")]
    files.append(write_numrange(a, config, out_dir / "fig1_numrange.csv"))
    t_max = config.t_max if config.t_max is not None else 10.0
    files.append(write_sweep(sweep_exp(a, t_max, config.steps), out_dir / "fig1_sweep_exp.csv", "exp"))
    report = analyze_matrix(a, config, Mode.EXP, "fig1")
    files.append(write_report(report, out_dir / "fig1_report.json"))
    return report, files


def _output_dir(args) -> Path:
    d = Path(args.output_dir or os.environ.get(OUTPUT_ENV) or ".")
    d.mkdir(parents=True, exist_ok=True)
    return d


def _config(args) -> AnalysisConfig:
    fields = ("cluster_tol", "invariance_tol", "oracle_threshold", "t_max", "s_max", "n_max", "steps", "boundary_points", "seed")
    kw = {f: getattr(args, f) for f in fields if getattr(args, f, None) is not None}
    return AnalysisConfig(**kw)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output-dir", help=f"directory for output files (default ${OUTPUT_ENV} or .)")
    common.add_argument("--cluster-tol", type=float, help="eigenvalue clustering tolerance, relative to ||M||_F")
    common.add_argument("--invariance-tol", type=float, help="max relative invariance defect of a scanned subspace")
    common.add_argument("--oracle-threshold", type=float, help="sweep peak must exceed 1 + this to confirm")
    common.add_argument("--t-max", type=float, help="exp sweep horizon (default 50/|max Re lambda|)")
    common.add_argument("--s-max", type=float, help="continuous power sweep horizon (default 50/|max ln|lambda||)")
    common.add_argument("--n-max", type=int, help="largest integer power in pow sweeps")
    common.add_argument("--steps", type=int, help="grid intervals in continuous sweeps")
    common.add_argument("--boundary-points", type=int, help="numerical-range boundary directions")
    common.add_argument("--seed", type=int, help="seed for Rayleigh-quotient sampling")

    parser = argparse.ArgumentParser(prog="nonnormal", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common], help="certify transient growth and cross-check with sweeps")
    p.add_argument("file")
    p.add_argument("--mode", choices=["exp", "pow"])
    p = sub.add_parser("numrange", parents=[common], help="write numerical-range boundary points as CSV")
    p.add_argument("file")
    p = sub.add_parser("sweep", parents=[common], help="write a norm sweep as CSV")
    p.add_argument("file")
    p.add_argument("--mode", choices=["exp", "pow", "pow-continuous"], default="exp")
    p = sub.add_parser("demo", parents=[common], help="regenerate the two-eigenvalue ellipse example")
    p.add_argument("--theta", type=float, default=FIG1_THETA)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
        out = _output_dir(args)
        if args.command == "demo":
            report, files = run_demo(out, args.theta, config)
            for f in files:
                print(f)
            print(f"certified: {report['certified']}")
            return EXIT_OK
        doc = document.load(args.file)
        if args.command == "analyze":
            mode = Mode(args.mode) if args.mode else None
            report = analyze_matrix(doc.matrix, config, mode, doc.name)
            path = write_report(report, out / f"{doc.name}_report.json")
            print(json.dumps(report, indent=1))
            print(path, file=sys.stderr)
        elif args.command == "numrange":
            print(write_numrange(doc.matrix, config, out / f"{doc.name}_numrange.csv"))
        elif args.command == "sweep":
            curve = sweep_curve(doc.matrix, config, args.mode)
            print(write_sweep(curve, out / f"{doc.name}_sweep_{args.mode}.csv", args.mode))
    except (DomainError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
