"""Command-line front end.

Subcommands evaluate the correlation models, run Bell tests, sweep the
analyzer angle, and generate outcome sequences, with seeded reproducibility:
identical (seed, samples, workers) settings produce byte-identical output.
Angles are taken in degrees; directions as comma-separated components
(normalized on input). Floats are written with 17 significant digits so CSV
round-trips exactly.

Exit status: 0 success, 2 usage error, 1 internal numerical failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys

from .bell import MODEL_NAMES, bell_sum, derive_pair_seed, make_model, trine_config
from .geometry import Direction3
from .local_field import (
    build_quadrature,
    malus_correlation_closed,
    malus_correlation_quadrature,
    naive_field,
    quasi_field,
    signed_mc_correlation,
)
from .nonlocal_field import (
    correlation_from_matrix,
    empirical_correlation,
    generate_sequences,
    marginal_outcome,
    sequences_to_csv,
    singlet_conditional,
)
from .quantum import joint_expectation, make_singlet

DEFAULT_SAMPLES = 10**6
DEFAULT_SEED = 0
DEFAULT_QUAD_THETA = 32
DEFAULT_QUAD_PHI = 64
MIN_MC_SAMPLES = 1000


def _fmt(x: float) -> str:
    """17 significant digits: round-trips any double exactly."""
    return format(float(x), ".17g")


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _parse_direction(token: str, parser: argparse.ArgumentParser) -> Direction3:
    parts = token.split(",")
    if len(parts) != 3:
        parser.error(f"direction {token!r} must have exactly 3 comma-separated components")
    try:
        x, y, z = (float(p) for p in parts)
    except ValueError:
        parser.error(f"direction {token!r} has non-numeric components")
    try:
        return Direction3.normalized(x, y, z)
    except ValueError as exc:
        parser.error(str(exc))
    raise AssertionError("unreachable")


def _analyzer_pair(
    args: argparse.Namespace, parser: argparse.ArgumentParser
) -> tuple[Direction3, Direction3, float]:
    """Resolve --alpha / --directions into a pair plus the angle in degrees."""
    if args.directions is not None and args.alpha is not None:
        parser.error("specify either --alpha or --directions, not both")
    if args.directions is not None:
        tokens = args.directions.split(";")
        if len(tokens) != 2:
            parser.error("--directions takes two vectors: 'ax,ay,az;bx,by,bz'")
        a = _parse_direction(tokens[0], parser)
        b = _parse_direction(tokens[1], parser)
        return a, b, math.degrees(a.angle_to(b))
    alpha_deg = args.alpha if args.alpha is not None else 0.0
    if not math.isfinite(alpha_deg):
        parser.error(f"--alpha must be finite, got {alpha_deg}")
    a = Direction3.from_polar_angle(0.0)
    b = Direction3.from_polar_angle(math.radians(alpha_deg))
    return a, b, alpha_deg


def _render_record(record: dict, fmt: str) -> str:
    """One flat record as a table, a one-row CSV, or JSON."""
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    if fmt == "csv":
        header = ",".join(record)
        row = ",".join(
            _fmt(v) if isinstance(v, float) else str(v) for v in record.values()
        )
        return f"{header}\n{row}\n"
    width = max(len(k) for k in record)
    lines = [
        f"{key.ljust(width)} = {_fmt(value) if isinstance(value, float) else value}"
        for key, value in record.items()
    ]
    return "\n".join(lines) + "\n"


def cmd_exact(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    a, b, alpha_deg = _analyzer_pair(args, parser)
    record = {
        "alpha_deg": float(alpha_deg),
        "e_quantum": joint_expectation(make_singlet(), a, b),
    }
    _emit(_render_record(record, args.format), args.out)
    return 0


def cmd_local(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    a, b, alpha_deg = _analyzer_pair(args, parser)
    if args.samples < MIN_MC_SAMPLES:
        parser.error(f"--samples must be >= {MIN_MC_SAMPLES} for MC commands")
    dist = naive_field() if args.field == "naive" else quasi_field()
    quad = build_quadrature(args.quad_theta, args.quad_phi)
    mc = signed_mc_correlation(dist, a, b, args.samples, args.seed, args.workers)
    record = {
        "field": args.field,
        "alpha_deg": float(alpha_deg),
        "e_closed": malus_correlation_closed(dist, a, b),
        "e_quadrature": malus_correlation_quadrature(dist, a, b, quad),
        "e_mc": mc.mean,
        "mc_stderr": mc.stderr,
        "n_samples": mc.n_samples,
        "seed": mc.seed,
    }
    _emit(_render_record(record, args.format), args.out)
    return 0


def cmd_nonlocal(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    a, b, alpha_deg = _analyzer_pair(args, parser)
    del a, b
    matrix = singlet_conditional(math.radians(alpha_deg))
    record = {
        "alpha_deg": float(alpha_deg),
        "cond_pp": float(matrix.q[0, 0]),
        "cond_pm": float(matrix.q[0, 1]),
        "cond_mp": float(matrix.q[1, 0]),
        "cond_mm": float(matrix.q[1, 1]),
        "marginal_plus": marginal_outcome(),
        "e_nonlocal": correlation_from_matrix(matrix),
    }
    _emit(_render_record(record, args.format), args.out)
    return 0


def cmd_bell(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.samples < MIN_MC_SAMPLES:
        parser.error(f"--samples must be >= {MIN_MC_SAMPLES} for MC commands")
    model = make_model(args.model, n_samples=args.samples, seed=args.seed)
    report = bell_sum(model, trine_config())
    if args.format == "table":
        text = _render_record(
            {k: v for k, v in report.to_json_dict().items() if k != "config"},
            "table",
        )
    else:
        text = report.to_json() + "\n"
    _emit(text, args.out)
    return 0


def cmd_sweep(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.step <= 0.0:
        parser.error("--step must be positive")
    if args.stop < args.start:
        parser.error("--stop must not precede --start")
    if args.with_mc and args.samples < MIN_MC_SAMPLES:
        parser.error(f"--samples must be >= {MIN_MC_SAMPLES} for MC commands")

    grid = []
    k = 0
    while (alpha := args.start + k * args.step) <= args.stop + 1e-9:
        grid.append(alpha)
        k += 1
    if not grid:
        parser.error("empty angle grid")

    singlet = make_singlet()
    naive = naive_field()
    quasi = quasi_field()
    header = "alpha_deg,E_quantum,E_naive_local,E_quasi_local,E_nonlocal_matrix"
    if args.with_mc:
        header += ",E_mc,mc_stderr"
    lines = [header]
    reference = Direction3.from_polar_angle(0.0)
    for alpha_deg in grid:
        b = Direction3.from_polar_angle(math.radians(alpha_deg))
        matrix = singlet_conditional(math.radians(alpha_deg))
        cells = [
            _fmt(alpha_deg),
            _fmt(joint_expectation(singlet, reference, b)),
            _fmt(malus_correlation_closed(naive, reference, b)),
            _fmt(malus_correlation_closed(quasi, reference, b)),
            _fmt(correlation_from_matrix(matrix)),
        ]
        if args.with_mc:
            mc = signed_mc_correlation(
                quasi,
                reference,
                b,
                args.samples,
                derive_pair_seed(args.seed, reference, b),
                args.workers,
            )
            cells += [_fmt(mc.mean), _fmt(mc.stderr)]
        lines.append(",".join(cells))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_sequences(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.samples < 1:
        parser.error("--samples must be >= 1")
    if not math.isfinite(args.alpha):
        parser.error(f"--alpha must be finite, got {args.alpha}")
    matrix = singlet_conditional(math.radians(args.alpha))
    seqs = generate_sequences(matrix, args.samples, args.seed, args.workers)
    estimate = empirical_correlation(seqs)
    buffer = io.StringIO()
    sequences_to_csv(seqs, buffer, columns=("trial", "lambda_b", "lambda_a"))
    buffer.write(
        f"# empirical_correlation={_fmt(estimate.mean)}"
        f" stderr={_fmt(estimate.stderr)}"
        f" same_outcome_frequency={_fmt(seqs.same_outcome_frequency())}\n"
    )
    _emit(buffer.getvalue(), args.out)
    return 0


def _add_pair_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", type=float, default=None,
                     help="analyzer angle in degrees (default 0)")
    sub.add_argument("--directions", type=str, default=None,
                     help="two analyzer vectors 'ax,ay,az;bx,by,bz' (normalized)")


def _add_mc_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                     help=f"Monte Carlo sample count (default {DEFAULT_SAMPLES})")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED,
                     help=f"base RNG seed (default {DEFAULT_SEED})")
    sub.add_argument("--workers", type=int, default=1,
                     help="deterministic sub-stream count (default 1)")


def _add_output_options(sub: argparse.ArgumentParser, default_format: str = "table") -> None:
    sub.add_argument("--format", choices=("table", "csv", "json"),
                     default=default_format,
                     help=f"output format (default {default_format})")
    sub.add_argument("--out", type=str, default=None,
                     help="output file path (default standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghostfield",
        description="Two-spin EPR correlations: quantum, local signed field, "
        "nonlocal conditional field, and Bell tests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact quantum correlation of the singlet")
    _add_pair_options(p)
    _add_output_options(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("local", help="local field correlation: closed form, quadrature, MC")
    _add_pair_options(p)
    p.add_argument("--field", choices=("naive", "quasi"), default="quasi",
                   help="which two-component field (default quasi)")
    p.add_argument("--quad-theta", type=int, default=DEFAULT_QUAD_THETA,
                   help=f"Gauss-Legendre order in cos(theta) (default {DEFAULT_QUAD_THETA})")
    p.add_argument("--quad-phi", type=int, default=DEFAULT_QUAD_PHI,
                   help=f"uniform azimuthal order (default {DEFAULT_QUAD_PHI})")
    _add_mc_options(p)
    _add_output_options(p)
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("nonlocal", help="conditional outcome matrix and its correlation")
    _add_pair_options(p)
    _add_output_options(p)
    p.set_defaults(func=cmd_nonlocal)

    p = sub.add_parser("bell", help="three-correlation Bell test on the trine")
    p.add_argument("--model", choices=MODEL_NAMES, default="quantum",
                   help="correlation model (default quantum)")
    _add_mc_options(p)
    _add_output_options(p, default_format="json")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("sweep", help="CSV of all model correlations across angles")
    p.add_argument("--start", type=float, default=0.0, help="first angle in degrees (default 0)")
    p.add_argument("--stop", type=float, default=180.0, help="last angle in degrees (default 180)")
    p.add_argument("--step", type=float, default=5.0, help="grid step in degrees (default 5)")
    p.add_argument("--with-mc", action="store_true",
                   help="append signed-MC columns for the quasi field")
    _add_mc_options(p)
    p.add_argument("--out", type=str, default=None,
                   help="output file path (default standard output)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("sequences", help="correlated +-1 outcome sequences as CSV")
    p.add_argument("--alpha", type=float, default=0.0,
                   help="analyzer angle in degrees (default 0)")
    _add_mc_options(p)
    p.add_argument("--out", type=str, default=None,
                   help="output file path (default standard output)")
    p.set_defaults(func=cmd_sequences)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except SystemExit:
        raise
    except Exception as exc:  # numerical / internal failure -> exit 1
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
