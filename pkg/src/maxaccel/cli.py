"""Command-line interface: deterministic, machine-readable output.

Subcommands: constants, kinematics, inequality-scan, mode-eval,
pde-residual, transition, fock-check.  JSON goes to stdout as a single
object with snake_case keys; CSV floats use shortest round-trip decimals
(Python repr); randomized scans use numpy's seeded PCG64 generator, so runs
with identical flags and seed are byte-identical.

Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from . import extremum, fock, pde, transition
from .figures import render_transition_curve
from .kinematics import (
    DeviceState,
    FourVector,
    ParticleKinematics,
    accel_velocity_ratio,
    four_acceleration,
    four_momentum,
    four_velocity,
)
from .modes import Branch, ModeSpec, phi_mode, suppression_exponent_routes
from .units import (
    PLANCK_MASS_TWO_DIGITS,
    PhysicalConstants,
    UnitContext,
    UnitMode,
    max_proper_acceleration,
    planck_mass,
    rho0,
)

__all__ = ["run", "main"]

RNG_NAME = "numpy-pcg64"
FOCK_DEVIATION_LIMIT = 1e-12


def _vec3(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected 3 comma-separated numbers, got {text!r}")
    try:
        a, b, c = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return (a, b, c)


def _vec4(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected 4 comma-separated numbers, got {text!r}")
    try:
        a, b, c, d = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return (a, b, c, d)


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _nonnegative(text: str) -> float:
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _write_csv(path: str | None, header: str, rows: list[str]) -> None:
    text = "\n".join([header] + rows) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _fourvector_list(vec: FourVector) -> list[float]:
    return [float(c) for c in vec.components]


# ---------------------------------------------------------------- handlers


def _cmd_constants(args: argparse.Namespace) -> int:
    ctx = UnitContext(alpha=args.alpha)
    k = ctx.constants
    _print_json(
        {
            "c": k.c,
            "hbar": k.hbar,
            "G": k.G,
            "avogadro": k.avogadro,
            "nucleon_mass": k.nucleon_mass,
            "alpha": ctx.alpha,
            "a_max": max_proper_acceleration(ctx),
            "rho0": rho0(ctx),
            "planck_mass": planck_mass(ctx),
        }
    )
    return 0


def _cmd_kinematics(args: argparse.Namespace) -> int:
    part = ParticleKinematics(args.mass, args.p, args.aproper, args.a)
    dev = DeviceState(velocity3=args.u)
    c = PhysicalConstants().c
    v4 = four_velocity(dev, c)
    _print_json(
        {
            "gamma": v4.t,
            "four_velocity": _fourvector_list(v4),
            "four_acceleration": _fourvector_list(four_acceleration(part)),
            "four_momentum": _fourvector_list(four_momentum(part, c)),
            "accel_velocity_ratio": accel_velocity_ratio(part, dev, c),
        }
    )
    return 0


def _cmd_inequality_scan(args: argparse.Namespace) -> int:
    result = extremum.inequality_scan(args.samples, args.seed, args.tolerance)
    rows = [f"{b!r},{t!r},{x!r},{gf!r},{bd!r}" for b, t, x, gf, bd in result.violations]
    _write_csv(None, "beta,theta,x,gammaF,bound", rows)
    print(
        f"scanned {result.samples} samples (rng={RNG_NAME}, seed={result.seed}): "
        f"{len(result.violations)} violations, min slack {result.min_slack!r}",
        file=sys.stderr,
    )
    return 0 if result.passed else 1


def _mode_spec_from_args(args: argparse.Namespace) -> ModeSpec:
    ctx = UnitContext(
        alpha=args.alpha, mode=UnitMode.DIMENSIONLESS, rho0_override=args.rho0
    )
    part = ParticleKinematics(args.mass, args.p, args.aproper, args.a)
    branch = Branch.POSITIVE if args.branch == "pos" else Branch.NEGATIVE
    return ModeSpec(ctx=ctx, part=part, branch=branch)


def _cmd_mode_eval(args: argparse.Namespace) -> int:
    spec = _mode_spec_from_args(args)
    dev = DeviceState(velocity3=args.u)
    x = FourVector(*args.x)
    v = four_velocity(dev, spec.ctx.c)
    amp = phi_mode(spec, x, v)
    via_ratio, via_planck = suppression_exponent_routes(spec, dev)
    _print_json(
        {
            "log_mag": amp.log_mag,
            "phase": amp.phase,
            "support": amp.support,
            "exponent_routes": {"via_ratio": via_ratio, "via_planck": via_planck},
        }
    )
    return 0


def _cmd_pde_residual(args: argparse.Namespace) -> int:
    ctx = UnitContext(mode=UnitMode.DIMENSIONLESS, rho0_override=args.rho0)
    rng = np.random.default_rng(args.seed)
    cfg = pde.StencilConfig(h=args.h, support_margin=args.margin)
    h_sequence = (4.0 * args.h, 2.0 * args.h, args.h)

    rows = []
    max_rel = 0.0
    slope_samples = []
    for index in range(args.points):
        spec, x, v = pde.sample_interior_point(rng, ctx, args.m, h_sequence[0], args.margin)
        report = pde.residual_8d(spec, x, v, cfg)
        rel = report.relative_residual
        max_rel = max(max_rel, rel)
        rows.append(
            ",".join(
                [f"{coord!r}" for coord in report.point]
                + [f"{abs(report.residual)!r}", f"{rel!r}", f"{report.h!r}"]
            )
        )
        if index < 10:
            slope_samples.append((spec, x, v, abs(report.residual)))

    # Slope from the geometric-mean residual over the first few points; less
    # seed-sensitive than a single-point fit.
    mean_mags = []
    for h in h_sequence[:-1]:
        coarse = pde.StencilConfig(h=h, support_margin=args.margin)
        mags = [abs(pde.residual_8d(s, x, v, coarse).residual) for s, x, v, _ in slope_samples]
        mean_mags.append(float(np.exp(np.mean(np.log(mags)))))
    mean_mags.append(float(np.exp(np.mean(np.log([m for *_, m in slope_samples])))))
    slope = pde.loglog_slope(h_sequence, mean_mags)

    _write_csv(args.csv, "t,x,y,z,v0,v1,v2,v3,abs_residual,rel_residual,h", rows)
    _print_json(
        {
            "max_rel_residual": max_rel,
            "convergence_slope": slope,
            "points": args.points,
            "h": args.h,
            "rho0": args.rho0,
            "m": args.m,
            "rng": RNG_NAME,
            "seed": args.seed,
        }
    )
    return 0


def _cmd_transition(args: argparse.Namespace) -> int:
    ctx = UnitContext(alpha=args.alpha, planck_mass_override=args.planck_mass)
    constants = ctx.constants
    obj = transition.ObjectModel(
        n_nucleons=1.0,
        nucleon_mass=constants.nucleon_mass,
        accel_ratio=args.accel_ratio,
        alpha=args.alpha,
    )
    spacing = transition.Spacing.LOG if args.spacing == "log" else transition.Spacing.LINEAR
    curve = transition.transition_curve(args.n_min, args.n_max, args.points, spacing, obj, ctx)

    per_nucleon = transition.rest_state_ln_magnitude(
        obj.nucleon_mass, obj.accel_ratio, obj.alpha, ctx
    )
    ln_cutoff = args.cutoff_log10 * transition.LN10
    threshold = transition.classicality_threshold(obj, ln_cutoff, ctx)
    avogadro_ln = constants.avogadro * per_nucleon

    if args.csv is not None:
        rows = [
            f"{s.n_nucleons!r},{s.mass_kg!r},{s.ln_magnitude!r},{s.log10_magnitude!r}"
            for s in curve.samples
        ]
        _write_csv(args.csv, "n_nucleons,mass_kg,ln_magnitude,log10_magnitude", rows)
    if args.svg is not None:
        render_transition_curve(curve, args.cutoff_log10, args.svg)

    _print_json(
        {
            "alpha": args.alpha,
            "accel_ratio": args.accel_ratio,
            "nucleon_mass": obj.nucleon_mass,
            "planck_mass": planck_mass(ctx),
            "n_min": args.n_min,
            "n_max": args.n_max,
            "points": args.points,
            "spacing": args.spacing,
            "cutoff_log10": args.cutoff_log10,
            "per_nucleon_ln_magnitude": per_nucleon,
            "avogadro_count": constants.avogadro,
            "avogadro_ln_magnitude": avogadro_ln,
            "avogadro_log10_magnitude": avogadro_ln / transition.LN10,
            "classicality_threshold_n": threshold,
            "csv_path": args.csv,
            "svg_path": args.svg,
        }
    )
    return 0


def _cmd_fock_check(args: argparse.Namespace) -> int:
    lattice = fock.ModeLattice(
        modes=tuple((i, 0) for i in range(args.modes)), cell_volume=args.cell_volume
    )
    report = fock.commutator_check(lattice, args.cutoff)
    _print_json(
        {
            "max_deviation": report.max_deviation,
            "subspace_dim": report.subspace_dim,
        }
    )
    return 0 if report.max_deviation < FOCK_DEVIATION_LIMIT else 1


# ----------------------------------------------------------------- parser


def _add_particle_flags(sub: argparse.ArgumentParser, mass_default: float | None) -> None:
    sub.add_argument("--mass", type=_positive, default=mass_default, required=mass_default is None,
                     help="particle mass")
    sub.add_argument("--p", type=_vec3, default=(0.0, 0.0, 0.0), metavar="X,Y,Z",
                     help="spatial momentum")
    sub.add_argument("--aproper", type=_positive, default=1.0, help="proper acceleration a > 0")
    sub.add_argument("--a", type=_vec3, default=(0.0, 0.0, 0.0), metavar="X,Y,Z",
                     help="spatial acceleration")
    sub.add_argument("--u", type=_vec3, default=(0.0, 0.0, 0.0), metavar="X,Y,Z",
                     help="device 3-velocity")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxaccel",
        description="Acceleration-bounded scalar field modes, their verification, "
        "and the quantum-to-classical transition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print constants and derived scales as JSON")
    p.add_argument("--alpha", type=_positive, default=1.0, help="order-unity bound factor")
    p.set_defaults(handler=_cmd_constants)

    p = sub.add_parser("kinematics", help="four-vectors for given particle/device parameters (SI)")
    _add_particle_flags(p, mass_default=None)
    p.set_defaults(handler=_cmd_kinematics)

    p = sub.add_parser("inequality-scan", help="seeded random scan of the ratio lower bound")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=_nonnegative, default=1e-12)
    p.set_defaults(handler=_cmd_inequality_scan)

    p = sub.add_parser("mode-eval", help="evaluate one mode function (dimensionless units)")
    _add_particle_flags(p, mass_default=1.0)
    p.add_argument("--x", type=_vec4, default=(0.0, 0.0, 0.0, 0.0), metavar="T,X,Y,Z",
                   help="spacetime point")
    p.add_argument("--branch", choices=("pos", "neg"), default="pos")
    p.add_argument("--rho0", type=_positive, default=0.1, help="dimensionless length scale")
    p.add_argument("--alpha", type=_positive, default=1.0)
    p.set_defaults(handler=_cmd_mode_eval)

    p = sub.add_parser("pde-residual", help="finite-difference residual of the field equation")
    p.add_argument("--m", type=_positive, default=1.0, help="dimensionless mass")
    p.add_argument("--rho0", type=_positive, default=0.1)
    p.add_argument("--h", type=_positive, default=1e-3, help="central-difference step")
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--margin", type=float, default=0.1, help="support margin (>= 0.1)")
    p.add_argument("--csv", default=None, metavar="PATH", help="write per-point CSV here")
    p.set_defaults(handler=_cmd_pde_residual)

    p = sub.add_parser("transition", help="quantum-to-classical transition curve and report files")
    p.add_argument("--n-min", type=_positive, default=1.0)
    p.add_argument("--n-max", type=_positive, default=1e26)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--spacing", choices=("log", "linear"), default="log")
    p.add_argument("--alpha", type=_positive, default=1.0)
    p.add_argument("--accel-ratio", type=_nonnegative, default=0.0)
    p.add_argument("--cutoff-log10", type=float, default=-3.0,
                   help="classicality cutoff on log10 magnitude (negative)")
    p.add_argument("--planck-mass", type=_positive, default=PLANCK_MASS_TWO_DIGITS,
                   help="Planck mass used in the exponent (default: two-digit rounding)")
    p.add_argument("--csv", default=None, metavar="PATH")
    p.add_argument("--svg", default=None, metavar="PATH")
    p.set_defaults(handler=_cmd_transition)

    p = sub.add_parser("fock-check", help="verify the discretized ladder algebra")
    p.add_argument("--modes", type=int, default=3)
    p.add_argument("--cutoff", type=int, default=4)
    p.add_argument("--cell-volume", type=_positive, default=1.0)
    p.set_defaults(handler=_cmd_fock_check)

    return parser


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if args.command == "inequality-scan" and args.samples < 1:
        parser.error("--samples must be at least 1")
    if args.command == "pde-residual":
        if args.points < 1:
            parser.error("--points must be at least 1")
        if args.margin < 0.1:
            parser.error("--margin must be at least 0.1")
    if args.command == "transition":
        if args.points < 2:
            parser.error("--points must be at least 2")
        if not args.n_min < args.n_max:
            parser.error("--n-min must be smaller than --n-max")
        if args.n_min < 1:
            parser.error("--n-min must be at least 1")
        if not args.cutoff_log10 < 0:
            parser.error("--cutoff-log10 must be negative")
    if args.command == "fock-check":
        if args.modes < 1:
            parser.error("--modes must be at least 1")
        if args.cutoff < 2:
            parser.error("--cutoff must be at least 2")


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args, parser)
    except SystemExit as exc:
        return 0 if exc.code in (None, 0) else int(exc.code)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
