"""Command-line front end: spectra, thermal observables, ground-state data,
sweeps, threshold/crossing finders, and the proposition verifier.

Exit codes: 0 success, 1 in-claim verification failure, 2 argument errors.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .eigensolver import full_spectrum, ground_state_vector
from .entanglement import n_tangle
from .experiments import (
    DEFAULT_SEED,
    DegenerateGroundError,
    ground_state_concurrence,
    level_crossings,
    proposition2_odd_control,
    sweep,
    threshold_temperature,
    thermal_concurrence,
    verify_propositions,
)
from .hamiltonian import ModelParams
from .thermal import observables

_SWEEP_RECIPE = (
    "concurrence-vs-(T, B) surface at desk scale: "
    "xxring sweep --n 4 --j 1 --t-min 0.05 --t-max 3 --t-steps 60 "
    "--b-min 0 --b-max 4 --b-steps 80"
)

# degeneracy clustering for display, matching the eigensolver residual scale
_CLUSTER_TOL = 1e-9


def _fmt(value: float) -> str:
    return format(value, ".12g")


def _add_model_args(parser, with_b=True):
    parser.add_argument("--n", type=int, required=True, help="ring size")
    parser.add_argument("--j", type=float, required=True, help="exchange constant")
    if with_b:
        parser.add_argument("--b", type=float, default=0.0, help="magnetic field (default 0)")


def _add_grid_args(parser, axis):
    parser.add_argument(f"--{axis}-min", type=float, required=True)
    parser.add_argument(f"--{axis}-max", type=float, required=True)
    parser.add_argument(f"--{axis}-steps", type=int, required=True, help="number of grid points")
    parser.add_argument(f"--{axis}-scale", choices=("linear", "log"), default="linear")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xxring",
        description="Exact diagonalization of XX qubit rings in a magnetic field.",
        epilog=_SWEEP_RECIPE,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="sorted eigenvalues with degeneracies")
    _add_model_args(p)

    p = sub.add_parser("thermal", help="Z(shifted), U, M, Gxx, Gzz, concurrence at (n, j, b, t)")
    _add_model_args(p)
    p.add_argument("--t", type=float, required=True, help="temperature (k_B = 1)")

    p = sub.add_parser("ground", help="ground energy, concurrence, and (even n) tangle")
    _add_model_args(p)

    p = sub.add_parser("sweep", help="CSV of observables over a (t, b) grid")
    _add_model_args(p, with_b=False)
    _add_grid_args(p, "t")
    _add_grid_args(p, "b")
    p.add_argument("--output", "-o", default="-", help="CSV path, '-' for stdout (default)")

    p = sub.add_parser("threshold", help="largest temperature with positive concurrence")
    _add_model_args(p)
    p.add_argument("--tol", type=float, default=1e-6, help="bisection tolerance")

    p = sub.add_parser("crossings", help="fields where the ground level changes branch")
    _add_model_args(p, with_b=False)
    p.add_argument("--b-max", type=float, required=True)
    p.add_argument("--resolution", type=float, default=0.01)

    p = sub.add_parser("verify", help="run the symmetry proposition suites")
    p.add_argument("--n-list", default="2,3,4,5,6", help="comma-separated ring sizes")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--odd-control", type=int, default=5,
                   help="odd ring for the out-of-claim exchange-sign control (0 disables)")
    return parser


def _grid(args, axis):
    lo = getattr(args, f"{axis}_min")
    hi = getattr(args, f"{axis}_max")
    steps = getattr(args, f"{axis}_steps")
    scale = getattr(args, f"{axis}_scale")
    if steps < 1:
        raise ValueError(f"--{axis}-steps must be >= 1")
    if hi < lo:
        raise ValueError(f"--{axis}-max must be >= --{axis}-min")
    if steps == 1:
        return [lo]
    if scale == "log":
        if lo <= 0:
            raise ValueError(f"log scale needs positive --{axis}-min")
        return list(np.geomspace(lo, hi, steps))
    return list(np.linspace(lo, hi, steps))


def _cmd_spectrum(args) -> int:
    spectrum = full_spectrum(ModelParams(n=args.n, j=args.j, b=args.b))
    values = spectrum.eigenvalues()
    clusters: list[list[float]] = []
    for v in values:
        if clusters and v - clusters[-1][0] <= _CLUSTER_TOL:
            clusters[-1].append(float(v))
        else:
            clusters.append([float(v)])
    for group in clusters:
        print(f"{_fmt(sum(group) / len(group)):>22}  x{len(group)}")
    return 0


def _cmd_thermal(args) -> int:
    params = ModelParams(n=args.n, j=args.j, b=args.b)
    spectrum = full_spectrum(params)
    obs = observables(spectrum, args.t)
    c = thermal_concurrence(spectrum, args.t)
    print(f"Z_shifted   = {_fmt(math.exp(obs.log_z_shifted))}")
    print(f"U           = {_fmt(obs.u)}")
    print(f"M           = {_fmt(obs.m)}")
    print(f"Gxx         = {_fmt(obs.g_xx)}")
    print(f"Gzz         = {_fmt(obs.g_zz)}")
    print(f"concurrence = {_fmt(c)}")
    return 0


def _cmd_ground(args) -> int:
    params = ModelParams(n=args.n, j=args.j, b=args.b)
    spectrum = full_spectrum(params)
    print(f"ground energy = {_fmt(spectrum.ground_energy)}")
    try:
        c = ground_state_concurrence(params)
    except DegenerateGroundError:
        print(f"ground level is {len(spectrum.ground_states())}-fold degenerate "
              "(field sits on a level crossing)")
        return 0
    print(f"concurrence   = {_fmt(c)}")
    if args.n % 2 == 0:
        tangle = n_tangle(ground_state_vector(spectrum))
        print(f"tangle        = {_fmt(tangle)}")
    return 0


def _cmd_sweep(args) -> int:
    params = ModelParams(n=args.n, j=args.j, b=0.0)
    rows = sweep(params, sorted(_grid(args, "t")), sorted(_grid(args, "b")))
    lines = ["T,B,J,N,U,M,Gxx,Gzz,concurrence"]
    for row in rows:
        lines.append(",".join([
            _fmt(row.t), _fmt(row.b), _fmt(row.j), str(row.n),
            _fmt(row.u), _fmt(row.m), _fmt(row.g_xx), _fmt(row.g_zz),
            _fmt(row.concurrence),
        ]))
    text = "\n".join(lines) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", newline="") as handle:
            handle.write(text)
        print(f"wrote {len(rows)} rows to {args.output}", file=sys.stderr)
    return 0


def _cmd_threshold(args) -> int:
    tc = threshold_temperature(ModelParams(n=args.n, j=args.j, b=args.b), tol=args.tol)
    print("none" if tc is None else f"{tc:.4f}")
    return 0


def _cmd_crossings(args) -> int:
    fields = level_crossings(args.n, args.j, args.b_max, args.resolution)
    if not fields:
        print("none")
    for b in fields:
        print(f"{b:.9f}")
    return 0


def _cmd_verify(args) -> int:
    n_list = [int(part) for part in args.n_list.split(",") if part.strip()]
    reports = verify_propositions(n_list, samples=args.samples, seed=args.seed)
    scopes = {
        1: f"n in {n_list}",
        2: f"n in {[n for n in n_list if n % 2 == 0]}",
        3: f"n in {n_list}, b = 0, both exchange signs",
    }
    failed = False
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        failed = failed or not rep.passed
        print(f"proposition {rep.proposition}: {status}  "
              f"(max discrepancy {rep.max_discrepancy:.3e}, {rep.samples} samples, {scopes[rep.proposition]})")
    if args.odd_control:
        control = proposition2_odd_control(args.odd_control, samples=args.samples, seed=args.seed)
        print(f"proposition 2 on n={args.odd_control} (odd, out of claim, negative control): "
              f"symmetry {'UNEXPECTEDLY held' if control.passed else 'breaks as expected'} "
              f"(max discrepancy {control.max_discrepancy:.3e})")
    return 1 if failed else 0


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "thermal": _cmd_thermal,
    "ground": _cmd_ground,
    "sweep": _cmd_sweep,
    "threshold": _cmd_threshold,
    "crossings": _cmd_crossings,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
