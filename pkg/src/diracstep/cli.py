"""Command-line front end: deterministic CSV/JSON emission for tables and figures.

Subcommands
    amplitudes   one-energy amplitude row
    sweep        R(E) table (SweepRow columns)
    packet       gaussian-packet time series (t, n1, n2, r)
    peak         Klein-zone |R| peak locator
    phase-jump   one-sided Arg R limits at e = v0

Exit codes: 0 success, 1 invalid flags or values, 2 empty/mixed zone,
3 quadrature non-convergence (doubling n_p moves some r(t) by >= 1e-4).
Runs are seed-free and byte-identical for identical flags.  Numbers are
serialized with 17 significant digits.
"""

import argparse
import json
import sys

import numpy as np

from . import analysis, wavepacket
from .amplitudes import scatter
from .errors import ConvergenceError, DiracStepError, EmptyZoneError, MixedZoneError
from .kinematics import StepConfig, Zone, classify_zone

CONVERGENCE_TOL = 1e-4


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _serialize(columns, rows, meta, fmt):
    """CSV: header line, '# key=value' metadata lines, then data rows."""
    if fmt == "json":
        payload = dict(meta)
        payload["rows"] = [dict(zip(columns, row)) for row in rows]
        return json.dumps(payload, indent=2, default=str) + "\n"
    lines = [",".join(columns)]
    for key, value in meta.items():
        lines.append(f"# {key}={_fmt(value) if isinstance(value, float) else value}")
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _cmd_amplitudes(args) -> int:
    cfg = StepConfig(v0=args.v0)
    amps = scatter(args.e, cfg)
    columns = ["e", "zone", "re_r", "im_r", "r_mod", "r_arg", "re_t", "im_t", "alpha"]
    row = [
        args.e,
        amps.zone.value,
        amps.r_amp.real,
        amps.r_amp.imag,
        abs(amps.r_amp),
        float(np.angle(amps.r_amp)),
        amps.t_amp.real,
        amps.t_amp.imag,
        amps.alpha,
    ]
    _emit(_serialize(columns, [row], {"v0": args.v0}, args.format), args.out)
    return 0


def _cmd_sweep(args) -> int:
    cfg = StepConfig(v0=args.v0)
    rows = analysis.sweep(args.emin, args.emax, args.n, cfg)
    columns = ["e", "zone", "r_mod", "r_arg", "r_arg_unwrapped", "t_mod", "alpha", "d_arg_de"]
    data = [
        [r.e, r.zone.value, r.r_mod, r.r_arg, r.r_arg_unwrapped, r.t_mod, r.alpha, r.d_arg_de]
        for r in rows
    ]
    _emit(_serialize(columns, data, {"v0": args.v0}, args.format), args.out)
    return 0


def _cmd_packet(args) -> int:
    cfg = StepConfig(v0=args.v0)
    if args.e is not None and args.p0 is not None:
        raise ValueError("give exactly one of --e / --p0 (or --zone alone for the mid-zone peak)")
    if args.zone is not None:
        zone = Zone.parse(args.zone)
    elif args.e is not None:
        zone = classify_zone(args.e, cfg)
    elif args.p0 is not None:
        zone = classify_zone(float(np.sqrt(args.p0**2 + 1.0)), cfg)
    else:
        raise ValueError("give --zone, --e or --p0 to place the packet")

    pk = wavepacket.packet_for_zone(zone, cfg, d=args.d, e0=args.e, p0=args.p0)
    t_default = wavepacket.default_times(pk, n_t=args.nt)
    t_min = args.tmin if args.tmin is not None else float(t_default[0])
    t_max = args.tmax if args.tmax is not None else float(t_default[-1])
    if not t_min < t_max:
        raise ValueError(f"need tmin < tmax, got [{t_min}, {t_max}]")
    times = np.linspace(t_min, t_max, args.nt)

    t_abs = max(abs(t_min), abs(t_max))
    if args.zmin is not None or args.dz is not None:
        defaults = wavepacket.QuadratureSpec.for_packet(pk, t_abs, n_p=args.np)
        quad = wavepacket.QuadratureSpec(
            n_p=args.np,
            z_min=args.zmin if args.zmin is not None else defaults.z_min,
            dz=args.dz if args.dz is not None else defaults.dz,
        )
    else:
        quad = wavepacket.QuadratureSpec.for_packet(pk, t_abs, n_p=args.np)

    series = wavepacket.density_series(pk, cfg, quad, times)

    doubled = wavepacket.QuadratureSpec(n_p=2 * quad.n_p, z_min=quad.z_min, dz=quad.dz)
    r2 = wavepacket.r_series(pk, cfg, doubled, times)
    drift = float(np.max(np.abs(series.r - r2)))
    if drift >= CONVERGENCE_TOL:
        raise ConvergenceError(
            f"doubling n_p from {quad.n_p} moves r(t) by {drift:.3e} >= {CONVERGENCE_TOL:.0e}"
        )

    columns = ["t", "n1", "n2", "r"]
    data = [
        [float(t), float(a), float(b), float(c)]
        for t, a, b, c in zip(series.times, series.n1, series.n2, series.r)
    ]
    meta = {
        "v0": args.v0,
        "zone": zone.value,
        "e0": pk.e0(),
        "d": pk.d,
        "n_p": quad.n_p,
        "tail_cut": pk.tail_fraction(),
    }
    _emit(_serialize(columns, data, meta, args.format), args.out)
    return 0


def _cmd_peak(args) -> int:
    cfg = StepConfig(v0=args.v0)
    peak = analysis.klein_peak(cfg, grid_step=args.grid_step)
    if args.format == "json":
        text = json.dumps(
            {"v0": args.v0, "e_star": peak.e_star, "r_mod_star": peak.r_mod_star,
             "boundary_hit": peak.boundary_hit},
            indent=2,
        ) + "\n"
    else:
        text = (
            f"e_star={_fmt(peak.e_star)} r_mod_star={_fmt(peak.r_mod_star)} "
            f"boundary_hit={str(peak.boundary_hit).lower()}\n"
        )
    _emit(text, args.out)
    return 0


def _cmd_phase_jump(args) -> int:
    cfg = StepConfig(v0=args.v0)
    pj = analysis.phase_jump(cfg)
    if args.format == "json":
        text = json.dumps(
            {"v0": args.v0, "arg_below": pj.arg_below, "arg_above": pj.arg_above, "jump": pj.jump},
            indent=2,
        ) + "\n"
    else:
        text = f"arg_below={_fmt(pj.arg_below)} arg_above={_fmt(pj.arg_above)} jump={_fmt(pj.jump)}\n"
    _emit(text, args.out)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="diracstep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("amplitudes", help="one-energy amplitude row")
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--e", type=float, required=True)
    common(p)
    p.set_defaults(fn=_cmd_amplitudes)

    p = sub.add_parser("sweep", help="R(E) table over an energy grid")
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--emin", type=float, required=True)
    p.add_argument("--emax", type=float, required=True)
    p.add_argument("--n", type=int, required=True, help="number of uniform samples")
    common(p)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("packet", help="gaussian-packet time series (t, n1, n2, r)")
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--d", type=float, required=True, help="localization length (1/m)")
    p.add_argument("--zone", default=None, help="diffusion|dt|kt|klein (mid-zone peak default)")
    p.add_argument("--e", type=float, default=None, help="peak energy (exclusive with --p0)")
    p.add_argument("--p0", type=float, default=None, help="peak momentum (exclusive with --e)")
    p.add_argument("--np", type=int, default=256, help="Gauss-Legendre node count (>= 64)")
    p.add_argument("--zmin", type=float, default=None, help="region-I cutoff (negative)")
    p.add_argument("--dz", type=float, default=None, help="spatial grid spacing (<= d/20)")
    p.add_argument("--tmin", type=float, default=None)
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--nt", type=int, default=401, help="number of time samples")
    common(p)
    p.set_defaults(fn=_cmd_packet)

    p = sub.add_parser("peak", help="Klein-zone |R| peak locator")
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--grid-step", type=float, default=1e-4)
    common(p)
    p.set_defaults(fn=_cmd_peak)

    p = sub.add_parser("phase-jump", help="one-sided Arg R limits at e = v0")
    p.add_argument("--v0", type=float, required=True)
    common(p)
    p.set_defaults(fn=_cmd_phase_jump)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (EmptyZoneError, MixedZoneError) as exc:
        print(f"diracstep: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"diracstep: {exc}", file=sys.stderr)
        return 3
    except (DiracStepError, ValueError) as exc:
        print(f"diracstep: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
