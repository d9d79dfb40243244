"""Command-line interface: single curves, the two reproduction sweeps,
model selection and config validation."""

import argparse
import os
import sys

from .experiment import (
    DEFAULT_D_VALUES,
    DEFAULT_T_VALUES,
    DEFAULT_THRESHOLD,
    SweepSpec,
    model_selection_report,
    render_svg,
    run_sweep,
    write_csv,
)
from .hamiltonian import EVOLUTION_MODELS, ChainConfig
from .otoc import TimeGrid


def _float_list(text):
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def _read_config_file(path):
    """Flat key=value file mirroring flag names (dashes or underscores)."""
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
                key, value = line.split("=", 1)
                values[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise ValueError(f"cannot read config file {path}: {exc}")
    return values


_CONFIG_FLAG_PARSERS = {
    "n": int,
    "j_ising": float,
    "hx": float,
    "hz_amp": float,
    "jx": float,
    "jz": float,
    "d": float,
    "temperature": float,
    "evolution_model": str,
    "d_values": _float_list,
    "temperatures": _float_list,
    "t_start": float,
    "t_max": float,
    "steps": int,
    "threshold": float,
    "jobs": int,
    "out": str,
}


def _add_physics_flags(p):
    p.add_argument("--n", type=int, default=6, help="chain length in spins (default 6)")
    p.add_argument("--j-ising", type=float, default=-1.0, dest="j_ising",
                   help="Ising coupling J, energy units (default -1)")
    p.add_argument("--hx", type=float, default=1.05,
                   help="transverse field amplitude, energy units (default 1.05)")
    p.add_argument("--hz-amp", type=float, default=0.375, dest="hz_amp",
                   help="staggered longitudinal field amplitude (default 0.375)")
    p.add_argument("--jx", type=float, default=1.0,
                   help="in-plane Heisenberg coupling J_x = J_y (default 1)")
    p.add_argument("--jz", type=float, default=-1.0,
                   help="z Heisenberg coupling, must be negative (default -1)")
    p.add_argument("--d", type=float, default=0.0,
                   help="DM interaction strength along z (default 0)")
    p.add_argument("--temperature", type=float, default=0.05,
                   help="temperature, energy units with k_B=1 (default 0.05)")
    p.add_argument("--evolution-model", choices=EVOLUTION_MODELS, default="sum",
                   dest="evolution_model",
                   help="Hamiltonian generating U(t) (default sum)")


def _add_grid_flags(p):
    p.add_argument("--t-start", type=float, default=0.0, dest="t_start",
                   help="first grid time (default 0)")
    p.add_argument("--t-max", type=float, default=10.0, dest="t_max",
                   help="last grid time (default 10)")
    p.add_argument("--steps", type=int, default=201,
                   help="number of grid points (default 201)")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                   help="F threshold defining the scrambling time (default 0.9)")


def _add_common_flags(p):
    p.add_argument("--out", default=".",
                   help="output directory for CSV/SVG (default current dir)")
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel sweep workers (default: available cores)")
    p.add_argument("--config", default=None,
                   help="key=value config file; explicit flags override it")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dmscramble",
        description="OTOC scrambling on thermal spin chains with DM interaction",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("curve", help="single F(t) curve for one configuration")
    _add_physics_flags(p)
    _add_grid_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("sweep-d", help="sweep DM strength at fixed temperature")
    _add_physics_flags(p)
    _add_grid_flags(p)
    _add_common_flags(p)
    p.add_argument("--d-values", type=_float_list, dest="d_values",
                   default=DEFAULT_D_VALUES,
                   help="comma-separated DM strengths (default 0,0.25,0.5,0.75,1)")

    p = sub.add_parser("sweep-t", help="sweep temperature at fixed DM strength")
    _add_physics_flags(p)
    _add_grid_flags(p)
    _add_common_flags(p)
    p.add_argument("--temperatures", type=_float_list,
                   default=DEFAULT_T_VALUES,
                   help="comma-separated temperatures (default 0.05,0.5,1,2)")

    p = sub.add_parser("model-select",
                       help="probe each evolution model against both sweep trends")
    _add_physics_flags(p)
    _add_grid_flags(p)
    _add_common_flags(p)
    p.add_argument("--d-values", type=_float_list, dest="d_values",
                   default=DEFAULT_D_VALUES,
                   help="DM strengths for the D-trend probe")
    p.add_argument("--temperatures", type=_float_list,
                   default=DEFAULT_T_VALUES,
                   help="temperatures for the T-trend probe")

    p = sub.add_parser("validate-config",
                       help="check a parameter set and print the resolved values")
    _add_physics_flags(p)
    _add_grid_flags(p)
    _add_common_flags(p)

    return parser


def _apply_config_file(args, argv):
    if getattr(args, "config", None) is None:
        return args
    file_values = _read_config_file(args.config)
    explicit = _explicit_flags(argv)
    for key, raw in file_values.items():
        if key not in _CONFIG_FLAG_PARSERS:
            raise ValueError(f"unknown config key {key!r} in {args.config}")
        dest = key
        if not hasattr(args, dest):
            continue  # key not applicable to this subcommand
        if dest in explicit:
            continue  # explicit flag wins
        try:
            setattr(args, dest, _CONFIG_FLAG_PARSERS[key](raw))
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise ValueError(f"bad value for {key} in {args.config}: {exc}")
    return args


def _explicit_flags(argv):
    """Flag dests the user passed explicitly on the command line."""
    explicit = set()
    for token in argv:
        if token.startswith("--"):
            explicit.add(token[2:].split("=", 1)[0].replace("-", "_"))
    return explicit


def _chain_config(args):
    return ChainConfig(
        n=args.n,
        j_ising=args.j_ising,
        h_x=args.hx,
        h_z_amp=args.hz_amp,
        j_x=args.jx,
        j_y=args.jx,
        j_z=args.jz,
        d_strength=args.d,
        temperature=args.temperature,
        evolution_model=args.evolution_model,
    )


def _time_grid(args):
    return TimeGrid(t_start=args.t_start, t_end=args.t_max, steps=args.steps)


def _emit(result, out_dir, stem):
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, stem + ".csv")
    svg_path = os.path.join(out_dir, stem + ".svg")
    write_csv(result, csv_path)
    render_svg(result, svg_path)
    return csv_path, svg_path


def _print_scrambling_times(result):
    for value, t_star in zip(result.spec.values, result.scrambling_times):
        shown = "never" if t_star is None else f"{t_star:.4f}"
        print(f"  {result.spec.swept_parameter}={value:g}: t* = {shown}")


def _run_curve(args):
    cfg = _chain_config(args)
    spec = SweepSpec(
        base=cfg,
        swept_parameter="d_strength",
        values=(cfg.d_strength,),
        grid=_time_grid(args),
        threshold=args.threshold,
    )
    result = run_sweep(spec, jobs=args.jobs)
    csv_path, svg_path = _emit(result, args.out, "curve")
    _print_scrambling_times(result)
    print(f"wrote {csv_path} and {svg_path}")
    return 0


def _run_sweep_d(args):
    spec = SweepSpec(
        base=_chain_config(args),
        swept_parameter="d_strength",
        values=args.d_values,
        grid=_time_grid(args),
        threshold=args.threshold,
    )
    result = run_sweep(spec, jobs=args.jobs)
    csv_path, svg_path = _emit(result, args.out, "sweep_d")
    _print_scrambling_times(result)
    print(f"wrote {csv_path} and {svg_path}")
    return 0


def _run_sweep_t(args):
    spec = SweepSpec(
        base=_chain_config(args),
        swept_parameter="temperature",
        values=args.temperatures,
        grid=_time_grid(args),
        threshold=args.threshold,
    )
    result = run_sweep(spec, jobs=args.jobs)
    csv_path, svg_path = _emit(result, args.out, "sweep_t")
    _print_scrambling_times(result)
    print(f"wrote {csv_path} and {svg_path}")
    return 0


def _run_model_select(args):
    report = model_selection_report(
        base=_chain_config(args),
        grid=_time_grid(args),
        threshold=args.threshold,
        d_values=args.d_values,
        t_values=args.temperatures,
        jobs=args.jobs,
    )
    print("model      D-trend  T-trend")
    for row in report.rows:
        if row.error is not None:
            print(f"{row.model:<10} error: {row.error}")
        else:
            print(f"{row.model:<10} {str(row.d_trend_ok):<8} {row.t_trend_ok}")
    print(f"recommended: {report.recommended}")
    return 0 if report.recommended != "inconclusive" else 1


def _run_validate_config(args):
    cfg = _chain_config(args)
    grid = _time_grid(args)
    print("configuration valid:")
    for name in ("n", "j_ising", "h_x", "h_z_amp", "j_x", "j_y", "j_z",
                 "d_strength", "temperature", "evolution_model"):
        print(f"  {name} = {getattr(cfg, name)}")
    print(f"  grid = [{grid.t_start}, {grid.t_end}] x {grid.steps}")
    print(f"  threshold = {args.threshold}")
    return 0


_DISPATCH = {
    "curve": _run_curve,
    "sweep-d": _run_sweep_d,
    "sweep-t": _run_sweep_t,
    "model-select": _run_model_select,
    "validate-config": _run_validate_config,
}


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _apply_config_file(args, argv)
        return _DISPATCH[args.subcommand](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except Exception as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
