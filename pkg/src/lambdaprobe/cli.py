"""Command-line front end.

Subcommands:
    point      response at a single parameter point (one CSV row to stdout)
    sweep      1-D parameter sweep, free-form or via the built-in figure presets
    regionmap  sub/superluminal classification grid plus the threshold curve
    critical   critical drive parameters as a text report

All rates and frequencies are accepted in units of gamma; there are no SI
units anywhere.  CSV output is byte-deterministic: fixed column order, 12
significant digits, '.' decimal separator, '\\n' line endings.  The
effective configuration is echoed in '# config:' header comments.

Configuration precedence: explicit flags > config file ('key = value' lines,
'#' comments) > built-in defaults.

Exit codes: 0 success, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import LambdaProbeError
from .model import SystemParams, steady_state
from .regionmap import boundary_curve, classify_grid
from .response import DEFAULT_FD_STEP, _classify, dispersion_slope

__all__ = ["main", "run", "POINT_COLUMNS", "PRESETS"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

POINT_COLUMNS = (
    "delta_p", "delta_c", "omega_p", "omega_c", "pump_R",
    "chi_re", "chi_im", "slope", "ng_minus_1", "class",
    "rho11", "rho22", "rho33", "error",
)

REGION_COLUMNS = ("pump_R", "omega_c", "class")
BOUNDARY_COLUMNS = ("pump_R", "omega_c_necessary")

SWEEP_VARIABLES = ("delta_p", "omega_c", "pump_R")

_DEFAULTS = {
    "gamma1": 1.0,
    "gamma2": 1.0,
    "pump_R": 0.0,
    "omega_p": 0.01,
    "omega_c": 1.0,
    "delta_p": 0.0,
    "delta_c": 0.0,
    "chi_prefactor": 1.0,
    "nu_p_scale": 1.0e7,
    "fd_step": DEFAULT_FD_STEP,
}

#: Figure presets: pinned drive parameters, one output file per curve.
PRESETS = {
    "fig3": {
        "variable": "delta_p", "start": -6.0, "stop": 6.0, "count": 1201,
        "base": {"gamma1": 1.0, "gamma2": 1.0, "omega_p": 0.01, "delta_c": 0.0,
                 "pump_R": 1.5, "delta_p": 0.0},
        "curves": [("omega_c", 1.25), ("omega_c", 2.08), ("omega_c", 3.0)],
    },
    "fig4": {
        "variable": "delta_p", "start": -6.0, "stop": 6.0, "count": 1201,
        "base": {"gamma1": 1.0, "gamma2": 1.0, "omega_p": 0.01, "delta_c": 0.0,
                 "omega_c": 3.0, "delta_p": 0.0},
        "curves": [("pump_R", 0.8), ("pump_R", 1.14), ("pump_R", 1.5)],
    },
    "fig5a": {
        "variable": "omega_c", "start": 0.1, "stop": 5.0, "count": 491,
        "base": {"gamma1": 1.0, "gamma2": 1.0, "omega_p": 0.01, "delta_c": 0.0,
                 "delta_p": 0.0},
        "curves": [("pump_R", 1.0), ("pump_R", 1.14), ("pump_R", 1.5)],
    },
    "fig5b": {
        "variable": "pump_R", "start": 0.2, "stop": 8.0, "count": 391,
        "base": {"gamma1": 1.0, "gamma2": 1.0, "omega_p": 0.01, "delta_c": 0.0,
                 "delta_p": 0.0},
        "curves": [("omega_c", 1.99), ("omega_c", 2.08), ("omega_c", 3.0)],
    },
}


def _fmt(value: float) -> str:
    """Fixed numeric formatting: 12 significant digits, '.' separator."""
    return f"{float(value):.12g}"


class UsageError(Exception):
    """Invalid flags or configuration; maps to exit code 2."""


def _read_config_file(path: str) -> dict[str, float]:
    """Parse a 'key = value' configuration file."""
    values: dict[str, float] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file {path!r}: {exc}") from exc
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{line_number}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _DEFAULTS:
            raise UsageError(f"{path}:{line_number}: unknown configuration key {key!r}")
        try:
            values[key] = float(value.strip())
        except ValueError as exc:
            raise UsageError(f"{path}:{line_number}: invalid number {value.strip()!r}") from exc
    return values


def _effective_config(args: argparse.Namespace) -> dict[str, float]:
    """Merge flags over config-file values over built-in defaults."""
    from_file = _read_config_file(args.config) if getattr(args, "config", None) else {}
    merged = {}
    for key, default in _DEFAULTS.items():
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = float(flag_value)
        elif key in from_file:
            merged[key] = from_file[key]
        else:
            merged[key] = default
    return merged


def _build_params(config: dict[str, float]) -> SystemParams:
    try:
        return SystemParams(**{k: v for k, v in config.items() if k != "fd_step"})
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _config_comments(config: dict[str, float], extra: dict[str, object] | None = None) -> list[str]:
    items: dict[str, object] = dict(config)
    if extra:
        items.update(extra)
    lines = []
    for key in sorted(items):
        value = items[key]
        text = _fmt(value) if isinstance(value, float) else str(value)
        lines.append(f"# config: {key}={text}")
    return lines


def _response_row(params: SystemParams, fd_step: float) -> list[str]:
    """One CSV row; solver failures are recorded in the error column."""
    fixed = [
        _fmt(params.delta_p), _fmt(params.delta_c), _fmt(params.omega_p),
        _fmt(params.omega_c), _fmt(params.pump_R),
    ]
    try:
        rho = steady_state(params)
        chi = params.chi_prefactor * rho[2, 0]
        slope = dispersion_slope(params, fd_step)
        ng_minus_one = 2.0 * np.pi * (chi.real + params.nu_p_scale * slope)
        classification = _classify(ng_minus_one)
        return fixed + [
            _fmt(chi.real), _fmt(chi.imag), _fmt(slope), _fmt(ng_minus_one),
            classification.value,
            _fmt(rho[0, 0].real), _fmt(rho[1, 1].real), _fmt(rho[2, 2].real),
            "",
        ]
    except LambdaProbeError as exc:
        message = str(exc).replace(",", ";").replace("\n", " ")
        return fixed + ["", "", "", "", "", "", "", "", message]


def _write_csv(stream: IO[str], comments: Iterable[str], header: Sequence[str],
               rows: Iterable[Sequence[str]]) -> None:
    for comment in comments:
        stream.write(comment + "\n")
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(row) + "\n")


def _open_out(path: str | None):
    """Output stream for a path, or stdout when the path is None or '-'."""
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


# ---------------------------------------------------------------- commands

def _cmd_point(args: argparse.Namespace) -> int:
    config = _effective_config(args)
    params = _build_params(config)
    row = _response_row(params, config["fd_step"])
    if row[-1]:
        print(f"error: {row[-1]}", file=sys.stderr)
        return EXIT_NUMERICAL
    _write_csv(sys.stdout, _config_comments(config, {"command": "point"}), POINT_COLUMNS, [row])
    return EXIT_OK


def _sweep_rows(params: SystemParams, variable: str, values: np.ndarray, fd_step: float):
    for value in values:
        yield _response_row(replace(params, **{variable: float(value)}), fd_step)


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = _effective_config(args)
    fd_step = config["fd_step"]

    if args.preset is not None:
        if args.variable or args.start is not None or args.stop is not None or args.count is not None:
            raise UsageError("--preset pins the sweep; do not combine it with "
                             "--variable/--start/--stop/--count")
        preset = PRESETS[args.preset]
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        values = np.linspace(preset["start"], preset["stop"], preset["count"])
        for curve_key, curve_value in preset["curves"]:
            curve_config = dict(config)
            curve_config.update(preset["base"])
            curve_config[curve_key] = curve_value
            params = _build_params(curve_config)
            extra = {
                "command": "sweep", "preset": args.preset, "variable": preset["variable"],
                "start": float(preset["start"]), "stop": float(preset["stop"]),
                "count": str(preset["count"]),
            }
            path = out_dir / f"{args.preset}_{curve_key}_{_fmt(curve_value)}.csv"
            with open(path, "w", encoding="utf-8", newline="") as stream:
                _write_csv(
                    stream, _config_comments(curve_config, extra), POINT_COLUMNS,
                    _sweep_rows(params, preset["variable"], values, fd_step),
                )
            print(str(path), file=sys.stderr)
        return EXIT_OK

    if args.variable is None or args.start is None or args.stop is None or args.count is None:
        raise UsageError("sweep requires --variable, --start, --stop and --count "
                         "(or a --preset)")
    if args.variable not in SWEEP_VARIABLES:
        raise UsageError(f"--variable must be one of {', '.join(SWEEP_VARIABLES)}")
    if not args.start < args.stop:
        raise UsageError("--start must be strictly below --stop")
    if args.count < 2:
        raise UsageError("--count must be at least 2")

    params = _build_params(config)
    values = np.linspace(args.start, args.stop, args.count)
    extra = {
        "command": "sweep", "variable": args.variable,
        "start": float(args.start), "stop": float(args.stop), "count": str(args.count),
    }
    stream, close = _open_out(args.out)
    try:
        _write_csv(stream, _config_comments(config, extra), POINT_COLUMNS,
                   _sweep_rows(params, args.variable, values, fd_step))
    finally:
        if close:
            stream.close()
    return EXIT_OK


def _cmd_regionmap(args: argparse.Namespace) -> int:
    config = _effective_config(args)
    base = _build_params(config)
    if not args.r_min < args.r_max:
        raise UsageError("--r-min must be strictly below --r-max")
    if not args.omega_c_min < args.omega_c_max:
        raise UsageError("--omega-c-min must be strictly below --omega-c-max")
    if args.n_r < 2 or args.n_omega < 2:
        raise UsageError("--n-r and --n-omega must be at least 2")

    try:
        grid = classify_grid(
            (args.r_min, args.r_max), (args.omega_c_min, args.omega_c_max),
            args.n_r, args.n_omega, method=args.method, base=base, h=config["fd_step"],
        )
    except (LambdaProbeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    extra = {
        "command": "regionmap", "method": args.method,
        "r_min": float(args.r_min), "r_max": float(args.r_max),
        "omega_c_min_axis": float(args.omega_c_min), "omega_c_max_axis": float(args.omega_c_max),
        "n_r": str(args.n_r), "n_omega": str(args.n_omega),
    }
    rows = (
        [_fmt(grid.r_axis[i]), _fmt(grid.omega_c_axis[j]), grid.cells[i, j]]
        for i in range(len(grid.r_axis))
        for j in range(len(grid.omega_c_axis))
    )
    with open(args.out, "w", encoding="utf-8", newline="") as stream:
        _write_csv(stream, _config_comments(config, extra), REGION_COLUMNS, rows)
    print(args.out, file=sys.stderr)

    lo = max(args.r_min, 1.0 + 1.0e-3)
    with open(args.boundary_out, "w", encoding="utf-8", newline="") as stream:
        comments = _config_comments(config, {"command": "regionmap-boundary"})
        if lo < args.r_max:
            curve = boundary_curve((lo, args.r_max), args.boundary_count)
            _write_csv(stream, comments, BOUNDARY_COLUMNS,
                       ([_fmt(r), _fmt(w)] for r, w in curve))
        else:
            # whole window sits at pump_R <= 1: no threshold curve to sample
            _write_csv(stream, comments, BOUNDARY_COLUMNS, [])
    print(args.boundary_out, file=sys.stderr)
    return EXIT_OK


def _cmd_critical(args: argparse.Namespace) -> int:
    from .analytic import critical_params

    if args.pump is not None and args.pump <= 0.0:
        raise UsageError("--pump must be positive")
    if args.omega_c is not None and args.omega_c <= 0.0:
        raise UsageError("--omega-c must be positive")

    report = critical_params(pump_R=args.pump, omega_c=args.omega_c)
    if args.pump is not None:
        if report.omega_c_necessary is None:
            print(f"omega_c_necessary(pump_R={_fmt(args.pump)}) = none "
                  "(slope positive for every coupling strength)")
        else:
            print(f"omega_c_necessary(pump_R={_fmt(args.pump)}) = {_fmt(report.omega_c_necessary)}")
    print(f"omega_c_min = {_fmt(report.omega_c_min)} at r_star = {_fmt(report.r_star)}")
    if args.omega_c is not None:
        if not report.r_roots:
            print(f"pump_roots(omega_c={_fmt(args.omega_c)}) = none "
                  "(coupling below omega_c_min)")
        else:
            roots = ", ".join(_fmt(r) for r in report.r_roots)
            print(f"pump_roots(omega_c={_fmt(args.omega_c)}) = {roots}")
    return EXIT_OK


# ----------------------------------------------------------------- parser

def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("system parameters (units of gamma)")
    group.add_argument("--gamma1", type=float, help="decay rate |3> -> |1> (default 1)")
    group.add_argument("--gamma2", type=float, help="decay rate |3> -> |2> (default 1)")
    group.add_argument("--pump", dest="pump_R", type=float,
                       help="indirect incoherent pump rate (default 0)")
    group.add_argument("--omega-p", dest="omega_p", type=float,
                       help="probe Rabi frequency (default 0.01)")
    group.add_argument("--omega-c", dest="omega_c", type=float,
                       help="coupling Rabi frequency (default 1)")
    group.add_argument("--delta-p", dest="delta_p", type=float, help="probe detuning (default 0)")
    group.add_argument("--delta-c", dest="delta_c", type=float, help="coupling detuning (default 0)")
    group.add_argument("--chi-prefactor", dest="chi_prefactor", type=float,
                       help="susceptibility prefactor (default 1)")
    group.add_argument("--nu-p-scale", dest="nu_p_scale", type=float,
                       help="probe optical frequency for the group index (default 1e7)")
    group.add_argument("--fd-step", dest="fd_step", type=float,
                       help="detuning step for the dispersion slope (default 1e-4)")
    group.add_argument("--config", help="key = value configuration file "
                                        "(flags override, defaults fill in)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambdaprobe",
        description="Steady-state probe response of a driven three-level lambda atom "
                    "with an indirect incoherent pump.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_point = sub.add_parser("point", help="response at a single parameter point")
    _add_param_flags(p_point)
    p_point.set_defaults(handler=_cmd_point)

    p_sweep = sub.add_parser("sweep", help="1-D parameter sweep to CSV")
    _add_param_flags(p_sweep)
    p_sweep.add_argument("--variable", choices=SWEEP_VARIABLES, help="swept parameter")
    p_sweep.add_argument("--start", type=float, help="sweep start")
    p_sweep.add_argument("--stop", type=float, help="sweep stop (exclusive of start)")
    p_sweep.add_argument("--count", type=int, help="number of samples (>= 2)")
    p_sweep.add_argument("--preset", choices=sorted(PRESETS),
                         help="pinned figure preset; writes one CSV per curve")
    p_sweep.add_argument("--out", help="output CSV path (default stdout)")
    p_sweep.add_argument("--out-dir", default=".",
                         help="output directory for preset curve files (default '.')")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_region = sub.add_parser("regionmap", help="sub/superluminal grid plus threshold curve")
    _add_param_flags(p_region)
    p_region.add_argument("--r-min", type=float, default=0.1)
    p_region.add_argument("--r-max", type=float, default=6.0)
    p_region.add_argument("--omega-c-min", dest="omega_c_min", type=float, default=0.5)
    p_region.add_argument("--omega-c-max", dest="omega_c_max", type=float, default=4.0)
    p_region.add_argument("--n-r", type=int, default=60)
    p_region.add_argument("--n-omega", type=int, default=60)
    p_region.add_argument("--method", choices=("analytic", "numeric"), default="analytic")
    p_region.add_argument("--out", default="region_grid.csv", help="grid CSV path")
    p_region.add_argument("--boundary-out", default="region_boundary.csv",
                          help="threshold-curve CSV path")
    p_region.add_argument("--boundary-count", type=int, default=512,
                          help="samples along the threshold curve")
    p_region.set_defaults(handler=_cmd_regionmap)

    p_critical = sub.add_parser("critical", help="critical drive parameters")
    p_critical.add_argument("--pump", type=float, help="pump rate for the coupling threshold")
    p_critical.add_argument("--omega-c", dest="omega_c", type=float,
                            help="coupling strength for the pump-rate window")
    p_critical.set_defaults(handler=_cmd_critical)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LambdaProbeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main())
