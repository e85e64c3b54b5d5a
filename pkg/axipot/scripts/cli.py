#!/usr/bin/env python3
"""
axipot/scripts/cli.py

Command-line front end for axisymmetric potentials.

Usage:
    axipot kernel --m 0,0 --source 1,0 --grid 0.1:3:0.1,-2:2:0.1 --out kernel.csv
    axipot poisson --m 0.5,0 --data gaussian --point 1,0
    axipot solve-disk --m 2,0 --center 5 --radius 3 --trace quadratic --nmax 32 --out sol.json
    axipot solve-exterior --m 0.5,0 --center 3 --radius 1 --trace traces/outer.csv --out sol.json
    axipot solve-annulus --m 2,0 --tau0 0.5 --tau1 1 --alpha 1 --trace quadratic --nmax 48 --out sol.json
    axipot decompose --solution sol.json --interior-out v.json --exterior-out w.json
    axipot evaluate --solution sol.json --point 5,0.2
    axipot gram --m -1,0 --tau0 0.5 --tau1 1.0 --N 64
    axipot verify --m 2,0

Every long flag can also come from --config file.json, a flat object keyed by the flag name
with underscores; flags on the command line win. Exit codes: 0 success, 1 bad input,
2 numerical failure or a failed verify check.
"""

import argparse
import json
import re
import sys
from collections.abc import Callable
from pathlib import Path
from typing import NoReturn

import numpy as np
from pydantic import ValidationError
from rich.console import Console

from axipot.config import Config
from axipot.data_models.halfplane import BoundaryDataKind
from axipot.data_models.spectral import BoundaryTrace, FourierLegendreSolution
from axipot.data_models.weinstein import ReferenceKind
from axipot.numerics.bipolar import cartesian_to_bipolar, disk_geometry
from axipot.potentials.halfplane import boundary_data, poisson_field
from axipot.potentials.kernels import kernel_values
from axipot.potentials.riesz import gram_sweep
from axipot.potentials.spectral import (
    decompose,
    evaluate_many,
    sample_count,
    solution_from_json,
    solution_to_json,
    solve_annulus,
    solve_disk,
    solve_exterior,
    trace_from_field,
)
from axipot.potentials.weinstein import reference_solution
from axipot.scripts.verify import run_invariant_suite
from axipot.utils.data_utils import (
    format_field_csv,
    parse_complex,
    parse_grid,
    parse_pair,
    read_trace_csv,
    write_json_file,
)
from axipot.utils.exceptions import AxipotInputError, AxipotNumericalError
from axipot.utils.logger import get_logger, set_level
from axipot.utils.terminal_utils import print_checks

logger = get_logger(name=__name__)

console = Console()
error_console = Console(stderr=True)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2

# separation below which kernel grid points are reported as NaN
KERNEL_MIN_SEPARATION = 1e-12

# option values such as -1,0 or -2:2:0.5,0:1:0.5
NEGATIVE_VALUE = re.compile(r"^-\.?\d")


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the input-error code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# Private functions _______________________________________________________________________________

def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise ValueError(f"missing required option(s): {', '.join(missing)}")


def _emit(text: str, out: str | None) -> None:
    """Write text to out, or to stdout."""
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _format_value(value: complex) -> str:
    return f"{value.real:.17g},{value.imag:.17g}"


def _load_trace(source: str, m: complex, tau: float, alpha: float, n_max: int) -> BoundaryTrace:
    """A named reference solution sampled on the circle, or samples read from a CSV file."""
    if source in {kind.value for kind in ReferenceKind}:
        field = reference_solution(source, m)
        return trace_from_field(field, tau, alpha, sample_count(n_max))
    _, values = read_trace_csv(source)
    logger.info("read %d trace samples from %s", len(values), source)
    return BoundaryTrace(tau=tau, alpha=alpha, values=values)


def _solution_field(sol: FourierLegendreSolution, grid: str) -> str:
    """The solution on a grid as CSV; points off its region are NaN."""
    x, y = parse_grid(grid)
    with np.errstate(divide="ignore", invalid="ignore"):
        tau, theta = cartesian_to_bipolar(x, y, sol.alpha)
    inside = (x > 0.0) & np.isfinite(tau) & sol.contains(tau)
    values = np.full(x.shape, np.nan + 0j)
    if np.any(inside):
        values[inside] = evaluate_many(sol, x[inside], y[inside])
    logger.info("evaluated the %s solution at %d of %d grid points", sol.kind, int(inside.sum()), x.size)
    return format_field_csv(x, y, tau, theta, values)


def _write_solution(args: argparse.Namespace, sol: FourierLegendreSolution) -> None:
    _emit(solution_to_json(sol), args.out)
    if args.grid:
        text = _solution_field(sol, args.grid)
        _emit(text, args.field_out)


def _cmd_kernel(args: argparse.Namespace) -> int:
    _require(args, "m", "source", "grid")
    m = parse_complex(args.m)
    x0, y0 = parse_pair(args.source)
    xi, eta = parse_grid(args.grid)
    logger.info("kernel m=%s source=(%g, %g) on a %s grid", m, x0, y0, xi.shape)
    valid = (xi > 0.0) & (np.hypot(xi - x0, eta - y0) >= KERNEL_MIN_SEPARATION)
    values = np.full(xi.shape, np.nan + 0j)
    if np.any(valid):
        values[valid] = kernel_values(m, x0, y0, xi[valid], eta[valid], reflected=args.reflected).value
    with np.errstate(divide="ignore", invalid="ignore"):
        tau, theta = cartesian_to_bipolar(xi, eta, args.alpha)
    _emit(format_field_csv(xi, eta, tau, theta, values), args.out)
    return EXIT_OK


def _cmd_poisson(args: argparse.Namespace) -> int:
    _require(args, "m")
    m = parse_complex(args.m)
    data = boundary_data(args.data, parse_complex(args.amplitude))
    if args.point:
        x, y = parse_pair(args.point)
        _emit(_format_value(complex(poisson_field(m, data, x, y))), args.out)
        return EXIT_OK
    _require(args, "grid")
    x, y = parse_grid(args.grid)
    inside = x > 0.0
    values = np.full(x.shape, np.nan + 0j)
    if np.any(inside):
        values[inside] = poisson_field(m, data, x[inside], y[inside])
    with np.errstate(divide="ignore", invalid="ignore"):
        tau, theta = cartesian_to_bipolar(x, y, args.alpha)
    _emit(format_field_csv(x, y, tau, theta, values), args.out)
    return EXIT_OK


def _cmd_solve_circle(args: argparse.Namespace) -> int:
    _require(args, "m", "center", "radius", "trace")
    m = parse_complex(args.m)
    n_max = int(args.nmax)
    geometry = disk_geometry(float(args.center), float(args.radius))
    trace = _load_trace(args.trace, m, geometry.tau0, geometry.alpha, n_max)
    solver = solve_disk if args.command == "solve-disk" else solve_exterior
    sol = solver(m, trace, n_max)
    logger.info("%s: m=%s, tau0=%.6g, alpha=%.6g, n_max=%d", args.command, m, geometry.tau0, geometry.alpha, n_max)
    _write_solution(args, sol)
    return EXIT_OK


def _cmd_solve_annulus(args: argparse.Namespace) -> int:
    _require(args, "m", "tau0", "tau1")
    m = parse_complex(args.m)
    n_max = int(args.nmax)
    tau0, tau1, alpha = float(args.tau0), float(args.tau1), float(args.alpha)
    outer = args.trace0 or args.trace
    inner = args.trace1 or args.trace
    if outer is None or inner is None:
        raise ValueError("solve-annulus needs --trace, or both --trace0 and --trace1")
    sol = solve_annulus(
        m,
        _load_trace(outer, m, tau0, alpha, n_max),
        _load_trace(inner, m, tau1, alpha, n_max),
        n_max,
    )
    logger.info("solve-annulus: m=%s on [%g, %g], alpha=%g, n_max=%d", m, tau0, tau1, alpha, n_max)
    _write_solution(args, sol)
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    _require(args, "solution", "interior_out", "exterior_out")
    sol = solution_from_json(Path(args.solution).read_text(encoding="utf-8"))
    interior, exterior = decompose(sol)
    _emit(solution_to_json(interior), args.interior_out)
    _emit(solution_to_json(exterior), args.exterior_out)
    return EXIT_OK


def _cmd_evaluate(args: argparse.Namespace) -> int:
    _require(args, "solution", "point")
    sol = solution_from_json(Path(args.solution).read_text(encoding="utf-8"))
    x, y = parse_pair(args.point)
    _emit(_format_value(complex(evaluate_many(sol, x, y))), None)
    return EXIT_OK


def _cmd_gram(args: argparse.Namespace) -> int:
    _require(args, "m", "tau0", "tau1")
    m = parse_complex(args.m)
    blocks = gram_sweep(m, float(args.tau0), float(args.tau1), int(args.N))
    summaries = [block.to_summary() for block in blocks]
    if args.out:
        write_json_file(args.out, summaries)
        logger.info("wrote %d Gram blocks to %s", len(summaries), args.out)
    else:
        _emit(json.dumps(summaries, indent=2), None)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    _require(args, "m")
    m = parse_complex(args.m)
    checks = run_invariant_suite(m)
    print_checks(console, m, checks)
    return EXIT_OK if all(check.passed for check in checks) else EXIT_NUMERICAL


def _join_negative_values(argv: list[str]) -> list[str]:
    """
    Rewrite "--opt -1,0" as "--opt=-1,0"; argparse reads a bare -1,0 as an option string.
    """
    joined: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token.startswith("--") and "=" not in token and i + 1 < len(argv) and NEGATIVE_VALUE.match(argv[i + 1]):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def _load_config(argv: list[str]) -> dict:
    """The --config object, or an empty one."""
    bootstrap = _Parser(add_help=False)
    bootstrap.add_argument("--config")
    known, _ = bootstrap.parse_known_args(argv)
    if not known.config:
        return {}
    with open(known.config, mode="r", encoding="utf-8") as f:
        config = json.load(f)
    if not isinstance(config, dict):
        raise ValueError(f"{known.config} must hold a flat JSON object")
    logger.info("loaded %d option(s) from %s", len(config), known.config)
    return config


def _build_parser(config: dict) -> _Parser:
    parser = _Parser(prog="axipot", description="Generalized axisymmetric potentials")
    parser.add_argument("--config", help="JSON file of default option values")
    parser.add_argument("--log-level", type=str.upper, choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="log threshold (default from LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], int], help_text: str) -> _Parser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--config", help=argparse.SUPPRESS)
        sub.set_defaults(handler=handler)
        return sub

    def with_m(sub: _Parser) -> None:
        sub.add_argument("--m", help="parameter m as re,im")

    def with_solution_output(sub: _Parser) -> None:
        sub.add_argument("--nmax", type=int, default=Config.SPECTRAL_N_MAX, help="truncation |n| <= nmax")
        sub.add_argument("--out", help="solution JSON (stdout if omitted)")
        sub.add_argument("--grid", help="also evaluate on x0:x1:dx,y0:y1:dy")
        sub.add_argument("--field-out", help="field CSV for --grid (stdout if omitted)")

    kernel = command("kernel", _cmd_kernel, "E_m (or F_m) of a fixed source on a grid of field points")
    with_m(kernel)
    kernel.add_argument("--source", help="source point x,y")
    kernel.add_argument("--grid", help="field points x0:x1:dx,y0:y1:dy")
    kernel.add_argument("--reflected", action="store_true", help="evaluate F_m instead of E_m")
    kernel.add_argument("--alpha", type=float, default=1.0, help="bipolar chart for the tau, theta columns")
    kernel.add_argument("--out", help="CSV path (stdout if omitted)")

    poisson = command("poisson", _cmd_poisson, "half-plane Dirichlet solution, Re m < 1")
    with_m(poisson)
    poisson.add_argument("--data", default=BoundaryDataKind.GAUSSIAN.value, choices=[kind.value for kind in BoundaryDataKind])
    poisson.add_argument("--amplitude", default="1,0", help="data amplitude re,im")
    poisson.add_argument("--point", help="single point x,y")
    poisson.add_argument("--grid", help="points x0:x1:dx,y0:y1:dy")
    poisson.add_argument("--alpha", type=float, default=1.0, help="bipolar chart for the tau, theta columns")
    poisson.add_argument("--out", help="output path (stdout if omitted)")

    for name, help_text in (("solve-disk", "Dirichlet problem inside circle((a, 0), R)"),
                            ("solve-exterior", "Dirichlet problem outside circle((a, 0), R)")):
        sub = command(name, _cmd_solve_circle, help_text)
        with_m(sub)
        sub.add_argument("--center", type=float, help="center abscissa a")
        sub.add_argument("--radius", type=float, help="radius R < a")
        sub.add_argument("--trace", help="reference solution name or theta,re,im CSV")
        with_solution_output(sub)

    annulus = command("solve-annulus", _cmd_solve_annulus, "Dirichlet problem on tau0 < tau < tau1")
    with_m(annulus)
    annulus.add_argument("--tau0", type=float, help="outer circle level")
    annulus.add_argument("--tau1", type=float, help="inner circle level")
    annulus.add_argument("--alpha", type=float, default=1.0, help="pole abscissa")
    annulus.add_argument("--trace", help="reference solution name or CSV for both circles")
    annulus.add_argument("--trace0", help="outer circle trace")
    annulus.add_argument("--trace1", help="inner circle trace")
    with_solution_output(annulus)

    split = command("decompose", _cmd_decompose, "split an annulus solution into Q and P parts")
    split.add_argument("--solution", help="annulus solution JSON")
    split.add_argument("--interior-out", help="Q part (disk solution) JSON")
    split.add_argument("--exterior-out", help="P part (exterior solution) JSON")

    evaluate = command("evaluate", _cmd_evaluate, "evaluate a solution JSON at one point")
    evaluate.add_argument("--solution", help="solution JSON")
    evaluate.add_argument("--point", help="point x,y")

    gram = command("gram", _cmd_gram, "Gram blocks of the annulus family")
    with_m(gram)
    gram.add_argument("--tau0", type=float, help="outer circle level")
    gram.add_argument("--tau1", type=float, help="inner circle level")
    gram.add_argument("--N", type=int, default=16, help="modes |n| <= N")
    gram.add_argument("--out", help="JSON path (stdout if omitted)")

    verify = command("verify", _cmd_verify, "run the invariant suite for m")
    with_m(verify)

    if config:
        for sub in commands.choices.values():
            sub.set_defaults(**config)
    return parser


# Exports _________________________________________________________________________________________

def run(argv: list[str] | None = None) -> int:
    """
    Parse argv and run one subcommand.
    Returns:
        int: 0 on success, 1 on bad input, 2 on numerical failure.
    """
    argv = _join_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        parser = _build_parser(_load_config(argv))
        args = parser.parse_args(argv)
        if args.log_level:
            set_level(args.log_level)
        logger.debug("settings: %s", Config.as_dict())
        return args.handler(args)
    except SystemExit as e:
        if e.code is None:
            return EXIT_OK
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    except AxipotNumericalError as e:
        logger.error("numerical failure: %s", e)
        error_console.print(f"[bold red]numerical failure:[/bold red] {e}")
        return EXIT_NUMERICAL
    except (AxipotInputError, ValidationError, ValueError, OSError) as e:
        logger.error("input error: %s", e)
        error_console.print(f"[bold red]input error:[/bold red] {e}")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
