# SPDX-License-Identifier: MIT
"""Command-line entry point (``hsas``).

Pipelines read and write HSAS1 files; ``verify`` and ``demo`` run the
numerical checks and print a plain-text report.

Component Contract:
    Input: argv
    Output: exit status, HSAS1 / JSON artifacts, one-line errors on stderr
    Dependencies: options, grid_io, transform, features, holo, noncomm,
        verification, demos, render, report_writer
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, NoReturn

from scheffers_analytic.__about__ import __version__
from scheffers_analytic.algebra import AlgebraSpec, Direction
from scheffers_analytic.demos import DEFAULT_SIZES, DEMO_FIELDS, run_demo
from scheffers_analytic.errors import (
    ConfigError,
    DimensionMismatchError,
    HsasError,
    VerificationFailure,
    collect_warnings,
    wrap_unexpected,
)
from scheffers_analytic.features import amplitude, inst_frequency, phase
from scheffers_analytic.grid import (
    AnalyticGrid,
    GridSignal,
    HyperSpectrum,
    crop_analytic,
    crop_grid,
    unpadded_shape,
    zero_pad,
    zero_pad_analytic,
)
from scheffers_analytic.grid_io import Container, grid_read, grid_write
from scheffers_analytic.holo import holo_extend_grid
from scheffers_analytic.models import CheckResult, VerificationReport
from scheffers_analytic.noncomm import PLACEMENT_MODES, ordering_search, render_ordering_report
from scheffers_analytic.options import Config, load_config
from scheffers_analytic.render import render_verification_text
from scheffers_analytic.report_writer import ReportWriter
from scheffers_analytic.transform import analytic_signal, hft_forward, hft_inverse, partial_hilbert
from scheffers_analytic.util.time import utc_now
from scheffers_analytic.verification import BEDROSIAN_TOLERANCE, run_bedrosian, run_selftest

ALGEBRAS = ("scheffers", "clifford", "hyperbolic")
PIPELINE_COMMANDS = ("transform", "analytic", "hilbert", "amplitude", "phase", "freq", "extend")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ConfigError."""

    def error(self, message: str) -> NoReturn:
        raise ConfigError(f"usage: {message}")


def _add_io(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", type=Path, help="HSAS1 input file")
    parser.add_argument("output", type=Path, help="HSAS1 output file")


def _add_direction(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--j",
        dest="direction",
        required=True,
        help="Direction bit string, one entry per axis. Example: --j 101",
    )


def _add_report(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--json",
        dest="report_json",
        default=None,
        help="Path for JSON report output. Example: --json reports/selftest.json",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the ``hsas`` argument parser."""
    parser = _Parser(prog="hsas", description="Hypercomplex analytic signals over S_d")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    group = parser.add_argument_group("runtime", "Options shared by every command")
    group.add_argument(
        "--threads", type=int, default=None, help="FFT worker count (default: 1)"
    )
    group.add_argument(
        "--pad",
        type=int,
        default=None,
        help=(
            "Zero-pad every axis by this factor before transforms; spectrum inputs "
            "are cropped back by the same factor (default: 1)"
        ),
    )
    group.add_argument(
        "--root",
        type=Path,
        default=None,
        help="Directory holding pyproject.toml with [tool.hsas] (default: cwd)",
    )

    group = parser.add_argument_group("tolerances", "Numerical overrides")
    group.add_argument("--phase-epsilon", dest="phase_epsilon", type=float, default=None)
    group.add_argument("--support-tolerance", dest="support_tolerance", type=float, default=None)
    group.add_argument("--quadrature-nodes", dest="quadrature_nodes", type=int, default=None)
    group.add_argument("--cauchy-nodes", dest="cauchy_nodes", type=int, default=None)
    group.add_argument("--invert-rcond", dest="invert_rcond", type=float, default=None)
    group.add_argument("--demo-tolerance", dest="demo_tolerance", type=float, default=None)

    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    transform = commands.add_parser("transform", help="Forward or inverse hypercomplex transform")
    transform.add_argument("action", choices=("forward", "inverse"))
    _add_io(transform)

    _add_io(commands.add_parser("analytic", help="Analytic signal of a real grid"))

    hilbert = commands.add_parser("hilbert", help="Partial Hilbert transform f_j")
    _add_direction(hilbert)
    _add_io(hilbert)

    _add_io(commands.add_parser("amplitude", help="Instantaneous amplitude"))

    phase_cmd = commands.add_parser("phase", help="Instantaneous phase phi_j")
    _add_direction(phase_cmd)
    phase_cmd.add_argument(
        "--mask", dest="mask_path", type=Path, default=None, help="Write the undefined mask here"
    )
    _add_io(phase_cmd)

    freq = commands.add_parser("freq", help="Instantaneous frequency nu_j")
    _add_direction(freq)
    _add_io(freq)

    extend = commands.add_parser("extend", help="Holomorphic extension at fixed heights")
    extend.add_argument(
        "--y",
        dest="heights",
        required=True,
        help="Comma-separated height per axis. Example: --y 0.1,0.2",
    )
    _add_io(extend)

    verify = commands.add_parser("verify", help="Verification suites")
    suites = verify.add_subparsers(dest="action", required=True, parser_class=_Parser)

    bedrosian = suites.add_parser("bedrosian", help="Gaussian x cosine product check")
    bedrosian.add_argument("--dim", type=int, default=1)
    bedrosian.add_argument("--n", type=int, default=None, help="Samples per axis")
    bedrosian.add_argument("--omega0", type=float, default=None)
    bedrosian.add_argument("--sigma", type=float, default=1.0)
    bedrosian.add_argument("--half-width", dest="half_width", type=float, default=None)
    _add_report(bedrosian)

    noncomm = suites.add_parser("noncomm", help="Exhaustive ordering search")
    noncomm.add_argument("--d", dest="dim", type=int, default=3)
    noncomm.add_argument("--algebra", choices=ALGEBRAS, default="clifford")
    noncomm.add_argument("--placement", choices=PLACEMENT_MODES, default="sides")
    _add_report(noncomm)

    selftest = suites.add_parser("selftest", help="Run every pipeline check at reduced size")
    _add_report(selftest)

    demo = commands.add_parser("demo", help="Closed-form demo reproductions")
    demo.add_argument("action", choices=tuple(DEMO_FIELDS))
    demo.add_argument("--n", type=int, default=None, help="Samples per axis")
    demo.add_argument(
        "--out",
        dest="output",
        type=Path,
        default=None,
        help="Write the amplitude grid here. Example: --out amplitude.hsas",
    )
    _add_report(demo)

    return parser


def _parse_heights(text: str) -> tuple[float, ...]:
    try:
        heights = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise ConfigError(f"invalid heights {text!r}") from exc
    if not heights:
        raise ConfigError("need at least one height")
    return heights


@dataclass
class CommandConfig:
    """A parsed subcommand with its resolved Config.

    Attributes:
        command: Subcommand name.
        action: Second-level choice (transform direction, suite, demo name).
        input: Input file for pipeline commands.
        output: Output file.
        direction: Parsed --j.
        heights: Parsed --y.
        mask_path: Where ``phase`` writes its undefined mask.
        options: Remaining subcommand options.
        config: Numerical and runtime settings.
    """

    command: str
    action: str | None = None
    input: Path | None = None
    output: Path | None = None
    direction: Direction | None = None
    heights: tuple[float, ...] | None = None
    mask_path: Path | None = None
    options: dict[str, Any] = field(default_factory=dict)
    config: Config = field(default_factory=Config)

    def validate(self) -> list[str]:
        """Return the list of validation errors (empty if valid)."""
        errors = self.config.validate()
        if self.command in PIPELINE_COMMANDS:
            if self.input is None or self.output is None:
                errors.append(f"{self.command} needs an input and an output path")
            elif self.input.resolve() == self.output.resolve():
                errors.append("input and output paths must differ")
        written = [p.resolve() for p in (self.output, self.mask_path) if p is not None]
        if self.mask_path is not None and len(set(written)) != len(written):
            errors.append("mask and output paths must differ")
        if self.heights is not None and any(h < 0 for h in self.heights):
            errors.append(f"heights must be >= 0, got {self.heights}")
        n = self.options.get("n")
        if n is not None and n < 4:
            errors.append(f"--n must be at least 4, got {n}")
        return errors

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CommandConfig:
        overrides = {
            "threads": args.threads,
            "pad": args.pad,
            "phase_epsilon": args.phase_epsilon,
            "support_tolerance": args.support_tolerance,
            "quadrature_nodes": args.quadrature_nodes,
            "cauchy_nodes": args.cauchy_nodes,
            "invert_rcond": args.invert_rcond,
            "demo_tolerance": args.demo_tolerance,
            "report_json": getattr(args, "report_json", None),
        }
        config = load_config(args.root, overrides)
        direction = getattr(args, "direction", None)
        heights = getattr(args, "heights", None)
        consumed = {
            "threads", "pad", "root", "phase_epsilon", "support_tolerance",
            "quadrature_nodes", "cauchy_nodes", "invert_rcond", "demo_tolerance", "report_json",
            "command", "action", "input", "output", "direction", "heights", "mask_path",
        }
        return cls(
            command=args.command,
            action=getattr(args, "action", None),
            input=getattr(args, "input", None),
            output=getattr(args, "output", None),
            direction=Direction.parse(direction) if direction is not None else None,
            heights=_parse_heights(heights) if heights is not None else None,
            mask_path=getattr(args, "mask_path", None),
            options={k: v for k, v in vars(args).items() if k not in consumed},
            config=config,
        )


class _Run:
    """Shared state of one command: writer, start time and recorded warnings."""

    def __init__(self, command: CommandConfig, records: list) -> None:
        self.command = command
        self.config = command.config
        self.writer = ReportWriter(command.config)
        self.start: datetime = utc_now()
        self.records = records

    @property
    def workers(self) -> int:
        return self.config.threads

    def write(self, path: Path, container: Container) -> None:
        grid_write(path, container)
        self.writer.track_artifact(path)

    def report(self, label: str, checks: list[CheckResult], extra: dict | None = None) -> VerificationReport:
        report = self.writer.build_report(
            label, checks, collect_warnings(self.records), self.start, extra
        )
        sys.stdout.write(render_verification_text(report))
        if self.config.report_json:
            self.writer.write_json(report, self.config.report_json)
        return report


def _read_grid(path: Path) -> GridSignal:
    g = grid_read(path)
    if not isinstance(g, GridSignal):
        raise ConfigError(f"{path} holds a {type(g).__name__}, expected a real grid")
    return g


def _read_analytic(run: _Run, path: Path) -> AnalyticGrid:
    """An analytic grid file as is, or the analytic signal of a real grid file."""
    source = grid_read(path)
    if isinstance(source, AnalyticGrid):
        return source
    if isinstance(source, HyperSpectrum):
        raise ConfigError(f"{path} holds a spectrum, expected a grid")
    return _analytic(run, source)


def _analytic(run: _Run, g: GridSignal) -> AnalyticGrid:
    a = analytic_signal(zero_pad(g, run.config.pad), run.workers)
    return crop_analytic(a, g.shape) if run.config.pad > 1 else a


def _direction_for(command: CommandConfig, dim: int) -> Direction:
    j = command.direction
    if j is None:
        raise ConfigError(f"{command.command} needs --j")
    if j.dim != dim:
        raise DimensionMismatchError(f"direction {j} has {j.dim} entries, input has dimension {dim}")
    return j


def _cmd_transform(run: _Run) -> int:
    command = run.command
    pad = run.config.pad
    source = grid_read(command.input)
    if command.action == "forward":
        if isinstance(source, HyperSpectrum):
            raise ConfigError(f"{command.input} is already a spectrum")
        if isinstance(source, GridSignal):
            padded: GridSignal | AnalyticGrid = zero_pad(source, pad)
        else:
            padded = zero_pad_analytic(source, pad)
        result: Container = hft_forward(padded, run.workers)
    else:
        if not isinstance(source, HyperSpectrum):
            raise ConfigError(f"{command.input} is not a spectrum")
        shape = unpadded_shape(source.shape, pad)
        result = hft_inverse(source, run.workers)
        if pad > 1:
            result = crop_analytic(result, shape)
    run.write(command.output, result)
    return 0


def _cmd_analytic(run: _Run) -> int:
    run.write(run.command.output, _analytic(run, _read_grid(run.command.input)))
    return 0


def _cmd_hilbert(run: _Run) -> int:
    g = _read_grid(run.command.input)
    j = _direction_for(run.command, g.dim)
    shifted = partial_hilbert(zero_pad(g, run.config.pad), j, run.workers)
    if run.config.pad > 1:
        shifted = crop_grid(shifted, g.shape)
    run.write(run.command.output, shifted)
    return 0


def _cmd_amplitude(run: _Run) -> int:
    run.write(run.command.output, amplitude(_read_analytic(run, run.command.input)))
    return 0


def _cmd_phase(run: _Run) -> int:
    a = _read_analytic(run, run.command.input)
    p = phase(a, _direction_for(run.command, a.dim), run.config.phase_epsilon)
    run.write(run.command.output, p.values)
    if run.command.mask_path is not None:
        run.write(run.command.mask_path, p.values.with_data(p.undefined.astype(float)))
    return 0


def _cmd_freq(run: _Run) -> int:
    a = _read_analytic(run, run.command.input)
    j = _direction_for(run.command, a.dim)
    nu = inst_frequency(phase(a, j, run.config.phase_epsilon), j)
    run.write(run.command.output, nu.values)
    return 0


def _cmd_extend(run: _Run) -> int:
    s = grid_read(run.command.input)
    if not isinstance(s, HyperSpectrum):
        raise ConfigError(f"{run.command.input} is not a spectrum")
    heights = run.command.heights or ()
    if len(heights) == 1 and s.dim > 1:
        heights = heights * s.dim
    shape = unpadded_shape(s.shape, run.config.pad)
    extended = holo_extend_grid(s, heights, run.config.support_tolerance)
    if run.config.pad > 1:
        extended = crop_analytic(extended, shape)
    run.write(run.command.output, extended)
    return 0


def _bedrosian_defaults(dim: int, options: dict[str, Any]) -> dict[str, float | int]:
    n = options.get("n") or (1024 if dim == 1 else 256)
    half_width = options.get("half_width") or (16.0 if dim == 1 else 8.0)
    # commensurate: a whole number of periods over the box
    omega0 = options.get("omega0") or 2 * math.pi * (n // 5) / (2 * half_width)
    return {"n": n, "half_width": half_width, "omega0": omega0}


def _verify_bedrosian(run: _Run) -> int:
    options = run.command.options
    dim = options.get("dim", 1)
    if dim < 1:
        raise ConfigError(f"--dim must be positive, got {dim}")
    params = _bedrosian_defaults(dim, options)
    result = run_bedrosian(
        dim, params["n"], params["omega0"], options.get("sigma", 1.0), params["half_width"], run.config
    )
    violated = result.hypotheses_satisfied and result.max_relative > BEDROSIAN_TOLERANCE
    check = CheckResult(
        name="bedrosian",
        passed=not violated,
        measured=result.max_relative,
        tolerance=BEDROSIAN_TOLERANCE,
        detail=result.verdict,
    )
    run.report("verify bedrosian", [check], {"bedrosian": result.to_dict(), **params})
    if violated:
        raise VerificationFailure(
            "product theorem discrepancy above tolerance",
            detail=f"{result.max_relative:.3e} > {BEDROSIAN_TOLERANCE:.1e}",
        )
    return 0


def _verify_noncomm(run: _Run) -> int:
    options = run.command.options
    dim = options["dim"]
    spec = AlgebraSpec.named(options["algebra"], dim)
    result = ordering_search(dim, spec, options["placement"])
    sys.stdout.write(render_ordering_report(result))
    if run.config.report_json:
        check = CheckResult(
            name="ordering_exists",
            passed=result.exists,
            measured=float(len(result.consistent)),
            detail=f"{len(result.verdicts)} candidates",
        )
        report = run.writer.build_report(
            "verify noncomm", [check], collect_warnings(run.records), run.start, result.to_dict()
        )
        run.writer.write_json(report, run.config.report_json)
    if not result.exists:
        raise VerificationFailure(
            "no consistent ordering",
            detail=f"d={dim} algebra={spec.name} mode={result.mode}",
        )
    return 0


def _verify_selftest(run: _Run) -> int:
    report = run.report("verify selftest", run_selftest(run.config))
    if not report.passed:
        names = ", ".join(c.name for c in report.failed_checks)
        raise VerificationFailure(f"{len(report.failed_checks)} checks failed: {names}")
    return 0


def _cmd_verify(run: _Run) -> int:
    suites: dict[str, Callable[[_Run], int]] = {
        "bedrosian": _verify_bedrosian,
        "noncomm": _verify_noncomm,
        "selftest": _verify_selftest,
    }
    return suites[run.command.action](run)


def _cmd_demo(run: _Run) -> int:
    name = run.command.action
    n = run.command.options.get("n") or DEFAULT_SIZES[name]
    result = run_demo(name, n, run.workers)
    tolerance = run.config.demo_tolerance
    checks = [
        CheckResult(
            name=f"{name}_amplitude",
            passed=result.amplitude_error <= tolerance,
            measured=result.amplitude_error,
            tolerance=tolerance,
            detail=f"field={result.field} n={n}",
        )
    ]
    if result.component_error is not None:
        checks.append(
            CheckResult(
                name=f"{name}_component_100",
                passed=result.component_error <= tolerance,
                measured=result.component_error,
                tolerance=tolerance,
            )
        )
    if run.command.output is not None:
        run.write(run.command.output, result.amplitude)
    report = run.report(f"demo {name}", checks)
    if not report.passed:
        raise VerificationFailure(
            f"demo {name} error above tolerance",
            detail=f"{result.max_error:.3e} > {tolerance:.1e}",
        )
    return 0


COMMANDS: dict[str, Callable[[_Run], int]] = {
    "transform": _cmd_transform,
    "analytic": _cmd_analytic,
    "hilbert": _cmd_hilbert,
    "amplitude": _cmd_amplitude,
    "phase": _cmd_phase,
    "freq": _cmd_freq,
    "extend": _cmd_extend,
    "verify": _cmd_verify,
    "demo": _cmd_demo,
}


def run(command: CommandConfig, records: list | None = None) -> int:
    """Execute a validated command.

    Raises:
        HsasError: on any failure; its exit_code is the process status.
    """
    errors = command.validate()
    if errors:
        raise ConfigError("; ".join(errors))
    return COMMANDS[command.command](_Run(command, records if records is not None else []))


def main(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run the command, and map failures to exit codes."""
    with warnings.catch_warnings(record=True) as records:
        warnings.simplefilter("always")
        try:
            args = build_parser().parse_args(argv)
            status = run(CommandConfig.from_args(args), records)
        except HsasError as exc:
            status = exc.exit_code
            error = exc
        except Exception as exc:
            error = wrap_unexpected(exc)
            status = error.exit_code
        else:
            error = None
    for warning in collect_warnings(records):
        print(warning.one_line(), file=sys.stderr)
    if error is not None:
        print(error.one_line(), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
