# SPDX-License-Identifier: MIT
"""Configuration for scheffers-analytic.

This module defines the Config dataclass and handles loading configuration
from pyproject.toml and command-line overrides.

Component Contract:
    Input: pyproject.toml [tool.hsas], CLI overrides
    Output: Config dataclass with validated options
    Dependencies: tomllib, errors
"""

from __future__ import annotations

import tomllib
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any

from scheffers_analytic.errors import WarningCode, emit_warning
from scheffers_analytic.util.hashing import compute_sha256

TOOL_SECTION = "hsas"


@dataclass
class Config:
    """Numerical and runtime settings shared by every command.

    All library entry points used by the CLI take their tolerances from this
    object rather than from module globals.

    Attributes:
        # Numerical tolerances
        phase_epsilon: Relative amplitude below which a phase is undefined.
        support_tolerance: Allowed negative-bin magnitude relative to the norm.
        invert_rcond: Smallest singular-value ratio accepted by sch_inverse.
        band_threshold: Relative magnitude that makes a bin significant.
        quadrature_tolerance: Accepted change between quadrature resolutions.
        quadrature_max_refinements: Halvings before quadrature gives up.

        # Runtime
        threads: FFT worker count.
        pad: Zero-padding factor applied per axis before transforms.

        # Quadrature resolutions
        quadrature_nodes: Starting x' nodes per axis for fj_quadrature.
        cauchy_nodes: Nodes per circle for Cauchy integrals.

        # Verification
        demo_tolerance: Max absolute error accepted by demos.

        # Output
        report_json: Optional path for a JSON report.

        # Internal
        root: Directory whose pyproject.toml was read.
    """

    # Numerical tolerances
    phase_epsilon: float = 1e-9
    support_tolerance: float = 1e-9
    invert_rcond: float = 1e-12
    band_threshold: float = 1e-10
    quadrature_tolerance: float = 1e-8
    quadrature_max_refinements: int = 4

    # Runtime
    threads: int = 1
    pad: int = 1

    # Quadrature resolutions
    quadrature_nodes: int = 400
    cauchy_nodes: int = 64

    # Verification
    demo_tolerance: float = 1e-3

    # Output
    report_json: str | None = None

    # Internal
    root: Path | None = None

    def validate(self) -> list[str]:
        """Validate configuration and return list of errors.

        Returns:
            List of validation error messages (empty if valid).
        """
        errors = []

        # Tolerances must be positive
        for name in (
            "phase_epsilon",
            "support_tolerance",
            "invert_rcond",
            "band_threshold",
            "quadrature_tolerance",
            "demo_tolerance",
        ):
            value = getattr(self, name)
            if not isinstance(value, int | float) or not value > 0:
                errors.append(f"{name} must be a positive number, got {value!r}")

        if self.quadrature_max_refinements < 0:
            errors.append("quadrature_max_refinements must be 0 or positive")

        # Runtime
        if self.threads < 1:
            errors.append("threads must be at least 1")
        if self.pad < 1:
            errors.append("pad must be at least 1")

        # Resolutions
        if self.quadrature_nodes < 3:
            errors.append("quadrature_nodes must be at least 3")
        if self.cauchy_nodes < 1:
            errors.append("cauchy_nodes must be at least 1")

        return errors

    def config_hash(self) -> str:
        """Short digest of the settings, recorded in run metadata."""
        settings = {k: v for k, v in asdict(self).items() if k != "root"}
        return compute_sha256(repr(sorted(settings.items())).encode("utf-8"))[:16]


def get_default_config() -> Config:
    """Get a Config instance with all defaults.

    Returns:
        Config instance with default values.
    """
    return Config()


def _config_keys() -> set[str]:
    return {f.name for f in fields(Config) if f.name != "root"}


def read_pyproject_section(root: Path) -> dict[str, Any]:
    """Read [tool.hsas] from root/pyproject.toml.

    A missing file yields an empty section; an unreadable one warns (W301)
    and yields an empty section too.
    """
    pyproject_path = root / "pyproject.toml"
    if not pyproject_path.exists():
        return {}
    try:
        with open(pyproject_path, "rb") as f:
            pyproject_data = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        emit_warning(WarningCode.W301_INVALID_CONFIG, f"{pyproject_path}: {exc}")
        return {}
    section = pyproject_data.get("tool", {}).get(TOOL_SECTION, {})
    if not isinstance(section, dict):
        emit_warning(WarningCode.W301_INVALID_CONFIG, f"[tool.{TOOL_SECTION}] is not a table")
        return {}
    return section


def load_config(
    root: str | Path | None = None, overrides: dict[str, Any] | None = None
) -> Config:
    """Load Config from pyproject.toml [tool.hsas] and CLI overrides.

    CLI overrides take precedence over pyproject.toml options; ``None``
    override values mean "not given".

    Args:
        root: Directory holding pyproject.toml (current directory if None).
        overrides: Values from the command line.

    Returns:
        Populated Config instance.
    """
    cfg = Config()
    cfg.root = Path(root) if root is not None else Path.cwd()
    known = _config_keys()

    for key, value in read_pyproject_section(cfg.root).items():
        if key not in known:
            emit_warning(WarningCode.W302_UNKNOWN_OPTION, f"[tool.{TOOL_SECTION}] {key}")
            continue
        setattr(cfg, key, value)

    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in known:
            emit_warning(WarningCode.W302_UNKNOWN_OPTION, key)
            continue
        setattr(cfg, key, value)

    return cfg
