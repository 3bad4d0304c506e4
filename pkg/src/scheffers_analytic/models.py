# SPDX-License-Identifier: MIT
"""Data models for verification, demo and search reports.

All models are designed for deterministic JSON serialization.

Component Contracts:
- verification -> list[CheckResult]: acceptance checks -> pass/fail records
- demos -> CheckResult: closed-form comparison -> error record
- report_writer -> JSON + artifact manifest: VerificationReport -> files
- render -> text: VerificationReport / OrderingReport -> plain text
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from scheffers_analytic.errors import RunWarning

# Schema version for report format compatibility
SCHEMA_VERSION = "1.0.0"


@dataclass
class CheckResult:
    """Outcome of a single numerical check.

    Attributes:
        name: Stable check identifier (e.g., "positive_support").
        passed: Whether the measured value met the tolerance.
        measured: Worst observed error or discrepancy.
        tolerance: Threshold the measurement was compared against.
        duration: Wall time in seconds.
        detail: Optional human-readable context.
    """

    name: str
    passed: bool
    measured: float | None = None
    tolerance: float | None = None
    duration: float = 0.0
    detail: str | None = None

    @property
    def outcome(self) -> str:
        return "passed" if self.passed else "failed"

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        result: dict[str, Any] = {
            "name": self.name,
            "outcome": self.outcome,
            "duration": self.duration,
        }
        if self.measured is not None:
            result["measured"] = self.measured
        if self.tolerance is not None:
            result["tolerance"] = self.tolerance
        if self.detail:
            result["detail"] = self.detail
        return result


@dataclass
class ArtifactEntry:
    """A file written during a run.

    Attributes:
        path: File path as given on the command line.
        sha256: SHA256 hash of the file contents.
        size_bytes: File size in bytes.
    """

    path: str
    sha256: str
    size_bytes: int = 0

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "path": self.path,
            "sha256": self.sha256,
            "size_bytes": self.size_bytes,
        }


@dataclass
class RunMeta:
    """Metadata about a CLI run.

    Attributes:
        command: Subcommand that produced the report.
        start_time: UTC start time (ISO 8601).
        end_time: UTC end time (ISO 8601).
        duration: Total duration in seconds.
        tool_version: scheffers-analytic version string.
        python_version: Python version string.
        numpy_version: numpy version string.
        scipy_version: scipy version string.
        platform: OS platform string.
        threads: FFT worker count used.
        config_hash: Hash of the resolved configuration.
    """

    command: str = ""
    start_time: str = ""
    end_time: str = ""
    duration: float = 0.0
    tool_version: str = ""
    python_version: str = ""
    numpy_version: str = ""
    scipy_version: str = ""
    platform: str = ""
    threads: int = 1
    config_hash: str | None = None

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        result: dict[str, Any] = {
            "command": self.command,
            "start_time": self.start_time,
            "end_time": self.end_time,
            "duration": self.duration,
            "tool_version": self.tool_version,
            "python_version": self.python_version,
            "numpy_version": self.numpy_version,
            "scipy_version": self.scipy_version,
            "platform": self.platform,
            "threads": self.threads,
        }
        if self.config_hash:
            result["config_hash"] = self.config_hash
        return result


@dataclass
class VerificationReport:
    """Root structure of a verification or demo report.

    Attributes:
        schema_version: Version of the report schema.
        run_meta: Metadata about the run.
        checks: Individual check outcomes, in execution order.
        warnings: Warnings captured while the checks ran.
        artifacts: Files written alongside the report.
        extra: Command-specific payload (ordering report, Bedrosian numbers).
        sha256: SHA256 of the serialized report (set by the writer).
    """

    schema_version: str = SCHEMA_VERSION
    run_meta: RunMeta = field(default_factory=RunMeta)
    checks: list[CheckResult] = field(default_factory=list)
    warnings: list[RunWarning] = field(default_factory=list)
    artifacts: list[ArtifactEntry] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)
    sha256: str | None = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        result: dict[str, Any] = {
            "schema_version": self.schema_version,
            "run_meta": self.run_meta.to_dict(),
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "warnings": [w.to_dict() for w in self.warnings],
            "artifacts": [a.to_dict() for a in self.artifacts],
        }
        if self.extra:
            result["extra"] = self.extra
        if self.sha256:
            result["sha256"] = self.sha256
        return result
