# SPDX-License-Identifier: MIT
"""Report writer for verification and demo runs.

Assembles run metadata around a list of check results and writes a
stable JSON report with an embedded hash.

Component Contract:
    Input: CheckResult list, captured warnings, Config
    Output: VerificationReport, JSON file + artifact manifest
    Dependencies: models, util.fs, util.hashing, util.time
"""

from __future__ import annotations

import json
import platform
import sys
from datetime import datetime
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np
import scipy

from scheffers_analytic.__about__ import __version__
from scheffers_analytic.models import (
    ArtifactEntry,
    CheckResult,
    RunMeta,
    VerificationReport,
)
from scheffers_analytic.util.fs import atomic_write
from scheffers_analytic.util.hashing import compute_file_sha256, compute_sha256
from scheffers_analytic.util.time import elapsed_seconds, utc_now

if TYPE_CHECKING:
    from scheffers_analytic.errors import RunWarning
    from scheffers_analytic.options import Config


class ReportWriter:
    """Assembles and writes run reports.

    Attributes:
        config: Resolved configuration.
        artifacts: Files written during the run, in order.
    """

    def __init__(self, config: Config) -> None:
        """Initialize the report writer.

        Args:
            config: Resolved configuration.
        """
        self.config = config
        self.artifacts: list[ArtifactEntry] = []

    def track_artifact(self, path: str | Path) -> ArtifactEntry:
        """Record a file that was written outside the writer (e.g. a grid)."""
        entry = ArtifactEntry(
            path=str(path),
            sha256=compute_file_sha256(path),
            size_bytes=Path(path).stat().st_size,
        )
        self.artifacts.append(entry)
        return entry

    def build_report(
        self,
        command: str,
        checks: list[CheckResult],
        warnings: list[RunWarning] | None = None,
        start_time: datetime | None = None,
        extra: dict[str, Any] | None = None,
    ) -> VerificationReport:
        """Assemble a report without writing it.

        Args:
            command: Subcommand label (e.g. "verify selftest").
            checks: Check outcomes in execution order.
            warnings: Warnings captured during the run.
            start_time: Run start time (now if omitted).
            extra: Command-specific payload.

        Returns:
            The assembled VerificationReport.
        """
        start = start_time or utc_now()
        end = utc_now()
        run_meta = RunMeta(
            command=command,
            start_time=start.isoformat(),
            end_time=end.isoformat(),
            duration=elapsed_seconds(start, end),
            tool_version=__version__,
            python_version=sys.version.split()[0],
            numpy_version=np.__version__,
            scipy_version=scipy.__version__,
            platform=platform.platform(),
            threads=self.config.threads,
            config_hash=self.config.config_hash(),
        )
        return VerificationReport(
            run_meta=run_meta,
            checks=list(checks),
            warnings=list(warnings or []),
            artifacts=self.artifacts,
            extra=dict(extra or {}),
        )

    def write_json(self, report: VerificationReport, path: str | Path) -> None:
        """Write JSON report to file.

        Args:
            report: Report to write.
            path: Output path.
        """
        report_dict = report.to_dict()
        json_bytes = json.dumps(report_dict, indent=2, sort_keys=True).encode("utf-8")

        # Hash the report without its own hash, then embed it
        sha256 = compute_sha256(json_bytes)
        report.sha256 = sha256
        report_dict["sha256"] = sha256
        json_bytes = json.dumps(report_dict, indent=2, sort_keys=True).encode("utf-8")

        atomic_write(path, json_bytes)
        self.artifacts.append(
            ArtifactEntry(
                path=str(path),
                sha256=sha256,
                size_bytes=len(json_bytes),
            )
        )
