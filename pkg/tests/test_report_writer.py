# SPDX-License-Identifier: MIT
"""Tests for scheffers_analytic.report_writer module."""

import json
from datetime import UTC, datetime

import numpy as np

from scheffers_analytic.__about__ import __version__
from scheffers_analytic.errors import RunWarning, WarningCode
from scheffers_analytic.models import CheckResult
from scheffers_analytic.options import Config
from scheffers_analytic.report_writer import ReportWriter
from scheffers_analytic.util.hashing import compute_sha256


class TestReportWriter:
    """Tests for ReportWriter class."""

    def test_create_writer(self):
        """Writer should initialize with config."""
        config = Config()
        writer = ReportWriter(config)
        assert writer.config is config
        assert writer.artifacts == []

    def test_build_report_metadata(self):
        """Run metadata records versions, threads and the config hash."""
        config = Config(threads=3)
        start = datetime(2024, 1, 1, tzinfo=UTC)
        report = ReportWriter(config).build_report(
            "verify selftest", [CheckResult("a", True)], start_time=start
        )
        meta = report.run_meta
        assert meta.command == "verify selftest"
        assert meta.start_time == "2024-01-01T00:00:00+00:00"
        assert meta.duration > 0
        assert meta.tool_version == __version__
        assert meta.numpy_version == np.__version__
        assert meta.threads == 3
        assert meta.config_hash == config.config_hash()

    def test_build_report_payload(self):
        """Warnings and extra data are copied into the report."""
        warning = RunWarning(WarningCode.W001_PHASE_MOSTLY_UNDEFINED, "undefined")
        report = ReportWriter(Config()).build_report(
            "demo cube", [], warnings=[warning], extra={"n": 64}
        )
        assert report.warnings == [warning]
        assert report.extra == {"n": 64}
        assert report.passed

    def test_track_artifact(self, tmp_path):
        """Tracked files carry their digest and size."""
        path = tmp_path / "amp.hsas"
        path.write_bytes(b"HSAS1 payload")
        writer = ReportWriter(Config())
        entry = writer.track_artifact(path)
        assert entry.sha256 == compute_sha256(b"HSAS1 payload")
        assert entry.size_bytes == 13
        assert writer.artifacts == [entry]


class TestWriteJson:
    """Tests for JSON report output."""

    def test_embedded_hash(self, tmp_path):
        """The embedded sha256 is the digest of the report without it."""
        writer = ReportWriter(Config())
        report = writer.build_report("verify bedrosian", [CheckResult("bedrosian", True, 1e-9, 1e-6)])
        path = tmp_path / "reports" / "bedrosian.json"
        writer.write_json(report, path)

        data = json.loads(path.read_text())
        sha = data.pop("sha256")
        assert sha == report.sha256
        assert sha == compute_sha256(json.dumps(data, indent=2, sort_keys=True).encode("utf-8"))
        assert data["checks"][0]["measured"] == 1e-9

    def test_report_listed_as_artifact(self, tmp_path):
        """The written report is appended to the artifact manifest."""
        writer = ReportWriter(Config())
        path = tmp_path / "selftest.json"
        writer.write_json(writer.build_report("verify selftest", []), path)
        assert writer.artifacts[-1].path == str(path)
        assert writer.artifacts[-1].size_bytes == path.stat().st_size
