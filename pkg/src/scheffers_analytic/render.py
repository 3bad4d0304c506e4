# SPDX-License-Identifier: MIT
"""Plain-text report rendering using Jinja2.

Renders verification reports and ordering-search reports from the
templates shipped in the package. The output is deterministic.

Component Contract:
    Input: VerificationReport, OrderingReport
    Output: text string
    Dependencies: jinja2, models, util.time
"""

from __future__ import annotations

from importlib.resources import files
from typing import TYPE_CHECKING, Any

from jinja2 import Environment, FileSystemLoader, TemplateNotFound

from scheffers_analytic.util.time import format_duration

if TYPE_CHECKING:
    from scheffers_analytic.models import VerificationReport


def get_template_dir() -> str:
    """Get the path to the templates directory.

    Returns:
        Path to templates directory.
    """
    templates = files("scheffers_analytic") / "templates"
    return str(templates)


def create_jinja_env() -> Environment:
    """Create and configure the Jinja2 environment.

    Returns:
        Configured Jinja2 environment.
    """
    env = Environment(
        loader=FileSystemLoader(get_template_dir()),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )

    # Add custom filters
    env.filters["duration"] = format_duration
    env.filters["sci"] = format_scientific
    env.filters["verdict_label"] = verdict_label

    return env


def format_scientific(value: float | None) -> str:
    """Format a measurement as "1.234e-09" (or "-" when missing)."""
    if value is None:
        return "-"
    return f"{value:.3e}"


def verdict_label(verdict: Any) -> str:
    return "consistent" if verdict.consistent else "inconsistent"


def render_verification_text(report: VerificationReport) -> str:
    """Render a verification or demo report.

    Args:
        report: Report data to render.

    Returns:
        Rendered text.
    """
    env = create_jinja_env()
    try:
        template = env.get_template("verify_report.txt.j2")
    except TemplateNotFound:
        return render_fallback_verification(report)
    return template.render(report=report)


def render_fallback_verification(report: VerificationReport) -> str:
    """Render a verification report without templates."""
    lines = [f"{report.run_meta.command} ({format_duration(report.run_meta.duration)})"]
    for check in report.checks:
        measured = format_scientific(check.measured)
        lines.append(f"{check.outcome.upper():<6} {check.name} measured={measured}")
    lines.extend(w.one_line() for w in report.warnings)
    passed = sum(1 for c in report.checks if c.passed)
    lines.append(f"{passed}/{len(report.checks)} checks passed")
    return "\n".join(lines) + "\n"


def render_ordering_text(report: Any) -> str:
    """Render an ordering-search report, one line per candidate.

    Args:
        report: An OrderingReport.

    Returns:
        Rendered text.
    """
    env = create_jinja_env()
    try:
        template = env.get_template("ordering_report.txt.j2")
    except TemplateNotFound:
        return render_fallback_ordering(report)
    return template.render(report=report)


def render_fallback_ordering(report: Any) -> str:
    """Render an ordering report without templates."""
    lines = [
        f"ordering search d={report.dim} algebra={report.spec.name} mode={report.mode}"
    ]
    for verdict in report.verdicts:
        mismatch = verdict.mismatch.describe() if verdict.mismatch else "-"
        lines.append(f"{verdict.candidate.encoding} {verdict_label(verdict)} {mismatch}")
    return "\n".join(lines) + "\n"
