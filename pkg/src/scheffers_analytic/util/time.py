# SPDX-License-Identifier: MIT
"""Time utilities for run metadata."""

from __future__ import annotations

from datetime import UTC, datetime


def utc_now() -> datetime:
    """Get current UTC time."""
    return datetime.now(UTC)


def elapsed_seconds(start: datetime, end: datetime | None = None) -> float:
    """Seconds between start and end (now when end is omitted)."""
    return ((end or utc_now()) - start).total_seconds()


def format_duration(seconds: float) -> str:
    """Short human-readable duration: "850us", "12.3ms", "4.20s" or "2m 5.0s"."""
    if seconds < 0.001:
        return f"{seconds * 1_000_000:.0f}us"
    if seconds < 1:
        return f"{seconds * 1000:.1f}ms"
    if seconds < 60:
        return f"{seconds:.2f}s"
    minutes, rest = divmod(seconds, 60)
    return f"{int(minutes)}m {rest:.1f}s"
