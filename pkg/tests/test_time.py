# SPDX-License-Identifier: MIT
"""Tests for scheffers_analytic.util.time module."""

from datetime import UTC, datetime, timedelta

import pytest

from scheffers_analytic.util.time import elapsed_seconds, format_duration, utc_now


class TestUtcNow:
    """Tests for utc_now function."""

    def test_has_utc_timezone(self):
        """Returns datetime with UTC timezone."""
        assert utc_now().tzinfo == UTC

    def test_is_current_time(self):
        """Returns current time (within tolerance)."""
        before = datetime.now(UTC)
        result = utc_now()
        after = datetime.now(UTC)
        assert before <= result <= after


class TestElapsedSeconds:
    """Tests for elapsed_seconds function."""

    def test_explicit_end(self):
        """Difference of two instants in seconds."""
        start = datetime(2024, 1, 1, tzinfo=UTC)
        assert elapsed_seconds(start, start + timedelta(seconds=2.5)) == 2.5

    def test_default_end_is_now(self):
        """Without an end the duration runs up to now."""
        assert elapsed_seconds(utc_now() - timedelta(seconds=1)) >= 1.0


class TestFormatDuration:
    """Tests for format_duration function."""

    @pytest.mark.parametrize(
        ("seconds", "expected"),
        [
            (0.00085, "850us"),
            (0.0123, "12.3ms"),
            (4.2, "4.20s"),
            (125.0, "2m 5.0s"),
        ],
    )
    def test_units(self, seconds, expected):
        """Each magnitude gets its own unit."""
        assert format_duration(seconds) == expected
