# SPDX-License-Identifier: MIT
"""Centralized error and warning codes for scheffers-analytic.

Every failure raised by the library derives from HsasError and carries both a
stable code and the CLI exit status it maps to. Soft conditions are reported
through ``warnings.warn`` with a WarningCode so callers (the CLI in particular)
can collect them as RunWarning records.

Exit status categories:
    2: bad configuration or usage
    3: grid file I/O
    4: numerical precondition
    5: verification failure
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum


class ErrorCode(str, Enum):
    """Error codes.

    Naming convention: E{category}{number}
    Categories:
      - 2xx: Config / usage
      - 3xx: Grid I/O
      - 4xx: Numerical preconditions
      - 5xx: Verification
    """

    # Config / usage (2xx)
    E201_INVALID_CONFIG = "E201"
    E202_DIMENSION_MISMATCH = "E202"
    E203_AXIS_OUT_OF_RANGE = "E203"
    E204_UNSUPPORTED_DIMENSION = "E204"

    # Grid I/O (3xx)
    E301_IO = "E301"
    E302_MAGIC_MISMATCH = "E302"
    E303_TRUNCATED_PAYLOAD = "E303"
    E304_SHAPE_MISMATCH = "E304"
    E305_HEADER_PARSE = "E305"

    # Numerical (4xx)
    E401_NUMERICAL = "E401"
    E402_ZERO_DIVISOR = "E402"
    E403_NON_FINITE = "E403"
    E404_NEGATIVE_SUPPORT = "E404"
    E405_CONVERGENCE = "E405"
    E406_STEP_TOO_LARGE = "E406"
    E407_BOUNDARY_SHELL = "E407"
    E408_POLE = "E408"
    E409_ODD_SAMPLE_COUNT = "E409"
    E410_NON_POSITIVE_HEIGHT = "E410"

    # Verification (5xx)
    E501_VERIFICATION_FAILED = "E501"


class HsasError(Exception):
    """Base class for all library errors."""

    exit_code: int = 1
    code: ErrorCode = ErrorCode.E401_NUMERICAL

    def __init__(self, message: str, detail: str | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.detail = detail

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        result = {
            "code": self.code.value,
            "kind": type(self).__name__,
            "exit_code": self.exit_code,
            "message": self.message,
        }
        if self.detail:
            result["detail"] = self.detail
        return result

    def one_line(self) -> str:
        """Machine-parseable single-line rendering used on stderr."""
        text = self.message.replace('"', "'").replace("\n", " ")
        return (
            f"error exit={self.exit_code} code={self.code.value} "
            f'kind={type(self).__name__} message="{text}"'
        )


# Config / usage


class ConfigError(HsasError, ValueError):
    exit_code = 2
    code = ErrorCode.E201_INVALID_CONFIG


class DimensionMismatchError(ConfigError):
    code = ErrorCode.E202_DIMENSION_MISMATCH


class AxisOutOfRangeError(ConfigError):
    code = ErrorCode.E203_AXIS_OUT_OF_RANGE


class UnsupportedDimensionError(ConfigError):
    code = ErrorCode.E204_UNSUPPORTED_DIMENSION


# Grid I/O


class GridIOError(HsasError, OSError):
    exit_code = 3
    code = ErrorCode.E301_IO


class MagicMismatchError(GridIOError):
    code = ErrorCode.E302_MAGIC_MISMATCH


class TruncatedPayloadError(GridIOError):
    code = ErrorCode.E303_TRUNCATED_PAYLOAD


class ShapeMismatchError(GridIOError):
    code = ErrorCode.E304_SHAPE_MISMATCH


class HeaderParseError(GridIOError):
    code = ErrorCode.E305_HEADER_PARSE


# Numerical preconditions


class NumericalError(HsasError, ArithmeticError):
    exit_code = 4
    code = ErrorCode.E401_NUMERICAL


class ZeroDivisorError(NumericalError, ZeroDivisionError):
    """Element is a zero divisor (singular multiplication matrix)."""

    code = ErrorCode.E402_ZERO_DIVISOR


class NonFiniteSampleError(NumericalError):
    code = ErrorCode.E403_NON_FINITE


class NegativeSupportError(NumericalError):
    """Spectrum has energy on strictly negative frequency bins."""

    code = ErrorCode.E404_NEGATIVE_SUPPORT


class ConvergenceError(NumericalError):
    code = ErrorCode.E405_CONVERGENCE


class StepTooLargeError(NumericalError):
    code = ErrorCode.E406_STEP_TOO_LARGE


class BoundaryShellError(NumericalError):
    """Evaluation point lies on the integration shell."""

    code = ErrorCode.E407_BOUNDARY_SHELL


class PoleError(NumericalError):
    code = ErrorCode.E408_POLE


class OddSampleCountError(NumericalError):
    code = ErrorCode.E409_ODD_SAMPLE_COUNT


class NonPositiveHeightError(NumericalError):
    code = ErrorCode.E410_NON_POSITIVE_HEIGHT


# Verification


class VerificationFailure(HsasError):
    exit_code = 5
    code = ErrorCode.E501_VERIFICATION_FAILED


def wrap_unexpected(exc: Exception) -> HsasError:
    """Map an exception from outside the library onto the error hierarchy.

    OS-level failures become GridIOError (E301); anything else, numpy and
    scipy errors included, becomes NumericalError (E401).
    """
    if isinstance(exc, HsasError):
        return exc
    kind = GridIOError if isinstance(exc, OSError) else NumericalError
    wrapped = kind(f"{type(exc).__name__}: {exc}")
    wrapped.__cause__ = exc
    return wrapped


class WarningCode(str, Enum):
    """Warning codes.

    Naming convention: W{category}{number}
    Categories:
      - 0xx: Numerical
      - 1xx: Transform / padding
      - 2xx: Output/IO-related
      - 3xx: Config-related
    """

    # Numerical warnings (0xx)
    W001_PHASE_MOSTLY_UNDEFINED = "W001"
    W002_MOBIUS_ORIENTATION = "W002"

    # Transform warnings (1xx)
    W101_PADDING_CROPPED_ENERGY = "W101"

    # Output/IO warnings (2xx)
    W201_OUTPUT_DIR_CREATED = "W201"
    W202_ATOMIC_WRITE_FAILED = "W202"

    # Config warnings (3xx)
    W301_INVALID_CONFIG = "W301"
    W302_UNKNOWN_OPTION = "W302"


class HsasWarning(UserWarning):
    """Category used for every warning emitted by the library."""

    def __init__(self, code: WarningCode, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunWarning:
    """A warning captured during a run.

    Attributes:
        code: The warning code enum value.
        message: Human-readable description of the warning.
        detail: Optional additional context (e.g., file path, axis).
    """

    code: WarningCode | str
    message: str
    detail: str | None = None

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        code_val = (
            self.code.value if isinstance(self.code, WarningCode) else str(self.code)
        )
        result = {
            "code": code_val,
            "message": self.message,
        }
        if self.detail:
            result["detail"] = self.detail
        return result

    def one_line(self) -> str:
        code_val = (
            self.code.value if isinstance(self.code, WarningCode) else str(self.code)
        )
        text = self.message if not self.detail else f"{self.message} ({self.detail})"
        return f'warning code={code_val} message="{text}"'


WARNING_MESSAGES = {
    WarningCode.W001_PHASE_MOSTLY_UNDEFINED: (
        "Phase is undefined on more than half of the samples."
    ),
    WarningCode.W002_MOBIUS_ORIENTATION: (
        "Mobius parameter has non-positive e_i part; the disk maps to the lower half-plane."
    ),
    WarningCode.W101_PADDING_CROPPED_ENERGY: (
        "Zero-padded transform left energy outside the cropped region."
    ),
    WarningCode.W201_OUTPUT_DIR_CREATED: ("Output directory was created."),
    WarningCode.W202_ATOMIC_WRITE_FAILED: (
        "Atomic write failed; fell back to direct write."
    ),
    WarningCode.W301_INVALID_CONFIG: ("Invalid configuration ignored."),
    WarningCode.W302_UNKNOWN_OPTION: ("Unknown configuration option ignored."),
}


def make_warning(code: WarningCode, detail: str | None = None) -> RunWarning:
    """Create a warning with the standard message for the given code.

    Args:
        code: The warning code.
        detail: Optional additional context.

    Returns:
        A RunWarning instance with the standard message.
    """
    return RunWarning(
        code=code,
        message=WARNING_MESSAGES.get(code, "Unknown warning."),
        detail=detail,
    )


def emit_warning(
    code: WarningCode, detail: str | None = None, stacklevel: int = 2
) -> None:
    """Emit a coded warning through the ``warnings`` machinery."""
    warning = make_warning(code, detail)
    text = warning.message if not detail else f"{warning.message} ({detail})"
    warnings.warn(HsasWarning(code, text), stacklevel=stacklevel + 1)


def collect_warnings(records: list[warnings.WarningMessage]) -> list[RunWarning]:
    """Convert recorded warnings into RunWarning entries.

    Library warnings keep their code; foreign warnings are kept under
    their category name so nothing recorded is silently lost.
    """
    collected = []
    for record in records:
        message = record.message
        if isinstance(message, HsasWarning):
            collected.append(RunWarning(code=message.code, message=str(message)))
        else:
            collected.append(
                RunWarning(code=record.category.__name__, message=str(message))
            )
    return collected
