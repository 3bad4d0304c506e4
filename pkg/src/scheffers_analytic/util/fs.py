# SPDX-License-Identifier: MIT
"""Filesystem utilities.

Component Contract:
    Input: target paths, byte content
    Output: files written atomically (temp file then rename)
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from scheffers_analytic.errors import GridIOError, WarningCode, emit_warning


def ensure_parent_dir(path: str | Path) -> None:
    """Create the parent directory of a path if it is missing.

    Args:
        path: File path.

    Raises:
        GridIOError: The directory cannot be created.
    """
    dir_path = Path(path).parent
    if dir_path.exists():
        return
    try:
        dir_path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise GridIOError(f"cannot create directory {dir_path}: {exc}") from exc
    emit_warning(WarningCode.W201_OUTPUT_DIR_CREATED, str(dir_path))


def atomic_write(path: str | Path, content: bytes) -> None:
    """Write content atomically (temp file then rename).

    Falls back to a direct write when the rename is not possible.

    Args:
        path: Target file path.
        content: Content to write.

    Raises:
        GridIOError: Neither the atomic nor the direct write succeeded.
    """
    ensure_parent_dir(path)
    dir_path = Path(path).parent
    try:
        fd, temp_path = tempfile.mkstemp(dir=dir_path, suffix=".tmp")
        try:
            os.write(fd, content)
        finally:
            os.close(fd)
        os.replace(temp_path, path)
        return
    except OSError:
        emit_warning(WarningCode.W202_ATOMIC_WRITE_FAILED, str(path))

    try:
        Path(path).write_bytes(content)
    except OSError as exc:
        raise GridIOError(f"cannot write {path}: {exc}") from exc


def read_bytes(path: str | Path) -> bytes:
    """Read a whole file, mapping OS failures to GridIOError."""
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise GridIOError(f"cannot read {path}: {exc}") from exc
