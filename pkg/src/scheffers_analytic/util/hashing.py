# SPDX-License-Identifier: MIT
"""Hashing utilities for artifact provenance."""

from __future__ import annotations

import hashlib
from pathlib import Path


def compute_sha256(content: bytes) -> str:
    """Compute SHA256 hash of content.

    Args:
        content: Bytes to hash.

    Returns:
        Hex digest string.
    """
    return hashlib.sha256(content).hexdigest()


def compute_file_sha256(path: str | Path) -> str:
    """Compute SHA256 hash of a file, streaming in chunks."""
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()
