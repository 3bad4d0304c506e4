# SPDX-License-Identifier: MIT
"""HSAS1 binary files and CSV import/export for grid containers.

HSAS1 layout: one UTF-8 header line

    HSAS1 kind=<grid|spectrum|analytic> dim=<d> shape=<N1,...,Nd>
          origin=<o1,...,od> spacing=<s1,...,sd> components=<m>

(single line, newline terminated) followed by m * prod(N) little-endian
binary64 values, components in ascending bitmask order, each row-major.
Floats in the header are written with ``repr`` so they round-trip exactly.

Component Contract:
    Input: GridSignal | HyperSpectrum | AnalyticGrid, file paths
    Output: byte-exact files and containers
    Dependencies: numpy, grid, util.fs, errors
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

import numpy as np

from scheffers_analytic.errors import (
    HeaderParseError,
    MagicMismatchError,
    ShapeMismatchError,
    TruncatedPayloadError,
    UnsupportedDimensionError,
)
from scheffers_analytic.grid import AnalyticGrid, GridSignal, HyperSpectrum
from scheffers_analytic.util.fs import atomic_write, read_bytes

MAGIC = "HSAS1"
PAYLOAD_DTYPE = np.dtype("<f8")
HEADER_KEYS = ("kind", "dim", "shape", "origin", "spacing", "components")

Container = GridSignal | HyperSpectrum | AnalyticGrid

_KINDS: dict[str, type] = {
    "grid": GridSignal,
    "spectrum": HyperSpectrum,
    "analytic": AnalyticGrid,
}


def container_kind(g: Container) -> str:
    if isinstance(g, HyperSpectrum):
        return "spectrum"
    if isinstance(g, AnalyticGrid):
        return "analytic"
    return "grid"


def _join(values: tuple) -> str:
    return ",".join(repr(v) for v in values)


def encode_header(g: Container) -> str:
    components = 1 if isinstance(g, GridSignal) else 1 << g.dim
    return (
        f"{MAGIC} kind={container_kind(g)} dim={g.dim} "
        f"shape={_join(g.shape)} origin={_join(g.origin)} "
        f"spacing={_join(g.spacing)} components={components}\n"
    )


def encode(g: Container) -> bytes:
    """Serialize a container to HSAS1 bytes."""
    payload = g.data if isinstance(g, GridSignal) else g.components
    body = np.ascontiguousarray(payload).astype(PAYLOAD_DTYPE, copy=False)
    return encode_header(g).encode("utf-8") + body.tobytes(order="C")


def grid_write(path: str | Path, g: Container) -> None:
    """Write a container as an HSAS1 file (atomically)."""
    atomic_write(path, encode(g))


def _parse_header(line: bytes) -> dict[str, str]:
    try:
        text = line.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise HeaderParseError("header is not valid UTF-8") from exc
    tokens = text.split()
    if not tokens or tokens[0] != MAGIC:
        raise MagicMismatchError(f"not an {MAGIC} file")
    fields: dict[str, str] = {}
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise HeaderParseError(f"malformed header token {token!r}")
        fields[key] = value
    missing = [k for k in HEADER_KEYS if k not in fields]
    if missing:
        raise HeaderParseError(f"header is missing {', '.join(missing)}")
    return fields


def _parse_numbers(text: str, kind: type, name: str) -> tuple:
    try:
        return tuple(kind(v) for v in text.split(",") if v != "")
    except ValueError as exc:
        raise HeaderParseError(f"bad {name} value {text!r}") from exc


def _parse_count(text: str, name: str) -> int:
    values = _parse_numbers(text, int, name)
    if len(values) != 1:
        raise HeaderParseError(f"{name} must be a single integer, got {text!r}")
    return int(values[0])


def decode(content: bytes) -> Container:
    """Parse HSAS1 bytes.

    Raises:
        MagicMismatchError: content does not start with the magic.
        HeaderParseError: header fields are malformed.
        ShapeMismatchError: header fields disagree with each other or the
            payload is longer than declared.
        TruncatedPayloadError: payload is shorter than declared.
    """
    if not content.startswith(MAGIC.encode("ascii")):
        raise MagicMismatchError(f"not an {MAGIC} file")
    newline = content.find(b"\n")
    if newline < 0:
        raise HeaderParseError("header line is not terminated")
    fields = _parse_header(content[:newline])

    kind = fields["kind"]
    if kind not in _KINDS:
        raise HeaderParseError(f"unknown kind {kind!r}")
    dim = _parse_count(fields["dim"], "dim")
    shape = _parse_numbers(fields["shape"], int, "shape")
    origin = _parse_numbers(fields["origin"], float, "origin")
    spacing = _parse_numbers(fields["spacing"], float, "spacing")
    components = _parse_count(fields["components"], "components")

    if dim < 1 or len(shape) != dim or len(origin) != dim or len(spacing) != dim:
        raise ShapeMismatchError(
            f"dim={dim} disagrees with shape/origin/spacing lengths "
            f"{len(shape)}/{len(origin)}/{len(spacing)}"
        )
    if any(n < 1 for n in shape):
        raise ShapeMismatchError(f"shape entries must be >= 1: {shape}")
    expected_components = 1 if kind == "grid" else 1 << dim
    if components != expected_components:
        raise ShapeMismatchError(
            f"kind={kind} with dim={dim} needs {expected_components} "
            f"components, header says {components}"
        )

    payload = content[newline + 1 :]
    expected = components * int(np.prod(shape)) * PAYLOAD_DTYPE.itemsize
    if len(payload) < expected:
        raise TruncatedPayloadError(
            f"payload has {len(payload)} bytes, header declares {expected}"
        )
    if len(payload) > expected:
        raise ShapeMismatchError(
            f"payload has {len(payload)} bytes, header declares {expected}"
        )

    values = np.frombuffer(payload, dtype=PAYLOAD_DTYPE).astype(np.float64)
    if kind == "grid":
        return GridSignal(origin, spacing, values.reshape(shape))
    return _KINDS[kind](origin, spacing, values.reshape((components, *shape)))


def grid_read(path: str | Path) -> Container:
    """Read an HSAS1 file."""
    return decode(read_bytes(path))


CSV_MAX_DIM = 2


def grid_export_csv(path: str | Path, g: GridSignal) -> None:
    """Write one ``i1,...,id,value`` line per sample (d <= 2)."""
    if g.dim > CSV_MAX_DIM:
        raise UnsupportedDimensionError(
            f"CSV export supports d <= {CSV_MAX_DIM}, got {g.dim}"
        )
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for index in np.ndindex(*g.shape):
        writer.writerow([*index, repr(float(g.data[index]))])
    atomic_write(path, buffer.getvalue().encode("utf-8"))


def grid_import_csv(
    path: str | Path,
    origin: tuple[float, ...] | None = None,
    spacing: tuple[float, ...] | None = None,
) -> GridSignal:
    """Read a CSV grid; shape is inferred from the largest indices.

    Raises:
        HeaderParseError: a row is malformed.
        ShapeMismatchError: rows disagree on dimension or samples are missing.
    """
    text = read_bytes(path).decode("utf-8")
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise ShapeMismatchError(f"{path} holds no samples")
    dim = len(rows[0]) - 1
    if not 1 <= dim <= CSV_MAX_DIM:
        raise UnsupportedDimensionError(
            f"CSV import supports d <= {CSV_MAX_DIM}, got {dim}"
        )
    samples: dict[tuple[int, ...], float] = {}
    for row in rows:
        if len(row) != dim + 1:
            raise ShapeMismatchError(f"row {row} does not have {dim + 1} fields")
        try:
            index = tuple(int(v) for v in row[:dim])
            samples[index] = float(row[dim])
        except ValueError as exc:
            raise HeaderParseError(f"malformed CSV row {row}") from exc
    shape = tuple(max(index[k] for index in samples) + 1 for k in range(dim))
    if any(min(index[k] for index in samples) < 0 for k in range(dim)):
        raise ShapeMismatchError("negative sample index")
    if len(samples) != int(np.prod(shape)):
        raise ShapeMismatchError(
            f"{len(samples)} samples do not fill a {shape} lattice"
        )
    data = np.empty(shape)
    for index, value in samples.items():
        data[index] = value
    return GridSignal(
        origin if origin is not None else (0.0,) * dim,
        spacing if spacing is not None else (1.0,) * dim,
        data,
    )
