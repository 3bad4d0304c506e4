# SPDX-License-Identifier: MIT
"""Containers for regular d-dimensional sample lattices.

Three immutable containers share the same lattice metadata (origin and
spacing per axis, row-major data with the last axis fastest):

    GridSignal     one real sample per lattice point
    HyperSpectrum  2^d real component arrays over the frequency lattice
    AnalyticGrid   2^d real component arrays, component ind(j) holding f_j

Numpy axes are 0-based here; axis k of the arrays is generator e_(k+1).

Component Contract:
    Input: sampler callbacks, numpy arrays
    Output: validated, read-only containers
    Dependencies: numpy, algebra, errors
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from scheffers_analytic.algebra import Direction, ScheffersElement
from scheffers_analytic.errors import (
    ConfigError,
    DimensionMismatchError,
    NonFiniteSampleError,
    WarningCode,
    emit_warning,
)

Sampler = Callable[..., "np.ndarray | float"]


def angular_frequencies(n: int, spacing: float) -> np.ndarray:
    """Angular frequency of every DFT bin of an axis.

    Bin k maps to 2*pi*k/(n*dx) for k < n/2 and to that value minus 2*pi/dx
    otherwise, so the even-n Nyquist bin is negative.
    """
    k = np.arange(n)
    signed = np.where(k < n / 2, k, k - n)
    return 2.0 * np.pi * signed / (n * spacing)


def _freeze(array: np.ndarray) -> np.ndarray:
    frozen = np.ascontiguousarray(array, dtype=np.float64).copy()
    frozen.setflags(write=False)
    return frozen


def _first_non_finite(array: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) for i in np.argwhere(~np.isfinite(array))[0])


@dataclass(frozen=True, eq=False)
class _Lattice:
    origin: tuple[float, ...]
    spacing: tuple[float, ...]

    def _check_lattice(self, shape: tuple[int, ...]) -> None:
        origin = tuple(float(o) for o in self.origin)
        spacing = tuple(float(s) for s in self.spacing)
        if len(origin) != len(shape) or len(spacing) != len(shape):
            raise DimensionMismatchError(
                f"origin/spacing lengths {len(origin)}/{len(spacing)} "
                f"do not match dimension {len(shape)}"
            )
        if not all(math.isfinite(o) for o in origin):
            raise ConfigError(f"origin must be finite: {origin}")
        if not all(math.isfinite(s) and s > 0 for s in spacing):
            raise ConfigError(f"spacing must be positive and finite: {spacing}")
        if any(n < 1 for n in shape):
            raise ConfigError(f"shape entries must be >= 1: {shape}")
        object.__setattr__(self, "origin", origin)
        object.__setattr__(self, "spacing", spacing)

    @property
    def dim(self) -> int:
        return len(self.spacing)

    def coordinates(self, axis: int, shape: tuple[int, ...]) -> np.ndarray:
        # multiplication, not accumulation
        return self.origin[axis] + np.arange(shape[axis]) * self.spacing[axis]

    def same_lattice(self, other: _Lattice) -> bool:
        return self.origin == other.origin and self.spacing == other.spacing


@dataclass(frozen=True, eq=False)
class GridSignal(_Lattice):
    """Real samples on a regular lattice.

    Attributes:
        origin: Coordinate of index 0 per axis.
        spacing: Positive sample spacing per axis.
        data: Real array of shape (N_1, ..., N_d).
    """

    data: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        data = _freeze(self.data)
        self._check_lattice(data.shape)
        if not np.all(np.isfinite(data)):
            raise NonFiniteSampleError(
                f"non-finite sample at index {_first_non_finite(data)}"
            )
        object.__setattr__(self, "data", data)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.data.shape)

    def axis_coordinates(self, axis: int) -> np.ndarray:
        return self.coordinates(axis, self.shape)

    def axis_frequencies(self, axis: int) -> np.ndarray:
        return angular_frequencies(self.shape[axis], self.spacing[axis])

    def meshgrid(self) -> list[np.ndarray]:
        axes = [self.axis_coordinates(k) for k in range(self.dim)]
        return np.meshgrid(*axes, indexing="ij")

    def with_data(self, data: np.ndarray) -> GridSignal:
        return GridSignal(self.origin, self.spacing, data)


@dataclass(frozen=True, eq=False)
class _ComponentGrid(_Lattice):
    components: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        components = _freeze(self.components)
        if components.ndim < 2:
            raise DimensionMismatchError("components need a leading blade axis")
        shape = components.shape[1:]
        self._check_lattice(shape)
        if components.shape[0] != 1 << len(shape):
            raise DimensionMismatchError(
                f"expected {1 << len(shape)} components for dimension "
                f"{len(shape)}, got {components.shape[0]}"
            )
        object.__setattr__(self, "components", components)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.components.shape[1:])

    def component(self, j: Direction | int) -> np.ndarray:
        mask = j.mask if isinstance(j, Direction) else int(j)
        if isinstance(j, Direction) and j.dim != self.dim:
            raise DimensionMismatchError(
                f"direction of length {j.dim} for a {self.dim}-d grid"
            )
        return self.components[mask]

    def axis_coordinates(self, axis: int) -> np.ndarray:
        return self.coordinates(axis, self.shape)

    def axis_frequencies(self, axis: int) -> np.ndarray:
        return angular_frequencies(self.shape[axis], self.spacing[axis])

    def meshgrid(self) -> list[np.ndarray]:
        axes = [self.axis_coordinates(k) for k in range(self.dim)]
        return np.meshgrid(*axes, indexing="ij")

    def element_at(self, index: Sequence[int]) -> ScheffersElement:
        return ScheffersElement(self.dim, self.components[(slice(None), *index)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.components))


@dataclass(frozen=True, eq=False)
class HyperSpectrum(_ComponentGrid):
    """Hypercomplex spectrum over the frequency lattice of a source grid.

    origin and spacing describe the source lattice; bin k of axis i sits at
    ``angular_frequencies(N_i, spacing_i)[k]``.
    """


@dataclass(frozen=True, eq=False)
class AnalyticGrid(_ComponentGrid):
    """S_d-valued grid; component at bitmask ind(j) holds f_j."""

    def as_grid(self, j: Direction | int = 0) -> GridSignal:
        return GridSignal(self.origin, self.spacing, self.component(j))


def grid_make(
    dim: int,
    shape: Sequence[int],
    origin: Sequence[float],
    spacing: Sequence[float],
    sampler: Sampler,
) -> GridSignal:
    """Sample a pointwise real function on a regular lattice.

    The sampler is called once with d coordinate arrays (``indexing="ij"``)
    and must broadcast like a numpy ufunc; scalar results are broadcast.

    Raises:
        NonFiniteSampleError: naming the first offending index.
    """
    shape = tuple(int(n) for n in shape)
    if len(shape) != dim:
        raise DimensionMismatchError(f"shape {shape} does not have {dim} entries")
    lattice = _Lattice(tuple(origin), tuple(spacing))
    lattice._check_lattice(shape)
    axes = [lattice.coordinates(k, shape) for k in range(dim)]
    mesh = np.meshgrid(*axes, indexing="ij")
    with np.errstate(all="ignore"):
        values = np.asarray(sampler(*mesh), dtype=np.float64)
    data = np.broadcast_to(values, shape)
    if not np.all(np.isfinite(data)):
        raise NonFiniteSampleError(
            f"sampler returned a non-finite value at index {_first_non_finite(data)}"
        )
    return GridSignal(lattice.origin, lattice.spacing, data)


def zero_pad(g: GridSignal, factor: int) -> GridSignal:
    """Embed g at the start of a lattice factor times longer on every axis."""
    if factor < 1:
        raise ConfigError(f"padding factor must be >= 1, got {factor}")
    if factor == 1:
        return g
    padded = np.zeros(tuple(n * factor for n in g.shape))
    padded[tuple(slice(0, n) for n in g.shape)] = g.data
    return g.with_data(padded)


def zero_pad_analytic(a: AnalyticGrid, factor: int) -> AnalyticGrid:
    """zero_pad applied to every component of a."""
    if factor < 1:
        raise ConfigError(f"padding factor must be >= 1, got {factor}")
    if factor == 1:
        return a
    padded = np.zeros((a.components.shape[0], *(n * factor for n in a.shape)))
    padded[(slice(None), *(slice(0, n) for n in a.shape))] = a.components
    return AnalyticGrid(a.origin, a.spacing, padded)


def unpadded_shape(shape: Sequence[int], factor: int) -> tuple[int, ...]:
    """Shape a zero_pad by factor started from."""
    if factor < 1:
        raise ConfigError(f"padding factor must be >= 1, got {factor}")
    if any(n % factor for n in shape):
        raise ConfigError(f"shape {tuple(shape)} is not a multiple of the padding factor {factor}")
    return tuple(n // factor for n in shape)


def crop_grid(g: GridSignal, shape: Sequence[int]) -> GridSignal:
    window = tuple(slice(0, int(n)) for n in shape)
    _warn_cropped_energy(g.data, g.data[window])
    return g.with_data(g.data[window])


def crop_analytic(a: AnalyticGrid, shape: Sequence[int]) -> AnalyticGrid:
    window = (slice(None), *(slice(0, int(n)) for n in shape))
    kept = a.components[window]
    _warn_cropped_energy(a.components, kept)
    return AnalyticGrid(a.origin, a.spacing, kept)


CROPPED_ENERGY_FRACTION = 0.01


def _warn_cropped_energy(full: np.ndarray, kept: np.ndarray) -> None:
    total = float(np.sum(full**2))
    if total == 0.0:
        return
    lost = 1.0 - float(np.sum(kept**2)) / total
    if lost > CROPPED_ENERGY_FRACTION:
        emit_warning(
            WarningCode.W101_PADDING_CROPPED_ENERGY, f"{lost:.1%} of energy cropped"
        )
