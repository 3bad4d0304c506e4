# SPDX-License-Identifier: MIT
"""Instantaneous amplitude, phases and frequencies of analytic grids.

Also builds narrowband signals in Euler form A * prod exp(e_l phi_l) and
measures how far a product pair is from satisfying the Bedrosian identity.

Component Contract:
    Input: AnalyticGrid, GridSignal
    Output: GridSignal, PhaseField, EnvelopeReport, BedrosianReport
    Dependencies: numpy, algebra, grid, transform
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np
import scipy.fft

from scheffers_analytic.algebra import Direction, axis_bit, sch_mul_arrays
from scheffers_analytic.errors import (
    ConfigError,
    DimensionMismatchError,
    WarningCode,
    emit_warning,
)
from scheffers_analytic.grid import AnalyticGrid, GridSignal
from scheffers_analytic.transform import partial_hilbert

DEFAULT_PHASE_EPSILON = 1e-9
DEFAULT_BAND_THRESHOLD = 1e-10
MIN_DIFFERENCE_SAMPLES = 3


@dataclass(frozen=True, eq=False)
class PhaseField:
    """A phase (or frequency) grid with its undefined-sample mask.

    Attributes:
        values: Samples; masked samples hold 0.0.
        undefined: Boolean array, True where the value is not defined.
    """

    values: GridSignal
    undefined: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        undefined = np.array(self.undefined, dtype=bool)
        if undefined.shape != self.values.shape:
            raise DimensionMismatchError(
                f"mask shape {undefined.shape} != grid shape {self.values.shape}"
            )
        undefined.setflags(write=False)
        object.__setattr__(self, "undefined", undefined)

    @property
    def defined_fraction(self) -> float:
        return float(1.0 - self.undefined.mean())


@dataclass(frozen=True, eq=False)
class EnvelopeReport:
    """Amplitude with per-direction phases and frequencies.

    Attributes:
        amplitude: Root-sum-square of all components.
        phases: Phase per direction |j| >= 1.
        frequencies: Instantaneous frequency per direction, where computable.
        undefined: Union of all phase masks.
    """

    amplitude: GridSignal
    phases: dict[Direction, PhaseField]
    frequencies: dict[Direction, PhaseField]
    undefined: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class BedrosianReport:
    """Discrepancy between H_j[f g] and f H_j[g].

    Attributes:
        direction: The direction j.
        max_relative: max |lhs - rhs| / max |lhs| (absolute when lhs is 0).
        l2_relative: ||lhs - rhs|| / ||lhs|| (absolute when lhs is 0).
        low_edges: Highest significant |w| of f per axis of j.
        high_edges: Lowest significant |w| of g per axis of j.
        hypotheses_satisfied: Whether low_edges < high_edges on every axis.
    """

    direction: Direction
    max_relative: float
    l2_relative: float
    low_edges: tuple[float, ...]
    high_edges: tuple[float, ...]
    hypotheses_satisfied: bool

    @property
    def verdict(self) -> str:
        if self.hypotheses_satisfied:
            return "hypotheses satisfied"
        return "hypotheses violated"

    def to_dict(self) -> dict:
        return {
            "direction": str(self.direction),
            "max_relative": self.max_relative,
            "l2_relative": self.l2_relative,
            "low_edges": list(self.low_edges),
            "high_edges": list(self.high_edges),
            "hypotheses_satisfied": self.hypotheses_satisfied,
            "verdict": self.verdict,
        }


def amplitude(a: AnalyticGrid) -> GridSignal:
    """a(x) = sqrt(sum_j f_j(x)^2)."""
    return GridSignal(a.origin, a.spacing, np.sqrt(np.sum(a.components**2, axis=0)))


def _require_shift(j: Direction, dim: int) -> None:
    if j.dim != dim:
        raise DimensionMismatchError(f"direction {j} does not match dimension {dim}")
    if j.weight < 1:
        raise ConfigError("phase needs a direction with at least one 1")


def phase(
    a: AnalyticGrid, j: Direction, epsilon: float = DEFAULT_PHASE_EPSILON
) -> PhaseField:
    """phi_j = atan2(f_j, f) in (-pi, pi], masked where sqrt(f^2 + f_j^2) is tiny."""
    _require_shift(j, a.dim)
    f = a.component(0)
    fj = a.component(j)
    angle = np.arctan2(fj, f)
    angle = np.where(angle == -np.pi, np.pi, angle)
    radius = np.hypot(f, fj)
    peak = float(np.max(amplitude(a).data))
    undefined = radius < epsilon * peak if peak > 0 else np.ones(a.shape, dtype=bool)
    if undefined.mean() > 0.5:
        emit_warning(
            WarningCode.W001_PHASE_MOSTLY_UNDEFINED, f"direction {j}"
        )
    values = np.where(undefined, 0.0, angle)
    return PhaseField(GridSignal(a.origin, a.spacing, values), undefined)


def _dilate(mask: np.ndarray, axis: int) -> np.ndarray:
    """Mark samples whose finite-difference stencil along axis touches mask."""
    grown = mask.copy()
    n = mask.shape[axis]
    forward = [slice(None)] * mask.ndim
    backward = [slice(None)] * mask.ndim
    forward[axis] = slice(1, n)
    backward[axis] = slice(0, n - 1)
    grown[tuple(backward)] |= mask[tuple(forward)]
    grown[tuple(forward)] |= mask[tuple(backward)]
    return grown


def inst_frequency(p: PhaseField, j: Direction) -> PhaseField:
    """nu_j: unwrap, then central differences along each axis of j in order.

    Only the first differentiation unwraps; later axes act on the already
    continuous derivative. Boundary samples use one-sided differences.

    Raises:
        ConfigError: an axis of j has fewer than three samples.
    """
    g = p.values
    _require_shift(j, g.dim)
    values = np.array(g.data)
    undefined = np.array(p.undefined)
    for order, axis in enumerate(j.axes()):
        k = axis - 1
        if g.shape[k] < MIN_DIFFERENCE_SAMPLES:
            raise ConfigError(
                f"axis {axis} has {g.shape[k]} samples; differentiation needs "
                f"at least {MIN_DIFFERENCE_SAMPLES}"
            )
        if order == 0:
            values = np.unwrap(values, axis=k)
        values = np.gradient(values, g.spacing[k], axis=k)
        undefined = _dilate(undefined, k)
    values = np.where(undefined, 0.0, values)
    return PhaseField(g.with_data(values), undefined)


def envelope_report(
    a: AnalyticGrid,
    directions: Iterable[Direction] | None = None,
    epsilon: float = DEFAULT_PHASE_EPSILON,
) -> EnvelopeReport:
    """Amplitude plus phase and frequency for each requested direction."""
    chosen = (
        list(directions)
        if directions is not None
        else list(Direction.every(a.dim, include_zero=False))
    )
    phases: dict[Direction, PhaseField] = {}
    frequencies: dict[Direction, PhaseField] = {}
    undefined = np.zeros(a.shape, dtype=bool)
    for j in chosen:
        phases[j] = phase(a, j, epsilon)
        undefined |= phases[j].undefined
        if all(a.shape[axis - 1] >= MIN_DIFFERENCE_SAMPLES for axis in j.axes()):
            frequencies[j] = inst_frequency(phases[j], j)
    return EnvelopeReport(amplitude(a), phases, frequencies, undefined)


def narrowband_construct(A: GridSignal, phases: Sequence[GridSignal]) -> AnalyticGrid:
    """C(x) = A(x) * prod_l exp(e_l phi_l(x)), evaluated pointwise."""
    if len(phases) != A.dim:
        raise DimensionMismatchError(
            f"need one phase grid per axis ({A.dim}), got {len(phases)}"
        )
    n = 1 << A.dim
    components = np.zeros((n, *A.shape))
    components[0] = A.data
    for axis, phi in enumerate(phases, start=1):
        if phi.shape != A.shape:
            raise DimensionMismatchError(
                f"phase grid {axis} has shape {phi.shape}, expected {A.shape}"
            )
        # exp(e_l phi) = cos phi + e_l sin phi
        factor = np.zeros_like(components)
        factor[0] = np.cos(phi.data)
        factor[axis_bit(axis)] = np.sin(phi.data)
        components = sch_mul_arrays(components, factor, A.dim)
    return AnalyticGrid(A.origin, A.spacing, components)


def band_edges(
    g: GridSignal, axis: int, threshold: float = DEFAULT_BAND_THRESHOLD
) -> tuple[float, float]:
    """Lowest and highest significant |w| along a 0-based axis.

    A bin is significant when its magnitude, maximized over the other axes,
    exceeds threshold times the peak. A zero signal has edges (inf, 0).
    """
    magnitude = np.abs(scipy.fft.fft(g.data, axis=axis))
    other = tuple(k for k in range(g.dim) if k != axis)
    profile = magnitude.max(axis=other) if other else magnitude
    peak = float(profile.max())
    if peak == 0.0:
        return float("inf"), 0.0
    omega = np.abs(g.axis_frequencies(axis))[profile > threshold * peak]
    return float(omega.min()), float(omega.max())


def _relative(diff: np.ndarray, reference: np.ndarray, order: str) -> float:
    if order == "max":
        num, den = float(np.max(np.abs(diff))), float(np.max(np.abs(reference)))
    else:
        num, den = float(np.linalg.norm(diff)), float(np.linalg.norm(reference))
    return num / den if den > 0 else num


def bedrosian_check(
    f_low: GridSignal,
    g_high: GridSignal,
    j: Direction,
    threshold: float = DEFAULT_BAND_THRESHOLD,
    workers: int | None = None,
) -> BedrosianReport:
    """Compare H_j[f g] with f H_j[g] and measure the band condition.

    A constant f_low is pulled out of H_j by linearity, so that case reports
    an exact zero discrepancy.
    """
    if f_low.shape != g_high.shape or not f_low.same_lattice(g_high):
        raise DimensionMismatchError("Bedrosian inputs must share one lattice")
    _require_shift(j, f_low.dim)
    shifted = partial_hilbert(g_high, j, workers).data
    rhs = f_low.data * shifted
    if np.ptp(f_low.data) == 0:
        lhs = float(f_low.data.flat[0]) * shifted
    else:
        lhs = partial_hilbert(f_low.with_data(f_low.data * g_high.data), j, workers).data
    diff = lhs - rhs

    low_edges = []
    high_edges = []
    for axis in j.axes():
        _, f_top = band_edges(f_low, axis - 1, threshold)
        g_bottom, _ = band_edges(g_high, axis - 1, threshold)
        low_edges.append(f_top)
        high_edges.append(g_bottom)
    satisfied = all(lo < hi for lo, hi in zip(low_edges, high_edges, strict=True))
    return BedrosianReport(
        direction=j,
        max_relative=_relative(diff, lhs, "max"),
        l2_relative=_relative(diff, lhs, "l2"),
        low_edges=tuple(low_edges),
        high_edges=tuple(high_edges),
        hypotheses_satisfied=satisfied,
    )
