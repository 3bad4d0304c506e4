# SPDX-License-Identifier: MIT
"""Discrete hypercomplex Fourier transform and analytic-signal assembly.

The transform of a d-dimensional grid is the separable composition of d
one-axis transforms, axis i using e_i as its imaginary unit. Because S_d is
commutative, the axis-i pass treats every component pair (b, b | bit_i) with
bit i clear in b as one complex plane and runs an ordinary complex FFT on it.

Conventions:
    forward   F(w) = prod(dx_i) * sum f(x) prod exp(-e_i w_i x_i)
    inverse   f(x) = prod(1 / (N_i dx_i)) * sum F(w) prod exp(e_i w_i x_i)
    mask      1 + sign(w) per axis, sign = 0 at DC and at the even-N Nyquist bin

Every FFT goes through ``scipy.fft`` with an explicit ``workers`` count;
pocketfft splits work across independent lines, so results do not depend on
the worker count.

Component Contract:
    Input: GridSignal / AnalyticGrid / HyperSpectrum
    Output: HyperSpectrum / AnalyticGrid / GridSignal
    Dependencies: numpy, scipy.fft, algebra, grid
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.fft

from scheffers_analytic.algebra import Direction, mask_shift_sign, popcount
from scheffers_analytic.errors import DimensionMismatchError
from scheffers_analytic.grid import (
    AnalyticGrid,
    GridSignal,
    HyperSpectrum,
    angular_frequencies,
)


def frequency_sign(n: int) -> np.ndarray:
    """sign(w) per bin of an n-point axis, 0 at DC and at the even-n Nyquist bin."""
    k = np.arange(n)
    sign = np.where(k < n / 2, 1.0, -1.0)
    sign[0] = 0.0
    if n % 2 == 0:
        sign[n // 2] = 0.0
    return sign


def _axis_view(values: np.ndarray, axis: int, ndim: int) -> np.ndarray:
    """Reshape a per-bin vector so it broadcasts along ``axis`` of ndim arrays."""
    shape = [1] * ndim
    shape[axis] = values.shape[0]
    return values.reshape(shape)


@dataclass(frozen=True)
class FrequencyMask:
    """Separable positive-quadrant multiplier.

    Attributes:
        multipliers: Per-axis arrays with 1 at DC and Nyquist, 2 on positive
            bins and 0 on negative bins.
    """

    multipliers: tuple[np.ndarray, ...]

    @classmethod
    def for_shape(cls, shape: tuple[int, ...]) -> FrequencyMask:
        return cls(tuple(1.0 + frequency_sign(n) for n in shape))

    def full(self) -> np.ndarray:
        """Dense product of the per-axis multipliers."""
        ndim = len(self.multipliers)
        total = np.ones(tuple(m.shape[0] for m in self.multipliers))
        for axis, values in enumerate(self.multipliers):
            total = total * _axis_view(values, axis, ndim)
        return total


def _pair_masks(dim: int, axis: int) -> tuple[list[int], list[int]]:
    bit = 1 << axis
    low = [b for b in range(1 << dim) if not b & bit]
    return low, [b | bit for b in low]


def _axis_pass(
    components: np.ndarray,
    axis: int,
    origin: float,
    spacing: float,
    inverse: bool,
    workers: int | None,
) -> np.ndarray:
    """One-axis transform of a component-major (2^d, ...) array."""
    dim = components.ndim - 1
    low, high = _pair_masks(dim, axis)
    plane = components[low] + 1j * components[high]
    n = components.shape[axis + 1]
    omega = _axis_view(angular_frequencies(n, spacing), axis + 1, dim + 1)
    if inverse:
        plane = scipy.fft.ifft(
            plane * np.exp(1j * omega * origin), axis=axis + 1, workers=workers
        )
        plane = plane / spacing
    else:
        plane = scipy.fft.fft(plane, axis=axis + 1, workers=workers)
        plane = plane * (spacing * np.exp(-1j * omega * origin))
    out = np.empty_like(components)
    out[low] = plane.real
    out[high] = plane.imag
    return out


def _as_components(g: GridSignal | AnalyticGrid) -> np.ndarray:
    if isinstance(g, AnalyticGrid):
        return np.array(g.components)
    components = np.zeros((1 << g.dim, *g.shape))
    components[0] = g.data
    return components


def hft_forward(
    g: GridSignal | AnalyticGrid, workers: int | None = None
) -> HyperSpectrum:
    """Forward hypercomplex transform of a real or S_d-valued grid."""
    components = _as_components(g)
    for axis in range(g.dim):
        components = _axis_pass(
            components, axis, g.origin[axis], g.spacing[axis], False, workers
        )
    return HyperSpectrum(g.origin, g.spacing, components)


def hft_inverse(s: HyperSpectrum, workers: int | None = None) -> AnalyticGrid:
    """Inverse hypercomplex transform; hft_inverse(hft_forward(g)) is g."""
    components = np.array(s.components)
    for axis in range(s.dim):
        components = _axis_pass(
            components, axis, s.origin[axis], s.spacing[axis], True, workers
        )
    return AnalyticGrid(s.origin, s.spacing, components)


def positive_restrict(s: HyperSpectrum) -> HyperSpectrum:
    """Multiply every component by the separable mask prod(1 + sign(w_i))."""
    mask = FrequencyMask.for_shape(s.shape).full()
    return HyperSpectrum(s.origin, s.spacing, s.components * mask[None, ...])


def _check_direction(j: Direction, dim: int) -> None:
    if j.dim != dim:
        raise DimensionMismatchError(
            f"direction {j} has length {j.dim}, grid has dimension {dim}"
        )


def partial_hilbert(
    g: GridSignal, j: Direction, workers: int | None = None
) -> GridSignal:
    """H_j: multiplier -i sign(w_i) along every axis with j_i = 1."""
    _check_direction(j, g.dim)
    data = np.array(g.data)
    for axis in j.axes():
        k = axis - 1
        multiplier = _axis_view(-1j * frequency_sign(g.shape[k]), k, g.dim)
        spectrum = scipy.fft.fft(data, axis=k, workers=workers)
        data = scipy.fft.ifft(spectrum * multiplier, axis=k, workers=workers).real
    return g.with_data(data)


def analytic_signal(g: GridSignal, workers: int | None = None) -> AnalyticGrid:
    """Scheffers analytic signal: forward transform, positive restriction, inverse."""
    return hft_inverse(positive_restrict(hft_forward(g, workers)), workers)


def alpha_projections(g: GridSignal, workers: int | None = None) -> np.ndarray:
    """Cosine/sine projections alpha^i(w) for every direction i.

    alpha^i(w) = prod(dx) * sum f(x) prod_l trig_l(w_l x_l), where trig_l is
    sin when i_l = 1 and cos otherwise. Returned component-major with shape
    (2^d, N_1, ..., N_d) over the full frequency lattice.
    """
    spectrum = hft_forward(g, workers).components
    signs = np.array([(-1.0) ** popcount(i) for i in range(1 << g.dim)])
    return spectrum * _axis_view(signs, 0, g.dim + 1)


def _bracket_weights(n: int, shifted: bool) -> np.ndarray:
    """Quadrature weights of the discrete positive-frequency bracket.

    Interior positive bins count twice; DC and Nyquist count once on
    unshifted axes and not at all on shifted ones.
    """
    half = n // 2 + 1
    sign = frequency_sign(n)[:half]
    weights = np.where(sign > 0, 2.0, 0.0 if shifted else 1.0)
    return weights


def assemble_component(
    g: GridSignal, j: Direction, workers: int | None = None
) -> GridSignal:
    """Build f_j from projections with the bracket sign rule.

    f_j(x) = sum_m shift_sign(m, j) <alpha^(m xor j), alpha_m>_+ where the
    bracket integrates alpha^k(w) alpha_m(x, w) over non-negative frequencies.
    """
    _check_direction(j, g.dim)
    alphas = alpha_projections(g, workers)
    result = np.zeros(g.shape)
    for m in range(1 << g.dim):
        term = alphas[m ^ j.mask]
        for axis in range(g.dim):
            n = g.shape[axis]
            half = n // 2 + 1
            omega = g.axis_frequencies(axis)[:half]
            x = g.axis_coordinates(axis)
            trig = np.sin if m >> axis & 1 else np.cos
            kernel = trig(np.outer(x, omega)) * _bracket_weights(n, bool(j.mask >> axis & 1))
            kernel = kernel / (n * g.spacing[axis])
            restricted = np.take(term, np.arange(half), axis=axis)
            # contract the frequency axis, put the spatial axis back in place
            term = np.moveaxis(np.tensordot(kernel, restricted, axes=([1], [axis])), 0, axis)
        result = result + mask_shift_sign(m, j.mask) * term
    return g.with_data(result)
