# SPDX-License-Identifier: MIT
"""Direct nested quadrature of phase-shifted components.

Evaluates

    f_j(x) = pi^-d * int_0^W int_box f(x') prod_l cos(w_l (x_l - x'_l) - j_l pi/2) dx' dw

with the trapezoidal rule in both x' and w, truncating each w_l at pi/dx'_l.
The kernel is separable, so each axis contributes a (points x nodes) matrix
built from the cosine and sine projections, and the sample tensor is
contracted one axis at a time. This path shares no code with the FFT pipeline
and serves as its independent check.

Component Contract:
    Input: sampler callable, Direction, evaluation points, box bounds
    Output: QuadratureResult
    Dependencies: numpy, algebra
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from scheffers_analytic.algebra import Direction
from scheffers_analytic.errors import ConfigError, ConvergenceError, DimensionMismatchError


@dataclass(frozen=True)
class QuadratureResult:
    """Values from the finest accepted resolution.

    Attributes:
        values: f_j at each evaluation point.
        change: Max absolute change against the previous resolution.
        resolution: Nodes per axis used for the returned values.
    """

    values: np.ndarray
    change: float
    resolution: int


def _trapezoid_weights(count: int, step: float) -> np.ndarray:
    weights = np.full(count, step)
    weights[0] = weights[-1] = step / 2
    return weights


def _axis_kernel(
    x_eval: np.ndarray,
    lower: float,
    upper: float,
    nodes: int,
    shifted: bool,
    omega_factor: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Kernel matrix G[p, k] and the x' nodes of one axis."""
    x_nodes = np.linspace(lower, upper, nodes)
    step = (upper - lower) / (nodes - 1)
    omega_max = np.pi / step
    omega_count = omega_factor * (nodes - 1) + 1
    omega = np.linspace(0.0, omega_max, omega_count)
    w_omega = _trapezoid_weights(omega_count, omega_max / (omega_count - 1))
    phase = np.outer(x_eval, omega) - (np.pi / 2 if shifted else 0.0)
    # cos(a - b) = cos a cos b + sin a sin b with a = w x - j pi/2, b = w x'
    left_cos = np.cos(phase) * w_omega
    left_sin = np.sin(phase) * w_omega
    kernel = left_cos @ np.cos(np.outer(omega, x_nodes))
    kernel += left_sin @ np.sin(np.outer(omega, x_nodes))
    kernel *= _trapezoid_weights(nodes, step)[None, :] / np.pi
    return kernel, x_nodes


def _evaluate(
    sampler: Callable[..., np.ndarray],
    j: Direction,
    points: np.ndarray,
    box: Sequence[tuple[float, float]],
    nodes: int,
    omega_factor: int,
) -> np.ndarray:
    kernels = []
    axes = []
    for axis, (lower, upper) in enumerate(box):
        kernel, x_nodes = _axis_kernel(
            points[:, axis], lower, upper, nodes, bool(j.bits[axis]), omega_factor
        )
        kernels.append(kernel)
        axes.append(x_nodes)
    mesh = np.meshgrid(*axes, indexing="ij")
    samples = np.broadcast_to(np.asarray(sampler(*mesh), dtype=np.float64), mesh[0].shape)
    tensor = np.tensordot(kernels[0], samples, axes=([1], [0]))
    for kernel in kernels[1:]:
        tensor = np.einsum("pk,pk...->p...", kernel, tensor)
    return tensor


def fj_quadrature(
    sampler: Callable[..., np.ndarray],
    j: Direction,
    points: np.ndarray | Sequence[Sequence[float]],
    box: Sequence[tuple[float, float]],
    resolution: int = 400,
    tolerance: float = 1e-8,
    max_refinements: int = 4,
    omega_factor: int = 4,
) -> QuadratureResult:
    """Nested trapezoidal evaluation of f_j at the given points.

    The step is halved until two successive resolutions agree within
    ``tolerance`` (max absolute change).

    Args:
        sampler: Vectorized real function of d coordinate arrays.
        j: Direction of the phase shift.
        points: Evaluation points, shape (P, d).
        box: Integration interval per axis.
        resolution: Starting number of x' nodes per axis.
        tolerance: Accepted change between resolutions.
        max_refinements: Number of halvings before giving up.
        omega_factor: w nodes per x' interval.

    Raises:
        ConvergenceError: tolerance not met after ``max_refinements`` halvings.
    """
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if points.shape[1] != j.dim or len(box) != j.dim:
        raise DimensionMismatchError(
            f"points/box must have {j.dim} coordinates, got "
            f"{points.shape[1]}/{len(box)}"
        )
    if resolution < 3:
        raise ConfigError(f"resolution must be >= 3, got {resolution}")
    if any(upper <= lower for lower, upper in box):
        raise ConfigError(f"empty integration box {box}")

    nodes = resolution
    previous = _evaluate(sampler, j, points, box, nodes, omega_factor)
    change = float("inf")
    for _ in range(max_refinements):
        nodes = 2 * nodes - 1
        current = _evaluate(sampler, j, points, box, nodes, omega_factor)
        change = float(np.max(np.abs(current - previous)))
        if change <= tolerance:
            return QuadratureResult(current, change, nodes)
        previous = current
    raise ConvergenceError(
        f"nested quadrature did not settle within {tolerance:g}",
        detail=f"last change {change:.3e} at {nodes} nodes per axis",
    )
