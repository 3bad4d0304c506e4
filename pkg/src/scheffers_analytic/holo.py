# SPDX-License-Identifier: MIT
"""Holomorphic side: extension into the upper space and its kernels.

Every per-axis quantity here lives in a single plane S(i) = span{1, e_i},
which is a copy of the complex numbers. Plane values are therefore passed
around as Python complex numbers (real part on e_0, imaginary part on e_i)
and applied to S_d elements through the complex-pair view used by the
transform module.

Component Contract:
    Input: HyperSpectrum, samplers over UpperPoint, boundary samples
    Output: ScheffersElement, AnalyticGrid, per-axis plane values
    Dependencies: numpy, algebra, grid, transform
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from scheffers_analytic.algebra import (
    Direction,
    ScheffersElement,
    axis_bit,
    sch_norm,
)
from scheffers_analytic.errors import (
    BoundaryShellError,
    ConfigError,
    DimensionMismatchError,
    NegativeSupportError,
    NonFiniteSampleError,
    NonPositiveHeightError,
    OddSampleCountError,
    PoleError,
    StepTooLargeError,
    UnsupportedDimensionError,
    WarningCode,
    emit_warning,
)
from scheffers_analytic.grid import (
    AnalyticGrid,
    GridSignal,
    HyperSpectrum,
    angular_frequencies,
)
from scheffers_analytic.transform import hft_inverse

DEFAULT_SUPPORT_TOLERANCE = 1e-9
DEFAULT_CAUCHY_NODES = 64
SHELL_TOLERANCE = 1e-9
POLE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class UpperPoint:
    """Point of the closed upper space, zeta_i = x_i + e_i y_i.

    Attributes:
        x: Real parts per axis.
        y: Heights per axis, all >= 0.
    """

    x: tuple[float, ...]
    y: tuple[float, ...]

    def __post_init__(self) -> None:
        x = tuple(float(v) for v in self.x)
        y = tuple(float(v) for v in self.y)
        if len(x) != len(y) or not x:
            raise DimensionMismatchError(
                f"x and y need the same non-zero length, got {len(x)}/{len(y)}"
            )
        if any(not np.isfinite(v) for v in (*x, *y)):
            raise ConfigError(f"coordinates must be finite: x={x} y={y}")
        if any(v < 0 for v in y):
            raise ConfigError(f"heights must be >= 0, got {y}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_complex(cls, values: Sequence[complex]) -> UpperPoint:
        return cls(tuple(v.real for v in values), tuple(v.imag for v in values))

    @property
    def dim(self) -> int:
        return len(self.x)

    def zeta(self, axis: int) -> complex:
        """Plane value of a 1-based axis."""
        return complex(self.x[axis - 1], self.y[axis - 1])

    def plane_element(self, axis: int) -> ScheffersElement:
        return ScheffersElement.plane(self.dim, axis, self.zeta(axis))

    def shifted(self, axis: int, dx: float = 0.0, dy: float = 0.0) -> UpperPoint:
        x = list(self.x)
        y = list(self.y)
        x[axis - 1] += dx
        y[axis - 1] += dy
        return UpperPoint(tuple(x), tuple(y))


def _pair_masks(dim: int, axis: int) -> tuple[list[int], list[int]]:
    bit = axis_bit(axis)
    low = [b for b in range(1 << dim) if not b & bit]
    return low, [b | bit for b in low]


def _times_plane(coeffs: np.ndarray, dim: int, axis: int, w: complex) -> np.ndarray:
    """Multiply an S_d coefficient vector by the S(axis) value w."""
    low, high = _pair_masks(dim, axis)
    plane = (coeffs[low] + 1j * coeffs[high]) * w
    out = np.empty_like(coeffs)
    out[low] = plane.real
    out[high] = plane.imag
    return out


def _positive_frequencies(n: int, spacing: float) -> np.ndarray:
    """Bin frequencies with the even-n Nyquist bin taken as +pi/dx."""
    k = np.arange(n)
    signed = np.where(k <= n // 2, k, k - n)
    return 2.0 * np.pi * signed / (n * spacing)


def negative_support_mask(shape: tuple[int, ...]) -> np.ndarray:
    """True on every bin with a strictly negative frequency on some axis."""
    mask = np.zeros(shape, dtype=bool)
    for axis, n in enumerate(shape):
        negative = np.arange(n) > n / 2
        view = [1] * len(shape)
        view[axis] = n
        mask |= negative.reshape(view)
    return mask


def check_positive_support(
    s: HyperSpectrum, tolerance: float = DEFAULT_SUPPORT_TOLERANCE
) -> None:
    """Raise NegativeSupportError when negative bins carry energy.

    A bin is tolerated when its largest component magnitude is at most
    ``tolerance`` times the spectrum norm.
    """
    negative = negative_support_mask(s.shape)
    if not negative.any():
        return
    worst = float(np.max(np.abs(s.components[:, negative])))
    limit = tolerance * s.norm()
    if worst > limit:
        raise NegativeSupportError(
            "spectrum has energy on negative frequencies",
            detail=f"max negative-bin magnitude {worst:.3e} > {limit:.3e}",
        )


def holo_extend(
    s: HyperSpectrum,
    zeta: UpperPoint,
    tolerance: float = DEFAULT_SUPPORT_TOLERANCE,
) -> ScheffersElement:
    """Evaluate the inverse-transform sum at a point of the upper space.

    Every mode exp(e_i w x_i) becomes exp(e_i w x_i) exp(-w y_i). Off-lattice
    x is handled by evaluating the finite sum directly. Negative bins that
    pass the support check are dropped.

    Raises:
        NegativeSupportError: spectrum is not positively supported.
        NonFiniteSampleError: the sum overflowed.
    """
    if zeta.dim != s.dim:
        raise DimensionMismatchError(
            f"point has {zeta.dim} coordinates, spectrum has dimension {s.dim}"
        )
    check_positive_support(s, tolerance)
    values = np.array(s.components) * ~negative_support_mask(s.shape)
    # contract the last axis first so earlier axis indices stay valid
    for axis in reversed(range(s.dim)):
        n = s.shape[axis]
        spacing = s.spacing[axis]
        origin = s.origin[axis]
        lattice = angular_frequencies(n, spacing)
        theta = _positive_frequencies(n, spacing)
        kernel = (
            np.exp(1j * lattice * origin)
            * np.exp(1j * theta * (zeta.x[axis] - origin))
            * np.exp(-theta * zeta.y[axis])
            / (n * spacing)
        )
        low, high = _pair_masks(s.dim, axis + 1)
        plane = values[low] + 1j * values[high]
        plane = np.tensordot(plane, kernel, axes=([axis + 1], [0]))
        values = np.empty((1 << s.dim, *plane.shape[1:]))
        values[low] = plane.real
        values[high] = plane.imag
    if not np.all(np.isfinite(values)):
        raise NonFiniteSampleError(f"extension at {zeta} is not finite")
    return ScheffersElement(s.dim, values)


def holo_extend_grid(
    s: HyperSpectrum,
    y: Sequence[float],
    tolerance: float = DEFAULT_SUPPORT_TOLERANCE,
) -> AnalyticGrid:
    """The extension on every lattice point at fixed heights y."""
    if len(y) != s.dim:
        raise DimensionMismatchError(f"need {s.dim} heights, got {len(y)}")
    if any(v < 0 for v in y):
        raise ConfigError(f"heights must be >= 0, got {tuple(y)}")
    check_positive_support(s, tolerance)
    components = np.array(s.components) * ~negative_support_mask(s.shape)
    for axis, height in enumerate(y):
        theta = np.clip(_positive_frequencies(s.shape[axis], s.spacing[axis]), 0.0, None)
        view = [1] * (s.dim + 1)
        view[axis + 1] = s.shape[axis]
        components = components * np.exp(-theta * height).reshape(view)
    return hft_inverse(HyperSpectrum(s.origin, s.spacing, components))


def cr_residual(
    F: Callable[[UpperPoint], ScheffersElement],
    p: UpperPoint,
    h: float,
) -> tuple[float, ...]:
    """Norm of the central-difference d/d(zbar_i) of F at p, per axis.

    d/d(zbar_i) = (d/dx_i + e_i d/dy_i) / 2.

    Raises:
        StepTooLargeError: h <= 0 or some y_i < h.
    """
    if h <= 0:
        raise StepTooLargeError(f"step must be positive, got {h}")
    if any(v < h for v in p.y):
        raise StepTooLargeError(
            f"step {h} reaches below the boundary", detail=f"heights {p.y}"
        )
    residuals = []
    for axis in range(1, p.dim + 1):
        dx = (F(p.shifted(axis, dx=h)) - F(p.shifted(axis, dx=-h))) / (2 * h)
        dy = (F(p.shifted(axis, dy=h)) - F(p.shifted(axis, dy=-h))) / (2 * h)
        rotated = _times_plane(dy.coeffs, p.dim, axis, 1j)
        residuals.append(sch_norm(ScheffersElement(p.dim, (dx.coeffs + rotated) / 2)))
    return tuple(residuals)


def cauchy_polydisk(
    F: Callable[[tuple[complex, ...]], ScheffersElement],
    center: Sequence[complex],
    radius: float,
    z: Sequence[complex],
    j: Direction,
    n_quad: int = DEFAULT_CAUCHY_NODES,
) -> ScheffersElement:
    """Cauchy integral over the distinguished boundary of the axes in j.

    Axes outside j are held at z_i. On each circle zeta_i = c_i + r exp(e_i t)
    the factor d(zeta_i) / (2 pi e_i (zeta_i - z_i)) reduces to
    r exp(e_i t) / (zeta_i - z_i) dt / (2 pi); the trapezoidal rule then
    weighs node m by r exp(e_i t_m) / ((zeta_i - z_i) n).

    Returns F(z) when every z_i with i in j is inside its circle and 0 when
    some is outside.

    Raises:
        BoundaryShellError: some |z_i - c_i| equals r within tolerance.
    """
    dim = j.dim
    if len(center) != dim or len(z) != dim:
        raise DimensionMismatchError(
            f"center/z need {dim} entries, got {len(center)}/{len(z)}"
        )
    if radius <= 0:
        raise ConfigError(f"radius must be positive, got {radius}")
    if n_quad < 1:
        raise ConfigError(f"n_quad must be positive, got {n_quad}")
    axes = j.axes()
    for axis in axes:
        offset = abs(complex(z[axis - 1]) - complex(center[axis - 1]))
        if abs(offset - radius) <= SHELL_TOLERANCE * radius:
            raise BoundaryShellError(
                f"z_{axis} lies on the integration circle",
                detail=f"|z - c| = {offset!r}, r = {radius!r}",
            )

    t = 2.0 * np.pi * np.arange(n_quad) / n_quad
    circle = radius * np.exp(1j * t)
    nodes = {axis: complex(center[axis - 1]) + circle for axis in axes}
    weights = {
        axis: circle / (nodes[axis] - complex(z[axis - 1])) / n_quad for axis in axes
    }

    total = np.zeros(1 << dim)
    point = [complex(v) for v in z]
    for index in itertools.product(range(n_quad), repeat=len(axes)):
        for axis, m in zip(axes, index, strict=True):
            point[axis - 1] = nodes[axis][m]
        value = F(tuple(point)).coeffs
        for axis, m in zip(axes, index, strict=True):
            value = _times_plane(value, dim, axis, weights[axis][m])
        total += value
    return ScheffersElement(dim, total)


def _cot_offsets(n: int) -> tuple[np.ndarray, np.ndarray]:
    offsets = np.arange(1, n // 2, 2)
    return offsets, 2.0 / n / np.tan(np.pi * offsets / n)


def circle_hilbert(samples: np.ndarray, j: Direction | None = None) -> np.ndarray:
    """Conjugate function on the torus by the discrete cot kernel.

    For each axis in j (all axes when j is None) and every sample m,

        H f(theta_m) = (2/N) sum_{l odd, l < N/2} cot(pi l / N) (f_(m-l) - f_(m+l))

    The singular node is never used. The rule is exact for trigonometric
    polynomials of degree below N/2.

    Raises:
        OddSampleCountError: an axis in j has an odd number of samples.
    """
    data = np.asarray(samples, dtype=np.float64)
    if j is None:
        j = Direction.all_ones(data.ndim)
    if j.dim != data.ndim:
        raise DimensionMismatchError(
            f"direction {j} does not match {data.ndim}-d samples"
        )
    for axis in j.axes():
        k = axis - 1
        n = data.shape[k]
        if n % 2:
            raise OddSampleCountError(
                f"axis {axis} has {n} samples; the cot pairing needs an even count"
            )
        result = np.zeros_like(data)
        for offset, weight in zip(*_cot_offsets(n), strict=True):
            result += weight * (
                np.roll(data, int(offset), axis=k) - np.roll(data, -int(offset), axis=k)
            )
        data = result
    return data


def poisson_halfplane(
    g: GridSignal, x: float | np.ndarray, y: float
) -> tuple[float | np.ndarray, float | np.ndarray]:
    """Poisson and conjugate-Poisson integrals of 1-D boundary samples.

    u(x, y)  = int f(t) y / (pi ((x-t)^2 + y^2)) dt
    u+(x, y) = int f(t) (x-t) / (pi ((x-t)^2 + y^2)) dt

    The integrals are truncated to the grid and use the trapezoidal rule.

    Raises:
        NonPositiveHeightError: y <= 0.
    """
    if g.dim != 1:
        raise UnsupportedDimensionError(
            f"half-plane kernels are one-dimensional, got d={g.dim}"
        )
    if not y > 0:
        raise NonPositiveHeightError(f"height must be positive, got {y}")
    t = g.axis_coordinates(0)
    weights = np.full(t.shape, g.spacing[0])
    weights[0] = weights[-1] = g.spacing[0] / 2
    weighted = g.data * weights

    points = np.atleast_1d(np.asarray(x, dtype=np.float64))
    diff = points[:, None] - t[None, :]
    denom = np.pi * (diff**2 + y**2)
    u = (y / denom) @ weighted
    conjugate = (diff / denom) @ weighted
    if np.ndim(x) == 0:
        return float(u[0]), float(conjugate[0])
    return u, conjugate


def _mobius_params(
    values: Sequence[complex], a: Sequence[complex], theta: Sequence[float] | None
) -> list[float]:
    if len(values) != len(a):
        raise DimensionMismatchError(
            f"need one parameter per axis, got {len(values)} values and {len(a)}"
        )
    angles = [0.0] * len(a) if theta is None else [float(v) for v in theta]
    if len(angles) != len(a):
        raise DimensionMismatchError(f"need {len(a)} angles, got {len(angles)}")
    for axis, param in enumerate(a, start=1):
        if abs(param) >= 1:
            raise ConfigError(f"|a_{axis}| must be < 1, got {abs(param)!r}")
        if complex(param).imag <= 0:
            emit_warning(WarningCode.W002_MOBIUS_ORIENTATION, f"axis {axis}", stacklevel=3)
    return angles


def mobius_to_upper(
    w: Sequence[complex],
    a: Sequence[complex],
    theta: Sequence[float] | None = None,
) -> tuple[complex, ...]:
    """Per-axis map (conj(a) w - exp(e_i theta) a) / (w - exp(e_i theta)).

    Raises:
        PoleError: w_i equals exp(e_i theta_i).
    """
    angles = _mobius_params(w, a, theta)
    images = []
    for axis, (value, param, angle) in enumerate(zip(w, a, angles, strict=True), 1):
        pole = np.exp(1j * angle)
        value = complex(value)
        if abs(value - pole) <= POLE_TOLERANCE:
            raise PoleError(f"w_{axis} sits on the pole exp(e_{axis} {angle!r})")
        param = complex(param)
        images.append((param.conjugate() * value - pole * param) / (value - pole))
    return tuple(images)


def mobius_from_upper(
    zeta: Sequence[complex],
    a: Sequence[complex],
    theta: Sequence[float] | None = None,
) -> tuple[complex, ...]:
    """Inverse of mobius_to_upper: w = exp(e_i theta) (zeta - a) / (zeta - conj(a))."""
    angles = _mobius_params(zeta, a, theta)
    images = []
    for axis, (value, param, angle) in enumerate(zip(zeta, a, angles, strict=True), 1):
        param = complex(param)
        value = complex(value)
        if abs(value - param.conjugate()) <= POLE_TOLERANCE:
            raise PoleError(f"zeta_{axis} sits on the pole conj(a_{axis})")
        images.append(np.exp(1j * angle) * (value - param) / (value - param.conjugate()))
    return tuple(complex(v) for v in images)
