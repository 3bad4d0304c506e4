# SPDX-License-Identifier: MIT
"""Closed-form reference fields.

Every field here is known analytically, together with its phase-shifted
components and instantaneous amplitude, so the FFT pipeline can be checked
against exact values:

    aligned         cos x cos y
    rotated         cos x cos y turned by 45 degrees
    lowdim          cos x on a 2-D lattice
    lowdim_rotated  cos x on a 2-D lattice turned by 45 degrees
    cube            exp(-10x^2 - 20y^2 - 20z^2) cos 50x cos 40y cos 60z

The Hilbert transform of a Gaussian-windowed cosine needs the error function
at complex arguments; ``complex_erf`` implements it without special-function
libraries so that it can serve as an independent reference.

Component Contract:
    Input: coordinates (floats or broadcastable arrays)
    Output: floats / arrays, ClosedFormField registry
    Dependencies: numpy, errors
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

import numpy as np

from scheffers_analytic.errors import ConfigError, ConvergenceError

SERIES_RADIUS = 4.0
SERIES_REAL_BAND = 1.0
MAX_TERMS = 500
ERF_EPSILON = 1e-16
LENTZ_TINY = 1e-300

CUBE_ALPHA = (10.0, 20.0, 20.0)
CUBE_OMEGA = (50.0, 40.0, 60.0)
SQRT2 = math.sqrt(2.0)

Coord = float | np.ndarray


def _erf_series(z: complex) -> complex:
    """Maclaurin series 2/sqrt(pi) sum (-1)^n z^(2n+1) / (n! (2n+1))."""
    z2 = z * z
    term = z
    total = z
    limit = MAX_TERMS + int(abs(z2))
    for n in range(1, limit):
        term *= -z2 / n
        contribution = term / (2 * n + 1)
        total += contribution
        if abs(contribution) <= ERF_EPSILON * abs(total):
            return 2.0 / math.sqrt(math.pi) * total
    raise ConvergenceError(f"erf series did not converge at z={z!r}")


def _erfc_continued_fraction(z: complex) -> complex:
    """erfc for Re z > 0 by the modified Lentz method.

    erfc z = exp(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
    """
    f = z
    c = z
    d = 0j
    for n in range(1, MAX_TERMS):
        a = n / 2.0
        d = z + a * d
        if d == 0:
            d = LENTZ_TINY
        c = z + a / c
        if c == 0:
            c = LENTZ_TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) <= ERF_EPSILON:
            return cmath.exp(-z * z) / math.sqrt(math.pi) / f
    raise ConvergenceError(f"erfc continued fraction did not converge at z={z!r}")


def complex_erf(z: complex) -> complex:
    """Error function of a complex argument.

    Uses the power series inside |z| <= 4 and near the imaginary axis
    (|Re z| < 1, where the series does not cancel), and the erfc continued
    fraction elsewhere, with erf(-z) = -erf(z) for the left half-plane.

    Raises:
        ConvergenceError: neither expansion settled.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ConvergenceError(f"erf argument is not finite: {z!r}")
    if abs(z) <= SERIES_RADIUS or abs(z.real) < SERIES_REAL_BAND:
        return _erf_series(z)
    if z.real < 0:
        return -complex_erf(-z)
    return 1.0 - _erfc_continued_fraction(z)


def _gauss_cos_hilbert_scalar(alpha: float, omega: float, x: float) -> float:
    root = math.sqrt(alpha)
    low = complex_erf(complex(omega / 2, -alpha * x) / root)
    high = complex_erf(complex(omega / 2, alpha * x) / root)
    prefactor = 0.5j * cmath.exp(-x * complex(alpha * x, omega))
    value = prefactor * (low - cmath.exp(2j * omega * x) * high)
    return value.real


def oracle_gauss_cos_1d(
    alpha: float, omega: float, x: float | np.ndarray
) -> float | np.ndarray:
    """Hilbert transform of exp(-alpha x^2) cos(omega x).

    Arrays are evaluated once per distinct coordinate value, so meshgrid
    inputs cost no more than their axis vector.

    Raises:
        ConfigError: alpha <= 0.
        ConvergenceError: the error function did not converge.
    """
    if not alpha > 0:
        raise ConfigError(f"alpha must be positive, got {alpha}")
    if np.ndim(x) == 0:
        return _gauss_cos_hilbert_scalar(alpha, omega, float(x))
    values = np.asarray(x, dtype=np.float64)
    unique, inverse = np.unique(values, return_inverse=True)
    evaluated = np.array([_gauss_cos_hilbert_scalar(alpha, omega, v) for v in unique])
    return evaluated[inverse].reshape(values.shape)


def gauss_cos(alpha: float, omega: float, x: float | np.ndarray) -> float | np.ndarray:
    """exp(-alpha x^2) cos(omega x)."""
    return np.exp(-alpha * np.square(x)) * np.cos(omega * np.asarray(x))


def oracle_gauss_cos_1d_pair(
    alpha: float, omega: float, x: float | np.ndarray
) -> tuple[float | np.ndarray, float | np.ndarray]:
    """(signal, Hilbert transform) of exp(-alpha x^2) cos(omega x)."""
    return gauss_cos(alpha, omega, x), oracle_gauss_cos_1d(alpha, omega, x)


def cube_signal(x: Coord, y: Coord, z: Coord) -> Coord:
    """exp(-10x^2 - 20y^2 - 20z^2) cos(50x) cos(40y) cos(60z)."""
    return (
        gauss_cos(CUBE_ALPHA[0], CUBE_OMEGA[0], x)
        * gauss_cos(CUBE_ALPHA[1], CUBE_OMEGA[1], y)
        * gauss_cos(CUBE_ALPHA[2], CUBE_OMEGA[2], z)
    )


def oracle_cube_component(x: Coord, y: Coord, z: Coord) -> Coord:
    """f_100 of the cube signal, separable in x, y and z."""
    return (
        oracle_gauss_cos_1d(CUBE_ALPHA[0], CUBE_OMEGA[0], x)
        * gauss_cos(CUBE_ALPHA[1], CUBE_OMEGA[1], y)
        * gauss_cos(CUBE_ALPHA[2], CUBE_OMEGA[2], z)
    )


def oracle_cube_amplitude(x: Coord, y: Coord, z: Coord) -> Coord:
    """Product over axes of sqrt(f_l^2 + H[f_l]^2)."""
    total: Coord = 1.0
    for alpha, omega, coord in zip(CUBE_ALPHA, CUBE_OMEGA, (x, y, z), strict=True):
        f, h = oracle_gauss_cos_1d_pair(alpha, omega, coord)
        total = total * np.sqrt(np.square(f) + np.square(h))
    return total


def oracle_rotated(x: Coord, y: Coord) -> dict[str, Coord]:
    """Components and amplitude of cos x cos y turned by 45 degrees."""
    cx, cy = np.cos(SQRT2 * np.asarray(x)), np.cos(SQRT2 * np.asarray(y))
    sx, sy = np.sin(SQRT2 * np.asarray(x)), np.sin(SQRT2 * np.asarray(y))
    f = 0.5 * cx + 0.5 * cy
    return {
        "f": f,
        "f00": f,
        "f10": 0.5 * sx,
        "f01": 0.5 * sy,
        "f11": np.zeros_like(f),
        "amplitude": np.sqrt(0.5 * (1.0 + cx * cy)),
    }


def oracle_lowdim_rotated(x: Coord, y: Coord) -> dict[str, Coord]:
    """Components and amplitude of cos((x - y)/sqrt 2)."""
    u = (np.asarray(x) - np.asarray(y)) / SQRT2
    cos_u, sin_u = np.cos(u), np.sin(u)
    return {
        "f": cos_u,
        "f00": cos_u,
        "f10": sin_u,
        "f01": -sin_u,
        "f11": cos_u,
        "amplitude": np.full(np.shape(u), SQRT2),
    }


def oracle_aligned(x: Coord, y: Coord) -> dict[str, Coord]:
    cx, cy = np.cos(np.asarray(x)), np.cos(np.asarray(y))
    sx, sy = np.sin(np.asarray(x)), np.sin(np.asarray(y))
    f = cx * cy
    return {
        "f": f,
        "f00": f,
        "f10": sx * cy,
        "f01": cx * sy,
        "f11": sx * sy,
        "amplitude": np.ones(np.shape(f)),
    }


def oracle_lowdim(x: Coord, y: Coord) -> dict[str, Coord]:
    x, _ = np.broadcast_arrays(np.asarray(x, dtype=np.float64), np.asarray(y))
    cx, sx = np.cos(x), np.sin(x)
    return {
        "f": cx,
        "f00": cx,
        "f10": sx,
        "f01": np.zeros_like(cx),
        "f11": np.zeros_like(cx),
        "amplitude": np.ones(np.shape(cx)),
    }


@dataclass(frozen=True)
class ClosedFormField:
    """A field with known components and amplitude.

    Attributes:
        name: Registry identifier.
        dim: Number of axes.
        origin: Lower corner of the reference box per axis.
        length: Box length per axis; for periodic fields a whole number of
            periods, so sampling it is exact for the DFT.
        signal: Pointwise evaluator of f.
        components: Evaluators of f_j keyed by bitmask (the ones known).
        amplitude: Evaluator of the instantaneous amplitude.
    """

    name: str
    dim: int
    origin: tuple[float, ...]
    length: tuple[float, ...]
    signal: Callable[..., np.ndarray]
    components: Mapping[int, Callable[..., np.ndarray]] = field(repr=False)
    amplitude: Callable[..., np.ndarray] = field(repr=False)

    def spacing(self, n: int) -> tuple[float, ...]:
        """Sample spacing of an n-point-per-axis periodic lattice on the box."""
        return tuple(length / n for length in self.length)

    def evaluate(self, *coords) -> dict[str, np.ndarray]:
        values = {"f": self.signal(*coords), "amplitude": self.amplitude(*coords)}
        for mask, evaluator in self.components.items():
            label = "".join(str(mask >> k & 1) for k in range(self.dim))
            values[f"f{label}"] = evaluator(*coords)
        return values


def _from_table(table: Callable[..., dict], key: str) -> Callable[..., np.ndarray]:
    return lambda *coords: table(*coords)[key]


def _planar(name: str, table: Callable[..., dict], length: float) -> ClosedFormField:
    return ClosedFormField(
        name=name,
        dim=2,
        origin=(0.0, 0.0),
        length=(length, length),
        signal=_from_table(table, "f"),
        components={
            0: _from_table(table, "f00"),
            1: _from_table(table, "f10"),
            2: _from_table(table, "f01"),
            3: _from_table(table, "f11"),
        },
        amplitude=_from_table(table, "amplitude"),
    )


CLOSED_FORMS: dict[str, ClosedFormField] = {
    "aligned": _planar("aligned", oracle_aligned, 2 * math.pi),
    "rotated": _planar("rotated", oracle_rotated, SQRT2 * math.pi),
    "lowdim": _planar("lowdim", oracle_lowdim, 2 * math.pi),
    "lowdim_rotated": _planar("lowdim_rotated", oracle_lowdim_rotated, 2 * SQRT2 * math.pi),
    "cube": ClosedFormField(
        name="cube",
        dim=3,
        origin=(-1.0, -1.0, -1.0),
        length=(2.0, 2.0, 2.0),
        signal=cube_signal,
        components={0: cube_signal, 1: oracle_cube_component},
        amplitude=oracle_cube_amplitude,
    ),
}
