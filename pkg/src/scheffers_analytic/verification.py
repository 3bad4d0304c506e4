# SPDX-License-Identifier: MIT
"""Self-test checks of the whole pipeline at reduced sizes.

Every check is deterministic (fixed seeds) and returns a CheckResult with
the worst measured error against its tolerance.

Component Contract:
    Input: Config
    Output: list[CheckResult], BedrosianReport
    Dependencies: numpy, scipy.fft, every numerical module
"""

from __future__ import annotations

import time
from collections.abc import Callable

import numpy as np
import scipy.fft

from scheffers_analytic.algebra import (
    DEFAULT_INVERT_RCOND,
    AlgebraSpec,
    Direction,
    ScheffersElement,
    sch_inverse,
    sch_mul,
)
from scheffers_analytic.errors import ZeroDivisorError
from scheffers_analytic.features import BedrosianReport, amplitude, bedrosian_check
from scheffers_analytic.grid import GridSignal, HyperSpectrum, grid_make
from scheffers_analytic.holo import (
    UpperPoint,
    cauchy_polydisk,
    circle_hilbert,
    cr_residual,
    holo_extend,
    holo_extend_grid,
    negative_support_mask,
    poisson_halfplane,
)
from scheffers_analytic.models import CheckResult
from scheffers_analytic.noncomm import (
    ordering_search,
    quaternion_analytic_2d,
    symmetric_quaternion_candidate,
)
from scheffers_analytic.options import Config
from scheffers_analytic.oracle import (
    CLOSED_FORMS,
    gauss_cos,
    oracle_cube_component,
    oracle_gauss_cos_1d,
)
from scheffers_analytic.quadrature import fj_quadrature
from scheffers_analytic.transform import (
    analytic_signal,
    frequency_sign,
    hft_forward,
    partial_hilbert,
)

SEED = 20240917
BEDROSIAN_TOLERANCE = 1e-6

Outcome = tuple[float, bool, str | None]


def random_bandlimited(
    rng: np.random.Generator,
    shape: tuple[int, ...],
    spacing: tuple[float, ...] | None = None,
    fraction: float = 0.25,
) -> GridSignal:
    """Random real grid whose spectrum vanishes beyond fraction * N per axis."""
    data = rng.standard_normal(shape)
    spectrum = scipy.fft.fftn(data)
    for axis, n in enumerate(shape):
        k = np.abs(np.fft.fftfreq(n) * n)
        keep = (k <= fraction * n).astype(float)
        view = [1] * len(shape)
        view[axis] = n
        spectrum = spectrum * keep.reshape(view)
    data = scipy.fft.ifftn(spectrum).real
    spacing = spacing or (1.0,) * len(shape)
    return GridSignal((0.0,) * len(shape), spacing, data)


def _timed(name: str, tolerance: float, check: Callable[[], Outcome]) -> CheckResult:
    start = time.perf_counter()
    measured, passed, detail = check()
    return CheckResult(
        name=name,
        passed=bool(passed),
        measured=float(measured),
        tolerance=tolerance,
        duration=time.perf_counter() - start,
        detail=detail,
    )


def _inverse_faults(rng: np.random.Generator, rcond: float) -> int:
    """Random S_4 elements that fail x * x^-1 = 1, plus zero divisors that invert."""
    one = ScheffersElement.one(4)
    faults = 0
    for _ in range(100):
        x = ScheffersElement(4, rng.standard_normal(16))
        try:
            inverse = sch_inverse(x, rcond)
        except ZeroDivisorError:
            faults += 1
            continue
        if not (x * inverse).allclose(one, atol=1e-9):
            faults += 1
    # (1 + e1 e2)(1 - e1 e2) = 0
    divisor = ScheffersElement.one(4) + ScheffersElement.blade(4, 0b0011)
    try:
        sch_inverse(divisor, rcond)
    except ZeroDivisorError:
        pass
    else:
        faults += 1
    return faults


def check_algebra_table(rcond: float = DEFAULT_INVERT_RCOND) -> Outcome:
    """S_2 blade products, commutativity/associativity on random S_4 triples and inverses."""
    e1, e2, e12 = (ScheffersElement.blade(2, m) for m in (1, 2, 3))
    one = ScheffersElement.one(2)
    table = {
        (1, 1): -one, (1, 2): e12, (1, 3): -e2,
        (2, 1): e12, (2, 2): -one, (2, 3): -e1,
        (3, 1): -e2, (3, 2): -e1, (3, 3): one,
    }
    blades = {1: e1, 2: e2, 3: e12}
    wrong = sum(
        not sch_mul(blades[a], blades[b]).allclose(expected, atol=0.0)
        for (a, b), expected in table.items()
    )

    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(1000):
        x, y, z = (ScheffersElement(4, rng.standard_normal(16)) for _ in range(3))
        scale = float(np.linalg.norm(x.coeffs) * np.linalg.norm(y.coeffs) * np.linalg.norm(z.coeffs))
        commute = np.max(np.abs((x * y).coeffs - (y * x).coeffs)) / scale
        assoc = np.max(np.abs(((x * y) * z).coeffs - (x * (y * z)).coeffs)) / scale
        worst = max(worst, float(commute), float(assoc))
    faults = _inverse_faults(rng, rcond)
    passed = wrong == 0 and faults == 0 and worst <= 1e-12
    return worst, passed, f"{wrong} wrong table entries, {faults} inverse faults"


def check_hilbert_spectrum() -> Outcome:
    rng = np.random.default_rng(SEED + 1)
    n = 256
    sign = frequency_sign(n)
    interior = sign != 0
    worst = 0.0
    for _ in range(20):
        g = random_bandlimited(rng, (n,))
        lhs = scipy.fft.fft(partial_hilbert(g, Direction((1,))).data)
        rhs = -1j * sign * scipy.fft.fft(g.data)
        worst = max(worst, float(np.max(np.abs(lhs - rhs)[interior]) / np.max(np.abs(rhs))))
    return worst, worst <= 1e-10, None


def _random_grids() -> list[GridSignal]:
    rng = np.random.default_rng(SEED + 2)
    return [
        GridSignal((0.0,) * len(shape), (0.5,) * len(shape), rng.standard_normal(shape))
        for shape in ((32,), (16, 12), (8, 8, 6))
    ]


def check_positive_support(workers: int | None) -> Outcome:
    worst = 0.0
    for g in _random_grids():
        spectrum = hft_forward(analytic_signal(g, workers), workers)
        negative = negative_support_mask(spectrum.shape)
        leak = float(np.max(np.abs(spectrum.components[:, negative])))
        worst = max(worst, leak / spectrum.norm())
    return worst, worst <= 1e-10, None


def check_component_identity(workers: int | None) -> Outcome:
    worst = 0.0
    for g in _random_grids():
        a = analytic_signal(g, workers)
        scale = float(np.max(np.abs(g.data)))
        for j in Direction.every(g.dim):
            diff = a.component(j) - partial_hilbert(g, j, workers).data
            worst = max(worst, float(np.max(np.abs(diff))) / scale)
    return worst, worst <= 1e-9, None


def check_closed_forms(workers: int | None, n: int = 128) -> Outcome:
    worst = 0.0
    names = ("aligned", "rotated", "lowdim", "lowdim_rotated")
    errors = []
    for name in names:
        closed = CLOSED_FORMS[name]
        g = grid_make(2, (n, n), closed.origin, closed.spacing(n), closed.signal)
        amp = amplitude(analytic_signal(g, workers))
        error = float(np.max(np.abs(amp.data - closed.amplitude(*g.meshgrid()))))
        errors.append(f"{name}={error:.2e}")
        worst = max(worst, error)
    return worst, worst <= 1e-8, " ".join(errors)


def check_cube_oracle(config: Config, workers: int | None) -> Outcome:
    closed = CLOSED_FORMS["cube"]
    n = 64
    g = grid_make(3, (n, n, n), closed.origin, closed.spacing(n), closed.signal)
    shifted = partial_hilbert(g, Direction((1, 0, 0)), workers)
    rng = np.random.default_rng(SEED + 3)
    worst = 0.0
    for _ in range(20):
        index = tuple(int(v) for v in rng.integers(n // 8, n - n // 8, size=3))
        point = [g.axis_coordinates(k)[index[k]] for k in range(3)]
        worst = max(worst, abs(float(shifted.data[index]) - float(oracle_cube_component(*point))))

    quad = fj_quadrature(
        lambda x: gauss_cos(10.0, 50.0, x),
        Direction((1,)),
        [[0.1], [0.25]],
        [(-2.5, 2.5)],
        resolution=config.quadrature_nodes,
        tolerance=config.quadrature_tolerance,
        max_refinements=config.quadrature_max_refinements,
    )
    reference = oracle_gauss_cos_1d(10.0, 50.0, np.array([0.1, 0.25]))
    erf_error = float(np.max(np.abs(quad.values - reference)))
    return worst, worst <= 1e-3 and erf_error <= 1e-6, f"erf vs quadrature {erf_error:.2e}"


def bedrosian_pair(
    dim: int, n: int, omega0: float, sigma: float, half_width: float
) -> tuple[GridSignal, GridSignal]:
    """Gaussian low-pass factor and cos(omega0 x) high-pass factor on one lattice."""
    spacing = (2 * half_width / n,) * dim
    origin = (-half_width,) * dim
    low = grid_make(
        dim, (n,) * dim, origin, spacing,
        lambda *xs: np.exp(-sum(x**2 for x in xs) / (2 * sigma**2)),
    )
    high = grid_make(
        dim, (n,) * dim, origin, spacing,
        lambda *xs: np.prod([np.cos(omega0 * x) for x in xs], axis=0),
    )
    return low, high


def run_bedrosian(
    dim: int,
    n: int,
    omega0: float,
    sigma: float,
    half_width: float,
    config: Config,
) -> BedrosianReport:
    low, high = bedrosian_pair(dim, n, omega0, sigma, half_width)
    return bedrosian_check(
        low, high, Direction.all_ones(dim), config.band_threshold, config.threads
    )


def check_bedrosian(config: Config) -> Outcome:
    reports = [
        run_bedrosian(1, 1024, 2 * np.pi * 200 / 32, 1.0, 16.0, config),
        run_bedrosian(2, 256, 2 * np.pi * 80 / 16, 1.0, 8.0, config),
    ]
    worst = max(r.max_relative for r in reports)
    satisfied = all(r.hypotheses_satisfied for r in reports)
    return worst, worst <= BEDROSIAN_TOLERANCE and satisfied, f"hypotheses satisfied: {satisfied}"


def two_mode_spectrum(rng: np.random.Generator, n: int = 16, spacing: float = 0.5) -> HyperSpectrum:
    components = np.zeros((4, n, n))
    for bin_index in ((1, 2), (2, 1)):
        components[(slice(None), *bin_index)] = rng.standard_normal(4)
    return HyperSpectrum((0.0, 0.0), (spacing, spacing), components)


def check_holomorphy(workers: int | None) -> Outcome:
    rng = np.random.default_rng(SEED + 4)
    spectrum = two_mode_spectrum(rng)
    p = UpperPoint((0.3, 0.7), (0.5, 0.5))

    def extension(q: UpperPoint) -> ScheffersElement:
        return holo_extend(spectrum, q)

    coarse = cr_residual(extension, p, 0.1)
    fine = cr_residual(extension, p, 0.05)
    ratios = [c / f for c, f in zip(coarse, fine, strict=True)]
    ratio_ok = all(3.5 <= r <= 4.5 for r in ratios)

    g = grid_make(
        2, (32, 32), (-8.0, -8.0), (0.5, 0.5),
        lambda x, y: np.exp(-(x**2 + y**2) / 8) * np.cos(1.5 * x) * np.cos(2.0 * y),
    )
    boundary = analytic_signal(g, workers)
    full = hft_forward(boundary, workers)
    distances = [
        float(np.linalg.norm(holo_extend_grid(full, (y, y)).components - boundary.components))
        for y in (0.4, 0.2, 0.1, 0.05)
    ]
    monotone = all(b < a for a, b in zip(distances, distances[1:]))
    worst = max(abs(r - 4.0) for r in ratios)
    detail = "ratios " + ", ".join(f"{r:.3f}" for r in ratios) + f"; monotone={monotone}"
    return worst, ratio_ok and monotone, detail


def _cubic(dim: int) -> Callable[[tuple[complex, ...]], ScheffersElement]:
    def polynomial(z: tuple[complex, ...]) -> ScheffersElement:
        z1 = ScheffersElement.plane(dim, 1, z[0])
        z2 = ScheffersElement.plane(dim, 2, z[1])
        return z1 * z2 + z1 * z1 * z1 - 2.0 * (z2 * z2) + ScheffersElement.scalar(dim, 0.5)

    return polynomial


def check_cauchy(config: Config) -> Outcome:
    polynomial = _cubic(2)
    j = Direction((1, 1))
    inside = (complex(0.3, 0.1), complex(-0.2, 0.4))
    outside = (complex(2.0, 0.5), complex(0.1, 0.1))
    value = cauchy_polydisk(polynomial, (0j, 0j), 1.0, inside, j, config.cauchy_nodes)
    interior = float(np.max(np.abs(value.coeffs - polynomial(inside).coeffs)))
    exterior = float(
        np.max(np.abs(cauchy_polydisk(polynomial, (0j, 0j), 1.0, outside, j, config.cauchy_nodes).coeffs))
    )
    worst = max(interior, exterior)
    return worst, worst <= 1e-10, f"inside {interior:.2e}, outside {exterior:.2e}"


def check_noncomm() -> Outcome:
    failures = []
    quaternion = ordering_search(2, AlgebraSpec.clifford(2))
    if symmetric_quaternion_candidate() not in quaternion.consistent:
        failures.append("d=2 clifford misses the symmetric placement")
    if ordering_search(3, AlgebraSpec.clifford(3)).exists:
        failures.append("d=3 clifford has a consistent placement")
    if not ordering_search(3, AlgebraSpec.scheffers(3)).exists:
        failures.append("d=3 scheffers has no consistent placement")
    return float(len(failures)), not failures, "; ".join(failures) or None


def check_quaternion(workers: int | None) -> Outcome:
    rng = np.random.default_rng(SEED + 5)
    worst = 0.0
    for _ in range(10):
        g = random_bandlimited(rng, (16, 16))
        expected = analytic_signal(g, workers).components
        actual = quaternion_analytic_2d(g, workers).components
        worst = max(worst, float(np.max(np.abs(actual - expected)) / np.max(np.abs(expected))))
    return worst, worst <= 1e-9, None


def check_kernels() -> Outcome:
    n = 256
    theta = 2 * np.pi * np.arange(n) / n
    circle = GridSignal((0.0,), (2 * np.pi / n,), np.zeros(n))
    circle_error = 0.0
    for k in range(65):
        for wave in (np.cos(k * theta), np.sin(k * theta)):
            expected = partial_hilbert(circle.with_data(wave), Direction((1,))).data
            circle_error = max(circle_error, float(np.max(np.abs(circle_hilbert(wave) - expected))))

    g = poisson_test_signal()
    reference = partial_hilbert(g, Direction((1,))).data
    points = np.array([-3.0, -1.0, 0.0, 1.0, 2.5])
    index = np.rint((points - g.origin[0]) / g.spacing[0]).astype(int)
    u, conjugate = poisson_halfplane(g, g.axis_coordinates(0)[index], 0.01)
    poisson_error = float(
        max(np.max(np.abs(u - g.data[index])), np.max(np.abs(conjugate - reference[index])))
    )
    detail = f"circle {circle_error:.2e}, poisson {poisson_error:.2e}"
    return circle_error, circle_error <= 1e-8 and poisson_error <= 1e-3, detail


def poisson_test_signal(sigma: float = 80.0, omega0: float = 0.06, step: float = 0.005) -> GridSignal:
    """Slowly varying Gaussian-windowed cosine on [-8 sigma, 8 sigma)."""
    n = int(round(16 * sigma / step))
    return grid_make(
        1, (n,), (-8 * sigma,), (step,),
        lambda x: np.exp(-(x**2) / (2 * sigma**2)) * np.cos(omega0 * x),
    )


def run_selftest(config: Config) -> list[CheckResult]:
    """Run every pipeline check and return the results in order."""
    workers = config.threads
    return [
        _timed("algebra_table", 1e-12, lambda: check_algebra_table(config.invert_rcond)),
        _timed("hilbert_spectrum", 1e-10, check_hilbert_spectrum),
        _timed("positive_support", 1e-10, lambda: check_positive_support(workers)),
        _timed("component_identity", 1e-9, lambda: check_component_identity(workers)),
        _timed("closed_forms", 1e-8, lambda: check_closed_forms(workers)),
        _timed("cube_oracle", 1e-3, lambda: check_cube_oracle(config, workers)),
        _timed("bedrosian", BEDROSIAN_TOLERANCE, lambda: check_bedrosian(config)),
        _timed("holomorphy", 0.5, lambda: check_holomorphy(workers)),
        _timed("cauchy", 1e-10, lambda: check_cauchy(config)),
        _timed("noncomm", 0.0, check_noncomm),
        _timed("quaternion", 1e-9, lambda: check_quaternion(workers)),
        _timed("kernels", 1e-8, check_kernels),
    ]
