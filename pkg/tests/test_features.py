# SPDX-License-Identifier: MIT
import warnings

import numpy as np
import pytest

from scheffers_analytic.algebra import Direction
from scheffers_analytic.errors import (
    ConfigError,
    DimensionMismatchError,
    HsasWarning,
    WarningCode,
)
from scheffers_analytic.features import (
    PhaseField,
    amplitude,
    band_edges,
    bedrosian_check,
    envelope_report,
    inst_frequency,
    narrowband_construct,
    phase,
)
from scheffers_analytic.grid import AnalyticGrid, GridSignal, grid_make
from scheffers_analytic.transform import analytic_signal
from scheffers_analytic.verification import bedrosian_pair


def _cosine(n: int = 64, k: int = 3) -> GridSignal:
    return grid_make(1, (n,), (0.0,), (2 * np.pi / n,), lambda x: np.cos(k * x))


class TestAmplitude:
    def test_aligned_product_is_one(self, periodic_2d):
        """cos x cos 2y has unit amplitude."""
        amp = amplitude(analytic_signal(periodic_2d))
        np.testing.assert_allclose(amp.data, 1.0, atol=1e-12)

    def test_root_sum_square(self):
        """Amplitude sums squares over all components."""
        a = AnalyticGrid((0.0,), (1.0,), np.array([[3.0], [4.0]]))
        assert amplitude(a).data[0] == pytest.approx(5.0)


class TestPhase:
    def test_linear_phase(self):
        """cos 3x has wrapped phase 3x."""
        g = _cosine()
        p = phase(analytic_signal(g), Direction.parse("1"))
        expected = np.angle(np.exp(3j * g.axis_coordinates(0)))
        wrapped = np.angle(np.exp(1j * (p.values.data - expected)))
        np.testing.assert_allclose(wrapped, 0.0, atol=1e-12)
        assert p.defined_fraction == 1.0

    def test_minus_pi_maps_to_pi(self):
        """The range is (-pi, pi]."""
        a = AnalyticGrid((0.0,), (1.0,), np.array([[-1.0], [-0.0]]))
        assert phase(a, Direction.parse("1")).values.data[0] == pytest.approx(np.pi)

    def test_masked_samples(self):
        """Samples with a tiny radius are undefined and hold 0."""
        components = np.array([[1.0, 0.0, 1.0, 1.0], [0.0, 0.0, 1.0, -1.0]])
        p = phase(AnalyticGrid((0.0,), (1.0,), components), Direction.parse("1"))
        np.testing.assert_array_equal(p.undefined, [False, True, False, False])
        assert p.values.data[1] == 0.0

    def test_mostly_undefined_warns(self):
        """W001 fires when more than half of the samples are masked."""
        components = np.zeros((2, 4))
        components[0, 0] = 1.0
        with warnings.catch_warnings(record=True) as records:
            warnings.simplefilter("always")
            phase(AnalyticGrid((0.0,), (1.0,), components), Direction.parse("1"))
        codes = [r.message.code for r in records if isinstance(r.message, HsasWarning)]
        assert WarningCode.W001_PHASE_MOSTLY_UNDEFINED in codes

    def test_zero_direction_rejected(self, periodic_2d):
        """Phase needs a shifted direction."""
        with pytest.raises(ConfigError):
            phase(analytic_signal(periodic_2d), Direction.parse("00"))

    def test_mask_shape_checked(self):
        """PhaseField mask must match the grid."""
        with pytest.raises(DimensionMismatchError):
            PhaseField(GridSignal((0.0,), (1.0,), np.zeros(3)), np.zeros(4, dtype=bool))


class TestInstFrequency:
    def test_constant_frequency(self):
        """The unwrapped derivative of 3x is 3."""
        g = _cosine()
        j = Direction.parse("1")
        nu = inst_frequency(phase(analytic_signal(g), j), j)
        np.testing.assert_allclose(nu.values.data, 3.0, atol=1e-9)

    def test_mask_dilates(self):
        """Neighbours of undefined samples become undefined."""
        values = GridSignal((0.0,), (1.0,), np.arange(5.0))
        undefined = np.array([False, False, True, False, False])
        nu = inst_frequency(PhaseField(values, undefined), Direction.parse("1"))
        np.testing.assert_array_equal(nu.undefined, [False, True, True, True, False])
        assert nu.values.data[2] == 0.0

    def test_too_few_samples(self):
        """Differentiation needs three samples per axis."""
        p = PhaseField(GridSignal((0.0,), (1.0,), np.zeros(2)), np.zeros(2, dtype=bool))
        with pytest.raises(ConfigError):
            inst_frequency(p, Direction.parse("1"))

    def test_second_order_accuracy(self):
        """Halving the step cuts the interior error of nu = 20 + cos x about fourfold."""
        j = Direction.parse("1")
        errors = []
        for n in (128, 256):
            g = grid_make(1, (n,), (0.0,), (2 * np.pi / n,), lambda x: np.cos(20 * x + np.sin(x)))
            nu = inst_frequency(phase(analytic_signal(g), j), j)
            exact = 20 + np.cos(g.axis_coordinates(0))
            errors.append(np.max(np.abs(nu.values.data - exact)[1:-1]))
        assert 3.5 < errors[0] / errors[1] < 4.5


class TestEnvelope:
    def test_report_covers_all_directions(self, periodic_2d):
        """The default report has a phase for every non-zero direction."""
        report = envelope_report(analytic_signal(periodic_2d))
        assert set(report.phases) == set(Direction.every(2, include_zero=False))
        assert set(report.frequencies) == set(report.phases)
        np.testing.assert_allclose(report.amplitude.data, 1.0, atol=1e-12)

    def test_narrowband_construct_matches_pipeline(self, periodic_2d):
        """A exp(e1 x) exp(e2 2y) is the analytic signal of A cos x cos 2y."""
        x, y = periodic_2d.meshgrid()
        A = periodic_2d.with_data(np.full(periodic_2d.shape, 2.0))
        built = narrowband_construct(A, [periodic_2d.with_data(x), periodic_2d.with_data(2 * y)])
        expected = analytic_signal(periodic_2d.with_data(2.0 * periodic_2d.data))
        np.testing.assert_allclose(built.components, expected.components, atol=1e-12)

    def test_narrowband_gaussian_envelope(self):
        """A Gaussian envelope on a fast carrier matches the pipeline."""
        n, half = 128, 8.0
        omega = 2 * np.pi * 25 / (2 * half)
        origin, spacing = (-half, -half), (2 * half / n,) * 2
        envelope = grid_make(2, (n, n), origin, spacing, lambda x, y: np.exp(-(x**2 + y**2) / 2))
        x, y = envelope.meshgrid()
        built = narrowband_construct(
            envelope, [envelope.with_data(omega * x), envelope.with_data(omega * y)]
        )
        signal = envelope.with_data(envelope.data * np.cos(omega * x) * np.cos(omega * y))
        expected = analytic_signal(signal).components
        np.testing.assert_allclose(built.components, expected, atol=1e-10)

    def test_narrowband_needs_one_phase_per_axis(self, periodic_2d):
        """Phase count must equal d."""
        with pytest.raises(DimensionMismatchError):
            narrowband_construct(periodic_2d, [periodic_2d])


class TestBandEdges:
    def test_single_tone(self):
        """A pure tone has both edges at its frequency."""
        low, high = band_edges(_cosine(k=5), 0)
        assert low == pytest.approx(5.0)
        assert high == pytest.approx(5.0)

    def test_zero_signal(self):
        """A zero signal has no band."""
        assert band_edges(GridSignal((0.0,), (1.0,), np.zeros(8)), 0) == (float("inf"), 0.0)


class TestBedrosian:
    def test_separated_bands_one_dimensional(self):
        """Gaussian times a fast cosine factors through H."""
        low, high = bedrosian_pair(1, 1024, 2 * np.pi * 200 / 32, 1.0, 16.0)
        report = bedrosian_check(low, high, Direction.parse("1"))
        assert report.hypotheses_satisfied
        assert report.max_relative <= 1e-6
        assert report.to_dict()["verdict"] == "hypotheses satisfied"

    def test_separated_bands_two_dimensional(self):
        """The product rule holds along j = 11 as well."""
        low, high = bedrosian_pair(2, 256, 2 * np.pi * 80 / 16, 1.0, 8.0)
        report = bedrosian_check(low, high, Direction.parse("11"))
        assert report.hypotheses_satisfied
        assert report.max_relative <= 1e-6

    def test_overlapping_bands(self):
        """Swapping the roles violates the band hypothesis."""
        low, high = bedrosian_pair(1, 256, 2 * np.pi * 10 / 16, 1.0, 8.0)
        report = bedrosian_check(high, low, Direction.parse("1"))
        assert not report.hypotheses_satisfied
        assert report.verdict == "hypotheses violated"

    def test_constant_factor_is_exact(self, periodic_2d):
        """A constant low-pass factor leaves no discrepancy at all."""
        x, y = periodic_2d.meshgrid()
        low = periodic_2d.with_data(np.full(periodic_2d.shape, 3.0))
        high = periodic_2d.with_data(np.cos(5 * x) * np.cos(4 * y))
        report = bedrosian_check(low, high, Direction.parse("11"))
        assert report.max_relative == 0.0
        assert report.l2_relative == 0.0
        assert report.hypotheses_satisfied

    def test_lattices_must_match(self):
        """Both inputs share one lattice."""
        a = GridSignal((0.0,), (1.0,), np.ones(8))
        b = GridSignal((0.0,), (0.5,), np.ones(8))
        with pytest.raises(DimensionMismatchError):
            bedrosian_check(a, b, Direction.parse("1"))
