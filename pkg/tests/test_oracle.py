# SPDX-License-Identifier: MIT
import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings
from hypothesis import strategies as st

from scheffers_analytic.errors import ConfigError, ConvergenceError
from scheffers_analytic.oracle import (
    CLOSED_FORMS,
    complex_erf,
    gauss_cos,
    oracle_gauss_cos_1d,
)

finite = st.floats(min_value=-6.0, max_value=6.0, allow_nan=False)


class TestComplexErf:
    @pytest.mark.parametrize(
        "z",
        [0.5, 1.0, 3.9, 4.5, 7.0, -5.0, 1 + 1j, 0.5 + 6j, 0.2 - 5j, 5 + 0.5j, -4.5 + 2j, 3 - 3j],
    )
    def test_matches_scipy(self, z):
        """Both expansions agree with the library implementation."""
        assert complex_erf(z) == pytest.approx(complex(scipy.special.erf(complex(z))), rel=1e-8)

    def test_known_values(self):
        """erf(1) and erf(i) = i erfi(1)."""
        assert complex_erf(1.0).real == pytest.approx(0.8427007929497149, rel=1e-14)
        assert complex_erf(1j) == pytest.approx(1.6504257587975428j, rel=1e-13)

    @settings(deadline=None, max_examples=60)
    @given(finite, finite)
    def test_symmetries(self, re, im):
        """erf is odd and commutes with conjugation."""
        z = complex(re, im)
        value = complex_erf(z)
        scale = max(1.0, abs(value))
        assert abs(complex_erf(-z) + value) <= 1e-9 * scale
        assert abs(complex_erf(z.conjugate()) - value.conjugate()) <= 1e-9 * scale

    def test_not_finite(self):
        """Infinite arguments cannot be expanded."""
        with pytest.raises(ConvergenceError):
            complex_erf(complex(math.inf, 0.0))


class TestGaussCosHilbert:
    def test_narrowband_limit(self):
        """With omega^2 / alpha large, H turns the cosine into a sine."""
        x = np.linspace(-0.5, 0.5, 11)
        expected = np.exp(-10.0 * x**2) * np.sin(50.0 * x)
        np.testing.assert_allclose(oracle_gauss_cos_1d(10.0, 50.0, x), expected, atol=1e-10)

    def test_odd_in_x(self):
        """The transform of an even signal is odd."""
        assert oracle_gauss_cos_1d(2.0, 1.0, 0.0) == pytest.approx(0.0, abs=1e-14)
        assert oracle_gauss_cos_1d(2.0, 1.0, 0.7) == pytest.approx(-oracle_gauss_cos_1d(2.0, 1.0, -0.7))

    def test_array_matches_scalar(self):
        """Meshgrid-shaped inputs evaluate like scalars."""
        x = np.array([[0.1, 0.2], [0.1, -0.3]])
        values = oracle_gauss_cos_1d(3.0, 4.0, x)
        assert values.shape == (2, 2)
        assert values[1, 1] == pytest.approx(oracle_gauss_cos_1d(3.0, 4.0, -0.3))
        assert values[0, 0] == values[1, 0]

    def test_alpha_positive(self):
        """A non-positive alpha has no Gaussian window."""
        with pytest.raises(ConfigError):
            oracle_gauss_cos_1d(0.0, 1.0, 0.0)

    def test_signal(self):
        """gauss_cos evaluates exp(-alpha x^2) cos(omega x)."""
        assert gauss_cos(2.0, 3.0, 0.5) == pytest.approx(math.exp(-0.5) * math.cos(1.5))


class TestClosedForms:
    def test_registry(self):
        """Four planar fields and the cube are registered."""
        assert set(CLOSED_FORMS) == {"aligned", "rotated", "lowdim", "lowdim_rotated", "cube"}
        assert CLOSED_FORMS["cube"].dim == 3

    @pytest.mark.parametrize("name", ["aligned", "rotated", "lowdim", "lowdim_rotated"])
    def test_amplitude_is_component_norm(self, name):
        """The amplitude is the root sum of squares of the components."""
        x, y = np.meshgrid(np.linspace(0, 3, 7), np.linspace(-1, 2, 5), indexing="ij")
        values = CLOSED_FORMS[name].evaluate(x, y)
        norm = np.sqrt(sum(values[k] ** 2 for k in ("f00", "f10", "f01", "f11")))
        np.testing.assert_allclose(values["amplitude"], norm, atol=1e-12)
        np.testing.assert_array_equal(values["f"], values["f00"])

    def test_periodic_boxes(self):
        """Each planar field repeats over its box length."""
        for name in ("aligned", "rotated", "lowdim", "lowdim_rotated"):
            closed = CLOSED_FORMS[name]
            lx, ly = closed.length
            assert closed.signal(0.3 + lx, 0.8) == pytest.approx(closed.signal(0.3, 0.8))
            assert closed.signal(0.3, 0.8 + ly) == pytest.approx(closed.signal(0.3, 0.8))

    def test_cube_labels(self):
        """Cube components are labelled with three bits."""
        values = CLOSED_FORMS["cube"].evaluate(0.1, 0.0, 0.0)
        assert set(values) == {"f", "amplitude", "f000", "f100"}

    def test_spacing(self):
        """n samples cover the box once."""
        assert CLOSED_FORMS["cube"].spacing(64) == (2 / 64,) * 3
