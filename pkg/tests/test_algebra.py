# SPDX-License-Identifier: MIT
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from scheffers_analytic.algebra import (
    AlgebraSpec,
    Direction,
    ScheffersElement,
    blade_sign_table,
    conj_axis,
    mask_shift_sign,
    multiplication_matrix,
    sch_inverse,
    sch_mul,
    sch_mul_arrays,
    sch_norm,
    shift_sign,
    unit_exp,
)
from scheffers_analytic.errors import (
    AxisOutOfRangeError,
    ConfigError,
    DimensionMismatchError,
    ZeroDivisorError,
)

coefficients = st.integers(min_value=1, max_value=4).flatmap(
    lambda d: arrays(
        np.float64,
        (3, 1 << d),
        elements=st.floats(min_value=-10, max_value=10, allow_nan=False),
    )
)


class TestDirection:
    def test_parse_and_mask(self):
        """Bit strings map entry i to bit i."""
        j = Direction.parse("101")
        assert j.bits == (1, 0, 1)
        assert j.mask == 0b101
        assert j.weight == 2
        assert j.axes() == (1, 3)
        assert str(j) == "101"

    def test_from_mask_round_trip(self):
        """from_mask inverts mask for every direction of a dimension."""
        for j in Direction.every(3):
            assert Direction.from_mask(j.mask, 3) == j

    def test_every_counts(self):
        """every yields 2^d directions, 2^d - 1 without the zero one."""
        assert len(list(Direction.every(3))) == 8
        assert len(list(Direction.every(3, include_zero=False))) == 7

    def test_xor(self):
        """xor is entrywise."""
        assert Direction.parse("110").xor(Direction.parse("011")) == Direction.parse("101")

    @pytest.mark.parametrize("text", ["", "102", "a1"])
    def test_parse_rejects_bad_strings(self, text):
        """Only 0/1 strings parse."""
        with pytest.raises(ConfigError):
            Direction.parse(text)

    def test_from_mask_out_of_range(self):
        """A mask wider than the dimension is rejected."""
        with pytest.raises(DimensionMismatchError):
            Direction.from_mask(8, 3)


class TestBladeProduct:
    def test_s2_table(self):
        """The S_2 multiplication table."""
        e1, e2, e12 = (ScheffersElement.blade(2, m) for m in (1, 2, 3))
        one = ScheffersElement.one(2)
        assert (e1 * e1).allclose(-one, atol=0)
        assert (e2 * e2).allclose(-one, atol=0)
        assert (e12 * e12).allclose(one, atol=0)
        assert (e1 * e2).allclose(e12, atol=0)
        assert (e2 * e1).allclose(e12, atol=0)
        assert (e1 * e12).allclose(-e2, atol=0)
        assert (e12 * e2).allclose(-e1, atol=0)

    def test_sign_table_shape(self):
        """Tables are 2^d square and read-only."""
        signs, xor = blade_sign_table(3)
        assert signs.shape == xor.shape == (8, 8)
        assert not signs.flags.writeable
        assert signs[0b011, 0b001] == -1.0
        assert xor[0b011, 0b001] == 0b010

    @settings(deadline=None, max_examples=50)
    @given(coefficients)
    def test_commutative_and_associative(self, coeffs):
        """S_d is commutative and associative."""
        dim = int(np.log2(coeffs.shape[1]))
        x, y, z = (ScheffersElement(dim, c) for c in coeffs)
        scale = 1.0 + sch_norm(x) * sch_norm(y) * (1.0 + sch_norm(z))
        assert (x * y).allclose(y * x, atol=1e-12 * scale)
        assert ((x * y) * z).allclose(x * (y * z), atol=1e-12 * scale)

    @settings(deadline=None, max_examples=30)
    @given(coefficients)
    def test_matrix_matches_product(self, coeffs):
        """multiplication_matrix(a) @ b equals a * b."""
        dim = int(np.log2(coeffs.shape[1]))
        a, b = ScheffersElement(dim, coeffs[0]), ScheffersElement(dim, coeffs[1])
        np.testing.assert_allclose(
            multiplication_matrix(a) @ b.coeffs, (a * b).coeffs, atol=1e-10
        )

    def test_arrays_match_elementwise(self, rng):
        """sch_mul_arrays agrees with sch_mul at every sample."""
        x = rng.standard_normal((4, 5))
        y = rng.standard_normal((4, 5))
        out = sch_mul_arrays(x, y, 2)
        for k in range(5):
            expected = sch_mul(ScheffersElement(2, x[:, k]), ScheffersElement(2, y[:, k]))
            np.testing.assert_allclose(out[:, k], expected.coeffs, atol=1e-14)

    def test_dimension_mismatch(self):
        """Elements of different algebras do not multiply."""
        with pytest.raises(DimensionMismatchError):
            ScheffersElement.one(2) * ScheffersElement.one(3)


class TestElement:
    def test_norm(self):
        """norm(0) = 0 and blades have unit norm."""
        assert sch_norm(ScheffersElement.zero(3)) == 0.0
        assert sch_norm(ScheffersElement.blade(3, 5)) == 1.0

    def test_wrong_coefficient_count(self):
        """2^d coefficients are required."""
        with pytest.raises(DimensionMismatchError):
            ScheffersElement(2, np.zeros(3))

    def test_coeffs_read_only(self):
        """Elements are immutable."""
        a = ScheffersElement.one(2)
        with pytest.raises(ValueError):
            a.coeffs[0] = 2.0

    def test_plane_round_trip(self):
        """plane and plane_value embed and read back a complex number."""
        a = ScheffersElement.plane(3, 2, 1.5 - 0.5j)
        assert a.plane_value(2) == 1.5 - 0.5j
        assert a[0b010] == -0.5

    def test_plane_axis_range(self):
        """Axes are 1-based and bounded by d."""
        with pytest.raises(AxisOutOfRangeError):
            ScheffersElement.plane(2, 3, 1j)

    def test_unit_exp(self):
        """e^(e_i theta) multiplies like the complex exponential."""
        a = unit_exp(1, 0.3, 2) * unit_exp(1, 0.4, 2)
        assert a.allclose(unit_exp(1, 0.7, 2))

    def test_conj_axis(self):
        """conj_axis flips every blade containing the axis."""
        a = ScheffersElement(2, [1.0, 2.0, 3.0, 4.0])
        np.testing.assert_array_equal(conj_axis(a, 1).coeffs, [1.0, -2.0, 3.0, -4.0])


class TestInverse:
    def test_plane_inverse(self):
        """Single-plane elements use the field formula."""
        a = ScheffersElement.plane(3, 3, 2 + 1j)
        assert (a * sch_inverse(a)).allclose(ScheffersElement.one(3))

    def test_general_inverse(self, rng):
        """A generic element has an inverse through the multiplication matrix."""
        a = ScheffersElement(3, rng.standard_normal(8))
        assert (a * sch_inverse(a)).allclose(ScheffersElement.one(3), atol=1e-10)

    def test_zero(self):
        """Zero has no inverse."""
        with pytest.raises(ZeroDivisorError):
            sch_inverse(ScheffersElement.zero(2))

    def test_zero_divisor(self):
        """1 + e_12 annihilates 1 - e_12."""
        a = ScheffersElement(2, [1.0, 0.0, 0.0, 1.0])
        assert (a * ScheffersElement(2, [1.0, 0.0, 0.0, -1.0])).allclose(
            ScheffersElement.zero(2)
        )
        with pytest.raises(ZeroDivisorError):
            sch_inverse(a)


class TestShiftSign:
    def test_examples(self):
        """The sign counts ones of i xor j outside i."""
        assert mask_shift_sign(0b00, 0b01) == -1
        assert mask_shift_sign(0b01, 0b01) == 1
        assert mask_shift_sign(0b00, 0b11) == 1
        assert mask_shift_sign(0b01, 0b11) == -1

    def test_direction_form(self):
        """shift_sign wraps the mask form."""
        assert shift_sign(Direction.parse("00"), Direction.parse("10")) == -1
        with pytest.raises(DimensionMismatchError):
            shift_sign(Direction.parse("0"), Direction.parse("10"))


class TestAlgebraSpec:
    def test_presets(self):
        """Presets fix squares and swap sign."""
        assert AlgebraSpec.scheffers(3).is_commutative
        assert not AlgebraSpec.clifford(3).is_commutative
        assert AlgebraSpec.hyperbolic(2).square_sign == (1, 1)
        assert AlgebraSpec.named("clifford", 2) == AlgebraSpec.clifford(2)

    def test_invalid(self):
        """Unknown names and malformed signs are config errors."""
        with pytest.raises(ConfigError):
            AlgebraSpec.named("octonion", 2)
        with pytest.raises(DimensionMismatchError):
            AlgebraSpec(2, (-1,), 1)
        with pytest.raises(ConfigError):
            AlgebraSpec(1, (2,), 1)
