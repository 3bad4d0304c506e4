# SPDX-License-Identifier: MIT
import numpy as np
import pytest

from scheffers_analytic.algebra import AlgebraSpec
from scheffers_analytic.errors import (
    AxisOutOfRangeError,
    ConfigError,
    UnsupportedDimensionError,
)
from scheffers_analytic.grid import GridSignal
from scheffers_analytic.noncomm import (
    OrderingCandidate,
    enumerate_candidates,
    first_mismatch,
    hand_derived_candidates,
    normalize_basis_product,
    ordered_analytic_signal,
    ordering_search,
    quaternion_analytic_2d,
    render_ordering_report,
    sign_pattern,
    sign_table,
    symmetric_quaternion_candidate,
)
from scheffers_analytic.transform import analytic_signal
from scheffers_analytic.verification import random_bandlimited


class TestBasisProduct:
    def test_clifford_swap(self):
        """e2 e1 = -e1 e2 when generators anti-commute."""
        assert normalize_basis_product(AlgebraSpec.clifford(2), [2, 1]) == (-1, 0b11)

    def test_commutative_swap(self):
        """Scheffers generators commute."""
        assert normalize_basis_product(AlgebraSpec.scheffers(2), [2, 1]) == (1, 0b11)

    def test_squares(self):
        """e_i^2 contributes the square sign of e_i."""
        assert normalize_basis_product(AlgebraSpec.clifford(2), [1, 1]) == (-1, 0)
        assert normalize_basis_product(AlgebraSpec.hyperbolic(2), [2, 2]) == (1, 0)
        parabolic = AlgebraSpec(2, (-1, 0), 1)
        assert normalize_basis_product(parabolic, [2, 2])[0] == 0

    def test_empty_word(self):
        """The empty word is the scalar one."""
        assert normalize_basis_product(AlgebraSpec.scheffers(3), []) == (1, 0)

    def test_axis_range(self):
        """Generators outside 1..d are rejected."""
        with pytest.raises(AxisOutOfRangeError):
            normalize_basis_product(AlgebraSpec.scheffers(2), [3])


class TestCandidates:
    def test_encoding(self):
        """Placements print with f for the integrand."""
        assert symmetric_quaternion_candidate().encoding == "fwd=1f2 inv=1f2"

    def test_from_sides(self):
        """Axes in the bitmask move right of f."""
        candidate = OrderingCandidate.from_sides(3, 0b010, 0b101)
        assert candidate.forward == (1, 3, 0, 2)
        assert candidate.inverse == (2, 0, 1, 3)

    def test_invalid_placement(self):
        """Every token must appear exactly once."""
        with pytest.raises(ConfigError):
            OrderingCandidate((0, 0, 1), (0, 1, 2))
        with pytest.raises(ConfigError):
            OrderingCandidate((0, 1), (0, 1, 2))

    def test_candidate_counts(self):
        """sides has 4^d placements, permutations d! (d+1)!."""
        assert len(list(enumerate_candidates(2, "sides"))) == 16
        assert len(list(enumerate_candidates(3, "sides"))) == 64
        assert len(list(enumerate_candidates(2, "permutations"))) == 12

    def test_hand_derived(self):
        """d + 1 inverse placements share one forward placement."""
        candidates = hand_derived_candidates(3)
        assert len(candidates) == 4
        assert {c.forward for c in candidates} == {(1, 2, 3, 0)}
        assert candidates[-1].inverse == (0, 1, 2, 3)

    @pytest.mark.parametrize(
        ("index", "inverse", "agreeing"),
        [
            (0, (1, 2, 3, 0), set()),
            (1, (2, 3, 0, 1), {0b011, 0b101}),
            (2, (3, 0, 1, 2), {0b101, 0b110}),
            (3, (0, 1, 2, 3), set()),
        ],
    )
    def test_hand_derived_cross_signs(self, index, inverse, agreeing):
        """Blades whose two cross brackets share a sign under Clifford(3)."""
        spec = AlgebraSpec.clifford(3)
        candidate = hand_derived_candidates(3)[index]
        assert candidate.inverse == inverse
        found = set()
        for blade in (0b011, 0b101, 0b110):
            low = blade & -blade
            high = blade ^ low
            signs = {
                (e.upper, e.lower): e.actual for e in sign_pattern(candidate, spec, blade)
            }
            if signs[(low, high)] == signs[(high, low)]:
                found.add(blade)
        assert found == agreeing

    def test_search_rejects_hand_derived(self):
        """The search covers every hand-derived placement and flags each one."""
        report = ordering_search(3, AlgebraSpec.clifford(3))
        verdicts = {v.candidate: v for v in report.verdicts}
        for candidate in hand_derived_candidates(3):
            assert candidate in verdicts
            assert verdicts[candidate].mismatch is not None


class TestSignTable:
    def test_commutative_always_consistent(self):
        """Without anti-commutation every placement matches the component rule."""
        spec = AlgebraSpec.scheffers(3)
        for candidate in hand_derived_candidates(3):
            assert first_mismatch(sign_table(candidate, spec)) is None

    def test_blades_up_to_degree_two(self):
        """The table covers the scalar, the axes and the pairs."""
        table = sign_table(symmetric_quaternion_candidate(), AlgebraSpec.clifford(2))
        assert table.blades() == [0b00, 0b01, 0b10, 0b11]
        assert len(table.for_blade(0b11)) == 4

    def test_sign_pattern(self):
        """One entry per lower index, all sharing the requested blade."""
        entries = sign_pattern(symmetric_quaternion_candidate(), AlgebraSpec.clifford(2), 0b11)
        assert [e.lower for e in entries] == [0, 1, 2, 3]
        assert all(e.blade == 0b11 for e in entries)

    def test_parabolic_entries_never_match(self):
        """A zero sign is reported as a mismatch."""
        spec = AlgebraSpec(2, (0, 0), 1)
        mismatch = first_mismatch(sign_table(symmetric_quaternion_candidate(), spec))
        assert mismatch is not None
        assert mismatch.first.actual == 0


class TestOrderingSearch:
    def test_quaternion_symmetric_placement(self):
        """In d=2 the anti-commuting case admits e1 left, e2 right."""
        report = ordering_search(2, AlgebraSpec.clifford(2))
        assert symmetric_quaternion_candidate() in report.consistent
        assert report.certificate == ()

    def test_anticommuting_three_axes_impossible(self):
        """No sides placement works for three anti-commuting generators."""
        report = ordering_search(3, AlgebraSpec.clifford(3))
        assert not report.exists
        assert len(report.certificate) == 64
        assert all(v.mismatch is not None for v in report.certificate)

    def test_commutative_three_axes(self):
        """Every placement works when generators commute."""
        report = ordering_search(3, AlgebraSpec.scheffers(3))
        assert len(report.consistent) == 64

    def test_verdicts_sorted(self):
        """Verdicts are ordered by encoding."""
        report = ordering_search(2, AlgebraSpec.clifford(2))
        encodings = [v.candidate.encoding for v in report.verdicts]
        assert encodings == sorted(encodings)

    def test_to_dict(self):
        """The JSON form summarizes candidate counts."""
        data = ordering_search(3, AlgebraSpec.clifford(3)).to_dict()
        assert data["algebra"] == "clifford"
        assert data["candidates"] == 64
        assert data["consistent"] == 0
        assert all(v["mismatch"] for v in data["verdicts"])

    def test_dimension_limits(self):
        """The search runs for 2 <= d <= 4 and permutations for d <= 3."""
        with pytest.raises(UnsupportedDimensionError):
            ordering_search(1, AlgebraSpec.clifford(1))
        with pytest.raises(UnsupportedDimensionError):
            ordering_search(5, AlgebraSpec.clifford(5))
        with pytest.raises(UnsupportedDimensionError):
            ordering_search(4, AlgebraSpec.clifford(4), mode="permutations")

    def test_invalid_arguments(self):
        """Unknown modes and mismatched algebras are configuration errors."""
        with pytest.raises(ConfigError):
            ordering_search(2, AlgebraSpec.clifford(2), mode="shuffle")
        with pytest.raises(ConfigError):
            ordering_search(2, AlgebraSpec.clifford(3))

    def test_render(self):
        """One line per candidate plus a result line."""
        text = render_ordering_report(ordering_search(3, AlgebraSpec.clifford(3)))
        lines = text.splitlines()
        assert lines[0] == "ordering search d=3 algebra=clifford mode=sides"
        assert len(lines) == 66
        assert lines[-1] == "result: no consistent ordering among 64 candidates"


class TestOrderedTransform:
    def test_commutative_placement_matches_pipeline(self, rng):
        """With commuting generators any placement gives the analytic signal."""
        g = random_bandlimited(rng, (8, 8))
        expected = analytic_signal(g).components
        for candidate in hand_derived_candidates(2):
            actual = ordered_analytic_signal(g, candidate, AlgebraSpec.scheffers(2)).components
            np.testing.assert_allclose(actual, expected, atol=1e-9 * np.max(np.abs(expected)))

    def test_quaternion_matches_commutative(self, rng):
        """The two-sided quaternion signal has the same components."""
        g = random_bandlimited(rng, (16, 16))
        expected = analytic_signal(g).components
        actual = quaternion_analytic_2d(g).components
        np.testing.assert_allclose(actual, expected, atol=1e-9 * np.max(np.abs(expected)))

    def test_anticommuting_three_axes_differ(self, rng):
        """Inconsistent placements miss the commutative components numerically."""
        g = random_bandlimited(rng, (8, 8, 8))
        expected = analytic_signal(g).components
        scale = np.max(np.abs(expected))
        for candidate in hand_derived_candidates(3):
            actual = ordered_analytic_signal(g, candidate, AlgebraSpec.clifford(3)).components
            assert np.max(np.abs(actual - expected)) > 1e-3 * scale

    def test_quaternion_needs_two_axes(self):
        """Only d=2 grids have a quaternion transform."""
        with pytest.raises(UnsupportedDimensionError):
            quaternion_analytic_2d(GridSignal((0.0,), (1.0,), np.zeros(8)))

    def test_dimension_agreement(self, periodic_2d):
        """Grid, algebra and candidate share one dimension."""
        with pytest.raises(ConfigError):
            ordered_analytic_signal(
                periodic_2d, symmetric_quaternion_candidate(), AlgebraSpec.clifford(3)
            )
