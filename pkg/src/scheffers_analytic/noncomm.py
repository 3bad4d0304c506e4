# SPDX-License-Identifier: MIT
"""Sign bookkeeping for generalized, possibly anti-commuting, transforms.

A generalized transform multiplies the integrand by one exponential
exp(-/+ e_k w_k x_k) per axis, placed left or right of the integrand in some
order. Expanding every exponential into cos +/- e_k sin and normalizing the
resulting generator words shows which sign each bracket
<alpha^k, alpha_m>_+ picks up in blade e_(k xor m). A placement yields the
phase-shifted components exactly when, for every blade j, all of its
brackets carry the sign rule of the commutative case up to one common
factor.

Placements are written as token tuples: 0 stands for the integrand, k >= 1
for the exponential of axis k. ``(1, 0, 2)`` is exp(e_1 ...) f exp(e_2 ...).

Component Contract:
    Input: AlgebraSpec, placements, GridSignal
    Output: OrderingReport, SignTable, AnalyticGrid
    Dependencies: numpy, scipy.fft, algebra, grid, transform, render
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np
import scipy.fft

from scheffers_analytic.algebra import AlgebraSpec, mask_shift_sign, popcount
from scheffers_analytic.errors import (
    AxisOutOfRangeError,
    ConfigError,
    UnsupportedDimensionError,
)
from scheffers_analytic.grid import AnalyticGrid, GridSignal, angular_frequencies
from scheffers_analytic.render import render_ordering_text
from scheffers_analytic.transform import FrequencyMask

FUNCTION_TOKEN = 0
MIN_SEARCH_DIM = 2
MAX_SEARCH_DIM = 4
MAX_PERMUTATION_DIM = 3
PLACEMENT_MODES = ("sides", "permutations")


def normalize_basis_product(
    spec: AlgebraSpec, factors: Sequence[int]
) -> tuple[int, int]:
    """Reduce a word of generators to (sign, blade bitmask).

    Adjacent distinct generators are bubble-sorted into ascending order, each
    exchange contributing spec.swap_sign; equal neighbours then cancel with
    spec.square_sign of their generator. A parabolic generator squared gives
    sign 0.
    """
    word = list(factors)
    for axis in word:
        if not 1 <= axis <= spec.dim:
            raise AxisOutOfRangeError(f"generator e_{axis} outside 1..{spec.dim}")
    sign = 1
    for end in range(len(word) - 1, 0, -1):
        for k in range(end):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                sign *= spec.swap_sign

    blade = 0
    k = 0
    while k < len(word):
        if k + 1 < len(word) and word[k] == word[k + 1]:
            sign *= spec.square_sign[word[k] - 1]
            k += 2
        else:
            blade |= 1 << (word[k] - 1)
            k += 1
    return sign, blade


def _generators(mask: int) -> list[int]:
    return [bit + 1 for bit in range(mask.bit_length()) if mask >> bit & 1]


def _format_placement(tokens: Sequence[int]) -> str:
    return "".join("f" if t == FUNCTION_TOKEN else str(t) for t in tokens)


@dataclass(frozen=True)
class OrderingCandidate:
    """Exponential placement for the forward and inverse transform.

    Attributes:
        forward: Token order of the forward transform.
        inverse: Token order of the inverse transform.
    """

    forward: tuple[int, ...]
    inverse: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("forward", "inverse"):
            tokens = tuple(int(t) for t in getattr(self, name))
            if sorted(tokens) != list(range(len(tokens))):
                raise ConfigError(
                    f"{name} placement {tokens} must hold f and every axis exactly once"
                )
            object.__setattr__(self, name, tokens)
        if len(self.forward) != len(self.inverse):
            raise ConfigError("forward and inverse placements disagree on dimension")

    @classmethod
    def from_sides(cls, dim: int, forward_right: int, inverse_right: int) -> OrderingCandidate:
        """Placement with the axes of each bitmask moved right of f."""
        return cls(_sides(dim, forward_right), _sides(dim, inverse_right))

    @property
    def dim(self) -> int:
        return len(self.forward) - 1

    @property
    def encoding(self) -> str:
        return f"fwd={_format_placement(self.forward)} inv={_format_placement(self.inverse)}"

    def forward_sign(self, spec: AlgebraSpec, k: int) -> int:
        """Sign of alpha^k e_k in the forward spectrum."""
        word = [t for t in self.forward if t != FUNCTION_TOKEN and k >> (t - 1) & 1]
        sign, _ = normalize_basis_product(spec, word)
        return (-1) ** popcount(k) * sign

    def inverse_sign(self, spec: AlgebraSpec, k: int, m: int) -> tuple[int, int]:
        """Sign and blade of the bracket of spectrum blade k with sin-choice m."""
        word: list[int] = []
        for t in self.inverse:
            if t == FUNCTION_TOKEN:
                word.extend(_generators(k))
            elif m >> (t - 1) & 1:
                word.append(t)
        return normalize_basis_product(spec, word)


def _sides(dim: int, right: int) -> tuple[int, ...]:
    left = [a for a in range(1, dim + 1) if not right >> (a - 1) & 1]
    moved = [a for a in range(1, dim + 1) if right >> (a - 1) & 1]
    return (*left, FUNCTION_TOKEN, *moved)


@dataclass(frozen=True)
class SignEntry:
    """One bracket <alpha^upper, alpha_lower>_+ of a sign table."""

    upper: int
    lower: int
    actual: int
    required: int

    @property
    def blade(self) -> int:
        return self.upper ^ self.lower

    @property
    def ratio(self) -> int:
        return self.actual * self.required


@dataclass(frozen=True)
class SignTable:
    """Bracket signs of every blade of degree <= 2 under one candidate.

    Attributes:
        dim: Number of generators.
        entries: Entries ordered by blade, then by lower index.
    """

    dim: int
    entries: tuple[SignEntry, ...]

    def for_blade(self, blade: int) -> tuple[SignEntry, ...]:
        return tuple(e for e in self.entries if e.blade == blade)

    def blades(self) -> list[int]:
        return list(dict.fromkeys(e.blade for e in self.entries))


def required_sign(upper: int, lower: int) -> int:
    """Sign of <alpha^upper, alpha_lower>_+ in the commutative component rule."""
    return mask_shift_sign(lower, upper ^ lower)


def sign_table(candidate: OrderingCandidate, spec: AlgebraSpec, max_degree: int = 2) -> SignTable:
    dim = spec.dim
    entries = []
    blades = sorted(
        (b for b in range(1 << dim) if popcount(b) <= max_degree),
        key=lambda b: (popcount(b), b),
    )
    for blade in blades:
        for lower in range(1 << dim):
            upper = lower ^ blade
            sign, _ = candidate.inverse_sign(spec, upper, lower)
            actual = candidate.forward_sign(spec, upper) * sign
            entries.append(SignEntry(upper, lower, actual, required_sign(upper, lower)))
    return SignTable(dim, tuple(entries))


def sign_pattern(
    candidate: OrderingCandidate, spec: AlgebraSpec, blade: int
) -> tuple[SignEntry, ...]:
    """Entries of a single blade, ordered by lower index."""
    return sign_table(candidate, spec).for_blade(blade)


@dataclass(frozen=True)
class Mismatch:
    """Two brackets of one blade that disagree with the component rule."""

    blade: int
    first: SignEntry
    second: SignEntry

    def describe(self) -> str:
        return (
            f"e{_blade_name(self.blade)}: "
            f"<{_blade_name(self.first.upper)},{_blade_name(self.first.lower)}> "
            f"ratio {self.first.ratio:+d} vs "
            f"<{_blade_name(self.second.upper)},{_blade_name(self.second.lower)}> "
            f"ratio {self.second.ratio:+d}"
        )


def _blade_name(mask: int) -> str:
    return "".join(str(a) for a in _generators(mask)) or "0"


def first_mismatch(table: SignTable) -> Mismatch | None:
    """First blade whose brackets do not share one ratio; zero entries never match."""
    for blade in table.blades():
        entries = table.for_blade(blade)
        reference = entries[0]
        for entry in entries:
            if entry.actual == 0:
                return Mismatch(blade, entry, entry)
            if entry.ratio != reference.ratio:
                return Mismatch(blade, reference, entry)
    return None


@dataclass(frozen=True)
class CandidateVerdict:
    candidate: OrderingCandidate
    mismatch: Mismatch | None

    @property
    def consistent(self) -> bool:
        return self.mismatch is None

    def to_dict(self) -> dict:
        return {
            "encoding": self.candidate.encoding,
            "consistent": self.consistent,
            "mismatch": self.mismatch.describe() if self.mismatch else None,
        }


@dataclass(frozen=True)
class OrderingReport:
    """Outcome of an exhaustive placement search.

    Attributes:
        dim: Number of generators.
        spec: Algebra searched.
        mode: "sides" or "permutations".
        verdicts: Every candidate, sorted by encoding.
    """

    dim: int
    spec: AlgebraSpec
    mode: str
    verdicts: tuple[CandidateVerdict, ...] = field(repr=False)

    @property
    def consistent(self) -> tuple[OrderingCandidate, ...]:
        return tuple(v.candidate for v in self.verdicts if v.consistent)

    @property
    def exists(self) -> bool:
        return bool(self.consistent)

    @property
    def certificate(self) -> tuple[CandidateVerdict, ...]:
        """One mismatch per candidate when no candidate is consistent."""
        if self.exists:
            return ()
        return self.verdicts

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "algebra": self.spec.name,
            "mode": self.mode,
            "candidates": len(self.verdicts),
            "consistent": len(self.consistent),
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def enumerate_candidates(dim: int, mode: str = "sides") -> Iterator[OrderingCandidate]:
    """All placements of a search mode.

    "sides" moves any subset of axes right of f while keeping ascending order
    on each side (4^d candidates). "permutations" allows every relative order;
    the integrand is real in the forward transform, so only the order of the
    exponentials matters there (d! * (d+1)! candidates).
    """
    if mode == "sides":
        for forward_right in range(1 << dim):
            for inverse_right in range(1 << dim):
                yield OrderingCandidate.from_sides(dim, forward_right, inverse_right)
    elif mode == "permutations":
        if dim > MAX_PERMUTATION_DIM:
            raise UnsupportedDimensionError(
                f"permutation mode supports d <= {MAX_PERMUTATION_DIM}, got {dim}"
            )
        axes = range(1, dim + 1)
        for forward in itertools.permutations(axes):
            for inverse in itertools.permutations(range(dim + 1)):
                yield OrderingCandidate((FUNCTION_TOKEN, *forward), inverse)
    else:
        raise ConfigError(f"Invalid placement mode '{mode}'. Must be one of: {PLACEMENT_MODES}")


def ordering_search(dim: int, spec: AlgebraSpec, mode: str = "sides") -> OrderingReport:
    """Check every placement of a mode against the component sign rule.

    Raises:
        UnsupportedDimensionError: dim outside 2..4.
    """
    if not MIN_SEARCH_DIM <= dim <= MAX_SEARCH_DIM:
        raise UnsupportedDimensionError(
            f"ordering search supports {MIN_SEARCH_DIM} <= d <= {MAX_SEARCH_DIM}, got {dim}"
        )
    if spec.dim != dim:
        raise ConfigError(f"algebra has {spec.dim} generators, search asked for {dim}")
    verdicts = [
        CandidateVerdict(candidate, first_mismatch(sign_table(candidate, spec)))
        for candidate in enumerate_candidates(dim, mode)
    ]
    verdicts.sort(key=lambda v: v.candidate.encoding)
    return OrderingReport(dim, spec, mode, tuple(verdicts))


def hand_derived_candidates(dim: int) -> list[OrderingCandidate]:
    """Forward all left; inverse with the first r factors flipped right, r = 0..d."""
    forward = _sides(dim, 0)
    return [
        OrderingCandidate(forward, _sides(dim, (1 << r) - 1)) for r in range(dim + 1)
    ]


def symmetric_quaternion_candidate() -> OrderingCandidate:
    """e_1 exponential left, e_2 exponential right, in both directions."""
    return OrderingCandidate((1, 0, 2), (1, 0, 2))


def _trig_projection(
    data: np.ndarray,
    axis: int,
    sine: bool,
    origin: float,
    spacing: float,
    inverse: bool,
    workers: int | None,
) -> np.ndarray:
    """Real cos or sin sum of one axis, scaled like the hypercomplex transform."""
    n = data.shape[axis]
    omega = angular_frequencies(n, spacing)
    shape = [1] * data.ndim
    shape[axis] = n
    omega = omega.reshape(shape)
    if inverse:
        values = scipy.fft.ifft(data * np.exp(1j * omega * origin), axis=axis, workers=workers)
        values = values / spacing
        return values.imag if sine else values.real
    values = scipy.fft.fft(data, axis=axis, workers=workers) * (spacing * np.exp(-1j * omega * origin))
    return -values.imag if sine else values.real


def ordered_transform(
    components: np.ndarray,
    origin: Sequence[float],
    spacing: Sequence[float],
    spec: AlgebraSpec,
    placement: Sequence[int],
    inverse: bool = False,
    workers: int | None = None,
) -> np.ndarray:
    """Numerically apply one placement to a component-major (2^d, ...) array.

    Each exponential is expanded into cos +/- e_k sin; every choice of sine
    axes s turns into a separable real projection of each component,
    multiplied into the blade and sign of its normalized generator word.
    """
    dim = spec.dim
    if components.shape[0] != 1 << dim or components.ndim != dim + 1:
        raise ConfigError(f"components must have shape (2^{dim}, N_1..N_{dim})")
    out = np.zeros(components.shape)
    for blade in range(1 << dim):
        source = components[blade]
        if not np.any(source):
            continue
        for s in range(1 << dim):
            projected = source
            for axis in range(dim):
                projected = _trig_projection(
                    projected,
                    axis,
                    bool(s >> axis & 1),
                    origin[axis],
                    spacing[axis],
                    inverse,
                    workers,
                )
            word: list[int] = []
            for token in placement:
                if token == FUNCTION_TOKEN:
                    word.extend(_generators(blade))
                elif s >> (token - 1) & 1:
                    word.append(token)
            sign, result = normalize_basis_product(spec, word)
            if not inverse:
                sign *= (-1) ** popcount(s)
            out[result] += sign * projected
    return out


def ordered_analytic_signal(
    g: GridSignal,
    candidate: OrderingCandidate,
    spec: AlgebraSpec,
    workers: int | None = None,
) -> AnalyticGrid:
    """Forward placement, positive-quadrant restriction, inverse placement."""
    if spec.dim != g.dim or candidate.dim != g.dim:
        raise ConfigError(
            f"grid has dimension {g.dim}, algebra {spec.dim}, candidate {candidate.dim}"
        )
    components = np.zeros((1 << g.dim, *g.shape))
    components[0] = g.data
    spectrum = ordered_transform(
        components, g.origin, g.spacing, spec, candidate.forward, workers=workers
    )
    spectrum = spectrum * FrequencyMask.for_shape(g.shape).full()[None, ...]
    signal = ordered_transform(
        spectrum, g.origin, g.spacing, spec, candidate.inverse, inverse=True, workers=workers
    )
    return AnalyticGrid(g.origin, g.spacing, signal)


def quaternion_analytic_2d(g: GridSignal, workers: int | None = None) -> AnalyticGrid:
    """Two-sided quaternion analytic signal mapped to blades (1, i, j, k) -> (0, 1, 2, 3).

    Raises:
        UnsupportedDimensionError: g is not two-dimensional.
    """
    if g.dim != 2:
        raise UnsupportedDimensionError(f"quaternion transform needs d=2, got d={g.dim}")
    return ordered_analytic_signal(
        g, symmetric_quaternion_candidate(), AlgebraSpec.clifford(2), workers
    )


def render_ordering_report(report: OrderingReport) -> str:
    """Plain-text report, one line per candidate."""
    return render_ordering_text(report)
