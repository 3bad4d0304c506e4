# SPDX-License-Identifier: MIT
"""Arithmetic in the elliptic Scheffers algebra S_d.

S_d is the commutative, associative real algebra of dimension 2^d generated by
units e_1..e_d with e_i^2 = -1. Basis blades are indexed by bitmasks: bit
(i - 1) set means generator e_i is present, and coefficient arrays are stored
in ascending bitmask order. The blade product is

    e_beta * e_gamma = (-1)^popcount(beta & gamma) * e_(beta ^ gamma)

Component Contract:
    Input: coefficient arrays, Direction bit vectors, AlgebraSpec presets
    Output: immutable ScheffersElement values
    Dependencies: numpy, scipy.linalg, errors
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.linalg

from scheffers_analytic.errors import (
    AxisOutOfRangeError,
    ConfigError,
    DimensionMismatchError,
    ZeroDivisorError,
)

DEFAULT_INVERT_RCOND = 1e-12


def popcount(mask: int) -> int:
    """Number of set bits of a non-negative bitmask."""
    return int(mask).bit_count()


def axis_bit(axis: int) -> int:
    """Bitmask of generator e_axis (axes are 1-based)."""
    return 1 << (axis - 1)


def check_axis(axis: int, dim: int) -> None:
    if not 1 <= axis <= dim:
        raise AxisOutOfRangeError(f"axis {axis} out of range 1..{dim}")


@dataclass(frozen=True)
class Direction:
    """Binary direction vector j in {0,1}^d.

    Entry i (0-based) corresponds to axis i + 1 and to bit i of the mask.

    Attributes:
        bits: Ordered 0/1 entries, length d.
    """

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise ConfigError("direction must have at least one entry")
        if any(b not in (0, 1) for b in bits):
            raise ConfigError(f"direction entries must be 0 or 1, got {self.bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> Direction:
        """Parse a bit string such as ``"101"``."""
        cleaned = text.strip().replace(",", "")
        if not cleaned or any(ch not in "01" for ch in cleaned):
            raise ConfigError(f"invalid direction string {text!r}")
        return cls(tuple(int(ch) for ch in cleaned))

    @classmethod
    def from_mask(cls, mask: int, dim: int) -> Direction:
        if mask < 0 or mask >= (1 << dim):
            raise DimensionMismatchError(f"mask {mask} does not fit dimension {dim}")
        return cls(tuple((mask >> i) & 1 for i in range(dim)))

    @classmethod
    def zeros(cls, dim: int) -> Direction:
        return cls((0,) * dim)

    @classmethod
    def all_ones(cls, dim: int) -> Direction:
        return cls((1,) * dim)

    @classmethod
    def every(cls, dim: int, include_zero: bool = True) -> Iterator[Direction]:
        """Iterate over all directions of a dimension in ascending mask order."""
        start = 0 if include_zero else 1
        for mask in range(start, 1 << dim):
            yield cls.from_mask(mask, dim)

    @property
    def dim(self) -> int:
        return len(self.bits)

    @property
    def mask(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    @property
    def weight(self) -> int:
        """|j|, the number of ones."""
        return sum(self.bits)

    def axes(self) -> tuple[int, ...]:
        """1-based axes with entry 1, ascending."""
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)

    def xor(self, other: Direction) -> Direction:
        if other.dim != self.dim:
            raise DimensionMismatchError(
                f"direction lengths differ: {self.dim} vs {other.dim}"
            )
        return Direction(tuple(a ^ b for a, b in zip(self.bits, other.bits, strict=True)))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@lru_cache(maxsize=16)
def blade_sign_table(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Sign and result-blade tables of the S_d blade product.

    Returns:
        (signs, xor) arrays of shape (2^d, 2^d); ``e_b * e_c`` equals
        ``signs[b, c] * e_xor[b, c]``.
    """
    n = 1 << dim
    idx = np.arange(n)
    both = idx[:, None] & idx[None, :]
    parity = np.vectorize(popcount, otypes=[np.int64])(both) & 1
    signs = np.where(parity == 1, -1.0, 1.0)
    xor = idx[:, None] ^ idx[None, :]
    signs.setflags(write=False)
    xor.setflags(write=False)
    return signs, xor


@dataclass(frozen=True, eq=False)
class ScheffersElement:
    """A point of S_d.

    Attributes:
        dim: Number of generators d.
        coeffs: 2^d real coefficients, entry at bitmask b belongs to blade e_b.
    """

    dim: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ConfigError(f"dimension must be positive, got {self.dim}")
        coeffs = np.array(self.coeffs, dtype=np.float64).reshape(-1)
        if coeffs.shape[0] != 1 << self.dim:
            raise DimensionMismatchError(
                f"expected {1 << self.dim} coefficients, got {coeffs.shape[0]}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, dim: int) -> ScheffersElement:
        return cls(dim, np.zeros(1 << dim))

    @classmethod
    def scalar(cls, dim: int, value: float) -> ScheffersElement:
        coeffs = np.zeros(1 << dim)
        coeffs[0] = value
        return cls(dim, coeffs)

    @classmethod
    def one(cls, dim: int) -> ScheffersElement:
        return cls.scalar(dim, 1.0)

    @classmethod
    def blade(cls, dim: int, mask: int, value: float = 1.0) -> ScheffersElement:
        if not 0 <= mask < 1 << dim:
            raise DimensionMismatchError(f"blade {mask} outside S_{dim}")
        coeffs = np.zeros(1 << dim)
        coeffs[mask] = value
        return cls(dim, coeffs)

    @classmethod
    def generator(cls, dim: int, axis: int) -> ScheffersElement:
        check_axis(axis, dim)
        return cls.blade(dim, axis_bit(axis))

    @classmethod
    def plane(cls, dim: int, axis: int, value: complex) -> ScheffersElement:
        """Embed x + iy as x + e_axis y in the plane S(axis)."""
        check_axis(axis, dim)
        coeffs = np.zeros(1 << dim)
        coeffs[0] = value.real
        coeffs[axis_bit(axis)] = value.imag
        return cls(dim, coeffs)

    def plane_value(self, axis: int) -> complex:
        """Read the S(axis) part (coefficients of e_0 and e_axis) as a complex."""
        check_axis(axis, self.dim)
        return complex(self.coeffs[0], self.coeffs[axis_bit(axis)])

    def __getitem__(self, mask: int) -> float:
        return float(self.coeffs[mask])

    def __add__(self, other: ScheffersElement) -> ScheffersElement:
        _check_same_dim(self, other)
        return ScheffersElement(self.dim, self.coeffs + other.coeffs)

    def __sub__(self, other: ScheffersElement) -> ScheffersElement:
        _check_same_dim(self, other)
        return ScheffersElement(self.dim, self.coeffs - other.coeffs)

    def __neg__(self) -> ScheffersElement:
        return ScheffersElement(self.dim, -self.coeffs)

    def __mul__(self, other: ScheffersElement | float) -> ScheffersElement:
        if isinstance(other, ScheffersElement):
            return sch_mul(self, other)
        return ScheffersElement(self.dim, self.coeffs * float(other))

    def __rmul__(self, other: float) -> ScheffersElement:
        return ScheffersElement(self.dim, self.coeffs * float(other))

    def __truediv__(self, other: float) -> ScheffersElement:
        return ScheffersElement(self.dim, self.coeffs / float(other))

    def allclose(
        self, other: ScheffersElement, atol: float = 1e-12, rtol: float = 0.0
    ) -> bool:
        _check_same_dim(self, other)
        return bool(np.allclose(self.coeffs, other.coeffs, atol=atol, rtol=rtol))

    def __repr__(self) -> str:
        terms = [
            f"{c:+.6g}*e{_blade_label(b)}" for b, c in enumerate(self.coeffs) if c != 0
        ]
        return f"ScheffersElement(dim={self.dim}, {' '.join(terms) or '0'})"


def _blade_label(mask: int) -> str:
    if mask == 0:
        return "0"
    return "".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1)


def _check_same_dim(a: ScheffersElement, b: ScheffersElement) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: S_{a.dim} vs S_{b.dim}")


def sch_mul(a: ScheffersElement, b: ScheffersElement) -> ScheffersElement:
    """Scheffers product, the bilinear extension of the blade rule."""
    _check_same_dim(a, b)
    signs, xor = blade_sign_table(a.dim)
    products = signs * np.outer(a.coeffs, b.coeffs)
    coeffs = np.bincount(xor.ravel(), weights=products.ravel(), minlength=1 << a.dim)
    return ScheffersElement(a.dim, coeffs)


def sch_mul_arrays(x: np.ndarray, y: np.ndarray, dim: int) -> np.ndarray:
    """Pointwise Scheffers product of two component-major arrays.

    Args:
        x: Array of shape (2^d, ...), component b on the first axis.
        y: Array of the same shape.
        dim: d.

    Returns:
        Array of shape (2^d, ...).
    """
    n = 1 << dim
    if x.shape[0] != n or y.shape != x.shape:
        raise DimensionMismatchError(
            f"component arrays must both have leading size {n} and equal shapes"
        )
    signs, xor = blade_sign_table(dim)
    out = np.zeros(np.broadcast_shapes(x.shape, y.shape), dtype=np.float64)
    for b in range(n):
        for c in range(n):
            out[xor[b, c]] += signs[b, c] * x[b] * y[c]
    return out


def sch_norm(a: ScheffersElement) -> float:
    """Euclidean norm of the coefficient array."""
    return float(np.linalg.norm(a.coeffs))


def multiplication_matrix(a: ScheffersElement) -> np.ndarray:
    """Matrix M with M @ b.coeffs == (a * b).coeffs."""
    signs, xor = blade_sign_table(a.dim)
    n = 1 << a.dim
    matrix = np.zeros((n, n))
    cols = np.broadcast_to(np.arange(n)[None, :], (n, n))
    # each column of xor is a permutation, so no index collides
    matrix[xor, cols] = signs * a.coeffs[:, None]
    return matrix


def _single_plane_axis(a: ScheffersElement) -> int | None:
    """Axis i if a lies in S(i) (or is real, reported as axis 1)."""
    support = np.flatnonzero(a.coeffs)
    others = [int(b) for b in support if b != 0]
    if not others:
        return 1
    if len(others) == 1 and popcount(others[0]) == 1:
        return others[0].bit_length()
    return None


def sch_inverse(
    a: ScheffersElement, rcond: float = DEFAULT_INVERT_RCOND
) -> ScheffersElement:
    """Multiplicative inverse.

    Elements of a single plane S(i) use the field formula; everything else is
    solved through the multiplication matrix.

    Raises:
        ZeroDivisorError: a is zero or a zero divisor.
    """
    if not np.any(a.coeffs):
        raise ZeroDivisorError("zero element has no inverse")
    axis = _single_plane_axis(a)
    if axis is not None:
        z = a.plane_value(axis)
        inv = 1.0 / z
        return ScheffersElement.plane(a.dim, axis, inv)

    matrix = multiplication_matrix(a)
    singular = scipy.linalg.svdvals(matrix)
    if singular[-1] <= rcond * singular[0]:
        raise ZeroDivisorError(
            "element is a zero divisor",
            detail=f"condition ratio {singular[-1] / singular[0]:.3e}",
        )
    unit = np.zeros(1 << a.dim)
    unit[0] = 1.0
    return ScheffersElement(a.dim, scipy.linalg.solve(matrix, unit))


def conj_axis(a: ScheffersElement, axis: int) -> ScheffersElement:
    """Negate the coefficients of every blade containing e_axis."""
    check_axis(axis, a.dim)
    bit = axis_bit(axis)
    has_bit = (np.arange(1 << a.dim) & bit) != 0
    return ScheffersElement(a.dim, np.where(has_bit, -a.coeffs, a.coeffs))


def unit_exp(axis: int, theta: float, dim: int | None = None) -> ScheffersElement:
    """e^(e_axis theta) = cos(theta) + e_axis sin(theta)."""
    dim = axis if dim is None else dim
    check_axis(axis, dim)
    coeffs = np.zeros(1 << dim)
    coeffs[0] = math.cos(theta)
    coeffs[axis_bit(axis)] = math.sin(theta)
    return ScheffersElement(dim, coeffs)


def shift_sign(i: Direction, j: Direction) -> int:
    """Sign (-1)^|(i xor j) minus i| of bracket <alpha^i, alpha_(i xor j)>."""
    if i.dim != j.dim:
        raise DimensionMismatchError(f"direction lengths differ: {i.dim} vs {j.dim}")
    return mask_shift_sign(i.mask, j.mask)


def mask_shift_sign(i_mask: int, j_mask: int) -> int:
    return -1 if popcount((i_mask ^ j_mask) & ~i_mask) & 1 else 1


@dataclass(frozen=True)
class AlgebraSpec:
    """Sign-parameterized basis system used by the ordering search.

    Attributes:
        dim: Number of generators.
        square_sign: Sign of e_i^2 per generator (-1, 0 or +1).
        swap_sign: Sign from exchanging adjacent distinct generators.
        name: Label used in reports.
    """

    dim: int
    square_sign: tuple[int, ...]
    swap_sign: int
    name: str = "custom"

    def __post_init__(self) -> None:
        squares = tuple(int(s) for s in self.square_sign)
        if len(squares) != self.dim:
            raise DimensionMismatchError(
                f"square_sign has {len(squares)} entries for dim {self.dim}"
            )
        if any(s not in (-1, 0, 1) for s in squares):
            raise ConfigError(f"square signs must be -1, 0 or +1: {squares}")
        if self.swap_sign not in (-1, 1):
            raise ConfigError(f"swap_sign must be -1 or +1: {self.swap_sign}")
        object.__setattr__(self, "square_sign", squares)

    @classmethod
    def scheffers(cls, dim: int) -> AlgebraSpec:
        return cls(dim, (-1,) * dim, 1, "scheffers")

    @classmethod
    def clifford(cls, dim: int) -> AlgebraSpec:
        return cls(dim, (-1,) * dim, -1, "clifford")

    @classmethod
    def hyperbolic(cls, dim: int) -> AlgebraSpec:
        return cls(dim, (1,) * dim, 1, "hyperbolic")

    @classmethod
    def named(cls, name: str, dim: int) -> AlgebraSpec:
        presets = {
            "scheffers": cls.scheffers,
            "clifford": cls.clifford,
            "hyperbolic": cls.hyperbolic,
        }
        if name not in presets:
            raise ConfigError(
                f"Invalid algebra '{name}'. Must be one of: {tuple(presets)}"
            )
        return presets[name](dim)

    @property
    def is_commutative(self) -> bool:
        return self.swap_sign == 1
