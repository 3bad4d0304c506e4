# SPDX-License-Identifier: MIT
"""Shared pytest fixtures for scheffers-analytic tests."""

import numpy as np
import pytest

from scheffers_analytic.grid import GridSignal, grid_make


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so every test sees the same draws."""
    return np.random.default_rng(12345)


@pytest.fixture
def periodic_2d() -> GridSignal:
    """cos x cos 2y on a commensurate 32x32 lattice over [0, 2 pi)^2."""
    n = 32
    return grid_make(
        2, (n, n), (0.0, 0.0), (2 * np.pi / n,) * 2, lambda x, y: np.cos(x) * np.cos(2 * y)
    )


@pytest.fixture
def random_grids(rng) -> list[GridSignal]:
    """Random real grids in d = 1, 2, 3."""
    return [
        GridSignal((0.0,) * len(shape), (0.5,) * len(shape), rng.standard_normal(shape))
        for shape in ((32,), (16, 12), (8, 8, 6))
    ]
