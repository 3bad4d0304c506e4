# SPDX-License-Identifier: MIT
"""scheffers-analytic: hypercomplex analytic signals over the Scheffers algebra."""

from scheffers_analytic.__about__ import __version__
from scheffers_analytic.algebra import AlgebraSpec, Direction, ScheffersElement
from scheffers_analytic.grid import AnalyticGrid, GridSignal, HyperSpectrum, grid_make
from scheffers_analytic.transform import analytic_signal, partial_hilbert

__all__ = [
    "AlgebraSpec",
    "AnalyticGrid",
    "Direction",
    "GridSignal",
    "HyperSpectrum",
    "ScheffersElement",
    "__version__",
    "analytic_signal",
    "grid_make",
    "partial_hilbert",
]
