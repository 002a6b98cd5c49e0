"""Exact polynomials and surgeries for graphs embedded in surfaces."""

from .arrow import (ArrowPresentation, RibbonInvariants, boundary_components, format_arrow, invariants,
                    is_checkerboard_colourable, is_orientable, parse, underlying_graph)
from .polynomial import MultiPoly

__all__ = [
    "ArrowPresentation", "MultiPoly", "RibbonInvariants", "boundary_components", "format_arrow", "invariants",
    "is_checkerboard_colourable", "is_orientable", "parse", "underlying_graph",
]

__version__ = "0.1.0"
