"""Parabolic knot representations: quandle colourings, complex volumes and
twisted Alexander polynomials, with connected sums of coloured diagrams."""

from .alexander import (alexander_matrix, normalized_alexander, phi, twisted_alexander)
from .coloring import (ArcColoring, ShadowColoring, connected_sum_coloring, factor_coloring,
                       find_generic_shadow, region_coloring, verify_arc_coloring)
from .diagram import OrientedDiagram, connected_sum, parse_pd, wirtinger
from .exact import QOmega
from .laurent import LaurentPoly, det_laurent, laurent_equal_up_to_unit
from .parabolic import ParabolicVector, conjugators, quandle_mul, to_matrix
from .volume import complex_volume, dilog, potential, solution_from_shadow

__version__ = "0.1.0"

__all__ = [
    "ArcColoring", "LaurentPoly", "OrientedDiagram", "ParabolicVector", "QOmega",
    "ShadowColoring", "alexander_matrix", "complex_volume", "conjugators", "connected_sum",
    "connected_sum_coloring", "det_laurent", "dilog", "factor_coloring",
    "find_generic_shadow", "laurent_equal_up_to_unit", "normalized_alexander", "parse_pd",
    "phi", "potential", "quandle_mul", "region_coloring", "solution_from_shadow",
    "to_matrix", "twisted_alexander", "verify_arc_coloring", "wirtinger",
]
