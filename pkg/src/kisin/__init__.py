"""
Kisin package.

Structural presentations of Kisin varieties of genes and fragments, fragment
reduction, the canonical decomposition of a gene, crosses and the
single-equation moves behind the monotony of weight counts.
"""

from .presentation import (
    ColumnValue,
    Equation,
    KisinPresentation,
    flip,
    presentation_of_fragment,
    presentation_of_gene,
    render_presentation,
)
from .reduction import (
    ReducedCase,
    ReductionResult,
    is_reduced,
    orient,
    reduce,
    reduced_case,
    reducible_prefix_length,
)
from .crosses import crosses, delete_cross, embed, has_adjacent_cross
from .decomposition import Component, component_count, constant_columns, decompose, reduction_key
from .moves import single_equation_moves

__all__ = [
    "ColumnValue",
    "Equation",
    "KisinPresentation",
    "flip",
    "presentation_of_fragment",
    "presentation_of_gene",
    "render_presentation",
    "ReducedCase",
    "ReductionResult",
    "is_reduced",
    "orient",
    "reduce",
    "reduced_case",
    "reducible_prefix_length",
    "crosses",
    "delete_cross",
    "embed",
    "has_adjacent_cross",
    "Component",
    "component_count",
    "constant_columns",
    "decompose",
    "reduction_key",
    "single_equation_moves",
]
