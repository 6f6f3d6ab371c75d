"""
Combinatorial weights package.

Fragment and degenerate recursions, their assembly into W(X), counting
without enumeration, and the Fibonacci bounds.
"""

from .states import ALL_STATES, PairState
from .recursion import LayeredRecursion, Word
from .fragment import (
    fragment_count,
    fragment_counts,
    fragment_recursion,
    fragment_tables,
    fragment_weights,
    iter_fragment_weights,
    terminal_states,
)
from .degenerate import (
    CLOSING_PAIRS,
    DegenerateTables,
    degenerate_count,
    degenerate_tables,
    degenerate_weights,
    iter_degenerate_weights,
)
from .assembly import count_weights, gene_weights, is_weight, iter_gene_weights
from .fibonacci import extremal_fragment, fib_bound, fibonacci, near_extremal_fragment

__all__ = [
    "ALL_STATES",
    "PairState",
    "LayeredRecursion",
    "Word",
    "fragment_count",
    "fragment_counts",
    "fragment_recursion",
    "fragment_tables",
    "fragment_weights",
    "iter_fragment_weights",
    "terminal_states",
    "CLOSING_PAIRS",
    "DegenerateTables",
    "degenerate_count",
    "degenerate_tables",
    "degenerate_weights",
    "iter_degenerate_weights",
    "count_weights",
    "gene_weights",
    "is_weight",
    "iter_gene_weights",
    "extremal_fragment",
    "fib_bound",
    "fibonacci",
    "near_extremal_fragment",
]
