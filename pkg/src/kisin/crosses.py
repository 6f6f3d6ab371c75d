"""
Crosses

A fragment exhibits a cross at i < l-1 when both letters of column i equal
the dominant letter of column i+1. Every weight vanishes at a cross, and
deleting the column embeds the weights of the shorter fragment back by
inserting a 0.
"""

from typing import List, Sequence

from src.core.exceptions import NotACross
from src.genes import Fragment, fragment_dominance, validate_fragment
from src.weights import Word


def crosses(F: Fragment) -> List[int]:
    dom = fragment_dominance(F)
    return [
        i for i in range(len(F) - 1)
        if F.up(i) == F.down(i) == dom[i + 1]
    ]


def delete_cross(F: Fragment, i: int) -> Fragment:
    """
    Raises:
        NotACross: if F has no cross at i
    """
    if i not in crosses(F):
        raise NotACross(f"no cross at column {i} of {F}", {"column": i, "fragment": F.text()})
    return validate_fragment(F.columns[:i] + F.columns[i + 1:], F.anchor)


def embed(w: Sequence[int], i: int) -> Word:
    """Weight of F^(i) to weight of F: a 0 goes in at position i."""
    return tuple(w[:i]) + (0,) + tuple(w[i:])


def has_adjacent_cross(F: Fragment, i: int) -> bool:
    found = crosses(F)
    return (i - 1) in found or (i + 1) in found
