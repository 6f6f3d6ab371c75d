"""
Combinatorial weights of a gene

A viable nondegenerate gene takes the product of its fragment weights, each
placed at the columns its fragment occupies; degenerate genes go through the
cyclic recursion; a gene with a column (O, O) has no weight.
"""

import itertools
import logging
from typing import Iterator, List, Sequence

from src.genes import Fragment, Gene, fragments, is_degenerate, is_viable

from .degenerate import (
    CLOSING_PAIRS,
    degenerate_count,
    degenerate_recursions,
    degenerate_weights,
    iter_degenerate_weights,
)
from .fragment import (
    fragment_count,
    fragment_recursion,
    fragment_weights,
    iter_fragment_weights,
    terminal_states,
)
from .recursion import Word


logger = logging.getLogger(__name__)


def _place(f: int, parts: Sequence[Fragment], words: Sequence[Word]) -> Word:
    bits = [0] * f
    for F, w in zip(parts, words):
        for j, b in enumerate(w):
            bits[(F.anchor + j) % f] = b
    return tuple(bits)


def gene_weights(g: Gene) -> List[Word]:
    """W(X) as a sorted list of f-bit tuples."""
    if not is_viable(g):
        return []
    if is_degenerate(g):
        return degenerate_weights(g)
    parts = fragments(g)
    per_fragment = [fragment_weights(F) for F in parts]
    weights = sorted(_place(g.f, parts, combo) for combo in itertools.product(*per_fragment))
    logger.debug("Gene with %d fragments has %d weights", len(parts), len(weights))
    return weights


def iter_gene_weights(g: Gene) -> Iterator[Word]:
    """
    Stream W(X) without materializing it. Fragment streams are restarted for
    every prefix, so each weight costs O(f).
    """
    if not is_viable(g):
        return
    if is_degenerate(g):
        yield from iter_degenerate_weights(g)
        return
    parts = fragments(g)
    f = g.f
    bits = [0] * f

    def walk(k: int) -> Iterator[Word]:
        if k == len(parts):
            yield tuple(bits)
            return
        F = parts[k]
        for w in iter_fragment_weights(F):
            for j, b in enumerate(w):
                bits[(F.anchor + j) % f] = b
            yield from walk(k + 1)

    yield from walk(0)


def count_weights(g: Gene) -> int:
    """Card W(X) without enumeration."""
    if not is_viable(g):
        return 0
    if is_degenerate(g):
        return degenerate_count(g)
    total = 1
    for F in fragments(g):
        total *= fragment_count(F)
    return total


def is_weight(g: Gene, w: Sequence[int]) -> bool:
    """Membership in W(X) without enumeration."""
    w = tuple(int(b) for b in w)
    if len(w) != g.f or not is_viable(g):
        return False
    if is_degenerate(g):
        recs = degenerate_recursions(g)
        return any(recs[start].contains(w, (end,)) for start, end in CLOSING_PAIRS)
    f = g.f
    for F in fragments(g):
        piece = tuple(w[(F.anchor + j) % f] for j in range(len(F)))
        if not fragment_recursion(F).contains(piece, terminal_states(F)):
            return False
    return True
