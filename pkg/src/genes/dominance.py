"""
Dominant letters

In a column, A and AB each count one A, B and AB each count one B, O counts
nothing. The letter seen strictly more often dominates; on a tie the column
takes the dominant letter of the next column.
"""

from typing import List, Optional, Sequence, Tuple

from src.core.exceptions import CircularDominance, DegenerateGene, NotViable

from .fragments import Fragment
from .gene import Column, Gene, is_degenerate, is_viable
from .letters import Letter


DominanceVector = Tuple[Letter, ...]


def column_majority(col: Column) -> Optional[Letter]:
    """A or B by strict majority, None on a tie."""
    a = sum(x.a_count for x in col)
    b = sum(x.b_count for x in col)
    if a > b:
        return Letter.A
    if b > a:
        return Letter.B
    return None


def _resolve(majorities: Sequence[Optional[Letter]], cyclic: bool) -> List[Optional[Letter]]:
    n = len(majorities)
    out: List[Optional[Letter]] = list(majorities)
    # walk backwards so that a tie reads an already resolved successor
    order = range(2 * n - 1, -1, -1) if cyclic else range(n - 1, -1, -1)
    for k in order:
        i = k % n
        if majorities[i] is not None:
            continue
        j = i + 1
        if j == n:
            if not cyclic:
                out[i] = None
                continue
            j = 0
        out[i] = out[j]
    return out


def dominant_letters(g: Gene) -> DominanceVector:
    """Dom_0, ..., Dom_{f-1} of a viable nondegenerate gene."""
    if is_degenerate(g):
        raise DegenerateGene("dominance needs a gene with an O")
    if not is_viable(g):
        raise NotViable("dominance needs a viable gene")
    majorities = [column_majority(c) for c in g.columns]
    if all(m is None for m in majorities):
        raise CircularDominance("every column is a tie", {"gene": str(g)})
    resolved = _resolve(majorities, cyclic=True)
    return tuple(resolved)  # type: ignore[arg-type]


def fragment_dominance(F: Fragment) -> Tuple[Optional[Letter], ...]:
    """
    Dominance inside a fragment, ties deferred to the next column.

    Only the length-1 fragments [O / AB] and [AB / O] end on a tie; their
    dominance is None.
    """
    return tuple(_resolve([column_majority(c) for c in F.columns], cyclic=False))
