"""
Combinatorial weights of a fragment

Three families of tables W_i^(b,b), W_i^(a,b), W_i^(b,a) indexed by the
column i; the weights of the fragment are a union of last-column tables
chosen by where the AB sits.
"""

import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from src.config import get_config
from src.genes import Fragment, Letter

from .recursion import LayeredRecursion, Sources, Word
from .states import ALL_STATES, START, PairState


logger = logging.getLogger(__name__)

_PLAIN = (Letter.A, Letter.B)


def fragment_steps(F: Fragment) -> List[Sources]:
    """Source tables of every W_i^state, column by column."""
    ell = len(F)
    u0, d0 = F.columns[0]
    bb_seeded = not (ell == 1 and (u0 in _PLAIN or d0 in _PLAIN))
    steps: List[Sources] = [{
        PairState.BB: (START,) if bb_seeded else (),
        PairState.AB: () if d0 == Letter.O else (START,),
        PairState.BA: () if u0 == Letter.O else (START,),
    }]
    for i in range(1, ell):
        up_prev, down_prev = F.columns[i - 1]
        up, down = F.columns[i]
        steps.append({
            PairState.BB: (PairState.AB, PairState.BA) if up_prev.similar(down_prev) else (PairState.BB,),
            PairState.AB: (PairState.AB,) if up.similar(up_prev) else (PairState.BA, PairState.BB),
            PairState.BA: (PairState.BA,) if down.similar(down_prev) else (PairState.AB, PairState.BB),
        })
    return steps


def terminal_states(F: Fragment) -> Tuple[PairState, ...]:
    """Last-column tables whose union is W(F)."""
    up, down = F.columns[-1]
    if down == Letter.AB:
        return (PairState.BB, PairState.AB)
    if up == Letter.AB:
        return (PairState.BB, PairState.BA)
    return ALL_STATES


def fragment_recursion(F: Fragment, check_invariants: Optional[bool] = None) -> LayeredRecursion:
    if check_invariants is None:
        check_invariants = get_config().enumeration.check_invariants
    return LayeredRecursion(
        seeds=(START,),
        steps=fragment_steps(F),
        check_invariants=check_invariants,
        triangle=len(F) >= 2,
    )


def iter_fragment_weights(F: Fragment) -> Iterator[Word]:
    """Stream W(F), each weight after O(l) work."""
    rec = fragment_recursion(F)
    return rec.iter_words(terminal_states(F))


def fragment_weights(F: Fragment) -> List[Word]:
    """W(F) as a sorted list of l-bit tuples."""
    weights = sorted(iter_fragment_weights(F))
    logger.debug("Fragment %s has %d weights", F, len(weights))
    return weights


def fragment_count(F: Fragment) -> int:
    """Card W(F) from the size recursion alone."""
    return fragment_recursion(F).size(terminal_states(F))


def fragment_counts(F: Fragment) -> List[Dict[PairState, int]]:
    """Sizes c_i^state for every column."""
    return fragment_recursion(F).counts


def fragment_tables(F: Fragment) -> List[Dict[PairState, FrozenSet[Word]]]:
    """Every W_i^state materialized."""
    return fragment_recursion(F).tables()
