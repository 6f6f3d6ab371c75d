"""
Combinatorial weights of a degenerate gene

Without an O the gene does not split into fragments. The recursion then runs
over all f columns with nine tables W_i^(x,y): words whose virtual column -1
is in state x and whose column i is in state y. Column -1 is column f-1 read
with its rows swapped, so the weights are
W^(bb,bb) | W^(ab,ba) | W^(ba,ab) at i = f-1.

Only A and B occur in a degenerate gene, so the similarity tests of the
fragment recursion are plain letter equalities here.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from src.config import get_config
from src.core.exceptions import InvalidGene
from src.genes import Gene, is_degenerate

from .recursion import LayeredRecursion, Sources, Word
from .states import ALL_STATES, PairState


logger = logging.getLogger(__name__)

BB, AB, BA = PairState.BB, PairState.AB, PairState.BA

# (start, end) pairs whose union is W(X)
CLOSING_PAIRS = ((BB, BB), (AB, BA), (BA, AB))


def degenerate_steps(g: Gene) -> List[Sources]:
    if not is_degenerate(g):
        raise InvalidGene("the cyclic recursion is for genes without O", {"gene": str(g)})
    f = g.f
    steps: List[Sources] = []
    for i in range(f):
        same_pair = g.at(i - 1) == g.at(i - 1 + f)
        same_top = g.at(i) == g.at(i - 1)
        same_bottom = g.at(i + f) == g.at(i - 1 + f)
        steps.append({
            BB: (AB, BA) if same_pair else (BB,),
            AB: (AB,) if same_top else (BA, BB),
            BA: (BA,) if same_bottom else (AB, BB),
        })
    return steps


def degenerate_recursions(g: Gene, check_invariants: Optional[bool] = None) -> Dict[PairState, LayeredRecursion]:
    """One recursion per start state x."""
    if check_invariants is None:
        check_invariants = get_config().enumeration.check_invariants
    steps = degenerate_steps(g)
    return {
        x: LayeredRecursion(seeds=(x,), steps=steps, check_invariants=check_invariants, triangle=False)
        for x in ALL_STATES
    }


@dataclass
class DegenerateTables:
    """layers[k] holds the nine tables of column k-1 (so layers[0] is column -1)."""

    layers: List[Dict[Tuple[PairState, PairState], FrozenSet[Word]]]

    def at(self, i: int, start: PairState, end: PairState) -> FrozenSet[Word]:
        return self.layers[i + 1][(start, end)]


def degenerate_tables(g: Gene) -> DegenerateTables:
    recs = degenerate_recursions(g)
    initial = {(x, y): frozenset({()}) if x == y else frozenset() for x in ALL_STATES for y in ALL_STATES}
    layers = [initial]
    per_start = {x: rec.tables() for x, rec in recs.items()}
    for i in range(g.f):
        layers.append({(x, y): per_start[x][i][y] for x in ALL_STATES for y in ALL_STATES})
    return DegenerateTables(layers)


def iter_degenerate_weights(g: Gene) -> Iterator[Word]:
    """Stream W(X); the two overlapping closing tables are deduplicated by a membership test."""
    recs = degenerate_recursions(g)
    yield from recs[BB].iter_words((BB,))
    yield from recs[AB].iter_words((BA,))
    for w in recs[BA].iter_words((AB,)):
        if not recs[AB].contains(w, (BA,)):
            yield w


def degenerate_weights(g: Gene) -> List[Word]:
    return sorted(iter_degenerate_weights(g))


def degenerate_count(g: Gene) -> int:
    """
    Card W(X) from fourteen size sequences.

    Nine single sizes c^(x,y) come from the per-start recursions. The union
    sizes U[y, z] = |W^(ab,y) | W^(ba,z)| for y, z in {(a,b), (b,a)} and
    V = |W^(ab,bb) | W^(ba,bb)| are carried alongside.
    """
    recs = degenerate_recursions(g)
    steps = degenerate_steps(g)
    f = g.f
    mixed = (AB, BA)

    def stays(state: PairState, i: int) -> bool:
        return steps[i][state] == (state,)

    u = {(y, z): int(y == AB or z == BA) for y in mixed for z in mixed}
    v = 0
    for i in range(f):
        c_ab_bb = recs[AB].counts[i - 1][BB] if i else 0
        c_ba_bb = recs[BA].counts[i - 1][BB] if i else 0
        nxt = {}
        for y in mixed:
            for z in mixed:
                sy, sz = stays(y, i), stays(z, i)
                if sy and sz:
                    nxt[(y, z)] = u[(y, z)]
                elif sy:
                    nxt[(y, z)] = u[(y, z.swapped())] + c_ba_bb
                elif sz:
                    nxt[(y, z)] = u[(y.swapped(), z)] + c_ab_bb
                else:
                    nxt[(y, z)] = u[(y.swapped(), z.swapped())] + v
        if steps[i][BB] == (AB, BA):
            v = max(u.values())
        u = nxt

    total = recs[BB].counts[-1][BB] + u[(BA, AB)]
    logger.debug("Degenerate gene %s has %d weights", g, total)
    return total

