"""
Active enriched weights

The active enriched weights of a gene are read off the weight recursions:
a column of an active enriched weight is one of (b,b), (a,b), (b,a), and
the activity clauses between neighbouring columns are exactly the source
rules of the tables W_i^(b,b), W_i^(a,b), W_i^(b,a). So the active enriched
weights over a fragment are the state paths of its recursion, and those of a
degenerate gene are the cyclic paths (column -1 being column f-1 with its
rows swapped). Taking the bit of each state gives back the combinatorial
weight.
"""

import itertools
import logging
from typing import Iterator, List, Sequence, Tuple

from src.arithmetic import CoherentTriple, v_sequence
from src.core.exceptions import NotAWeight
from src.genes import Fragment, Gene, Letter, LetterClass, fragments, gene_of_triple, is_degenerate, is_viable
from src.weights import CLOSING_PAIRS, PairState, Word
from src.weights.degenerate import degenerate_recursions
from src.weights.fragment import fragment_recursion, terminal_states

from .models import EnrichedWeight, FragmentaryEnrichedWeight
from .mutation import enriched_of_chi, is_active, mutate


logger = logging.getLogger(__name__)

a, b = LetterClass.a, LetterClass.b
_PLAIN = (Letter.A, Letter.B)

StatePath = Tuple[PairState, ...]


def fragment_enriched_paths(F: Fragment) -> List[StatePath]:
    """The fragmentary enriched weights of F, as column states."""
    return list(fragment_recursion(F).iter_paths(terminal_states(F)))


def fragment_enriched_weights(F: Fragment) -> List[FragmentaryEnrichedWeight]:
    return sorted(tuple(s.pair for s in path) for path in fragment_enriched_paths(F))


def _degenerate_paths(g: Gene) -> Iterator[StatePath]:
    recs = degenerate_recursions(g)
    for start, end in CLOSING_PAIRS:
        yield from recs[start].iter_paths((end,))


def iter_enriched(g: Gene) -> Iterator[EnrichedWeight]:
    """Stream the active enriched weights of a gene."""
    if not is_viable(g):
        return
    if is_degenerate(g):
        for path in _degenerate_paths(g):
            yield EnrichedWeight.of_states(path)
        return
    parts = fragments(g)
    per_fragment = [fragment_enriched_paths(F) for F in parts]
    states: List[PairState] = [PairState.BB] * g.f
    for combo in itertools.product(*per_fragment):
        for F, path in zip(parts, combo):
            _put(states, F, path)
        yield EnrichedWeight.of_states(states)


def _put(states: List[PairState], F: Fragment, path: StatePath) -> None:
    f = len(states)
    for j, s in enumerate(path):
        i, swapped = F.position(j, f)
        states[i] = s.swapped() if swapped else s


def enriched_weights(g: Gene) -> List[EnrichedWeight]:
    weights = sorted(iter_enriched(g))
    logger.debug("Gene %s has %d active enriched weights", g, len(weights))
    return weights


def enumerate_enriched(t: CoherentTriple) -> List[EnrichedWeight]:
    """The active enriched weights of a coherent triple, sorted."""
    return enriched_weights(gene_of_triple(t))


def brute_force_enriched(t: CoherentTriple) -> List[EnrichedWeight]:
    """Every 0/1 mask chi with an active mutation of v; 4^f candidates."""
    g = gene_of_triple(t)
    v = v_sequence(t)
    n = 2 * t.f
    found = []
    for chi in itertools.product((0, 1), repeat=n):
        if is_active(mutate(v, chi, t.p), t.p):
            found.append(enriched_of_chi(g, chi))
    return sorted(found)


def lift(g: Gene, w: Sequence[int]) -> EnrichedWeight:
    """
    An active enriched weight over the combinatorial weight w.

    Raises:
        NotAWeight: if w is not a weight of g
    """
    w = tuple(w)
    path = _lift_states(g, w) if is_viable(g) and len(w) == g.f else None
    if path is None:
        raise NotAWeight(f"{''.join(map(str, w))} is not a weight of the gene", {"gene": str(g), "weight": list(w)})
    return EnrichedWeight.of_states(path)


def _lift_states(g: Gene, w: Word):
    if is_degenerate(g):
        recs = degenerate_recursions(g)
        for start, end in CLOSING_PAIRS:
            path = recs[start].find_path(w, (end,))
            if path is not None:
                return path
        return None
    states: List[PairState] = [PairState.BB] * g.f
    for F in fragments(g):
        piece = tuple(w[(F.anchor + j) % g.f] for j in range(len(F)))
        path = fragment_recursion(F).find_path(piece, terminal_states(F))
        if path is None:
            return None
        _put(states, F, path)
    return tuple(states)


def is_fragmentary_enriched_weight(F: Fragment, pairs: Sequence[Tuple[LetterClass, LetterClass]]) -> bool:
    """Check the edge and neighbour clauses of a fragmentary enriched weight directly."""
    ell = len(F)
    if len(pairs) != ell:
        return False
    up0, down0 = F.columns[0]
    if up0 == Letter.O and pairs[0][1] != b:
        return False
    if down0 == Letter.O and pairs[0][0] != b:
        return False
    up_last, down_last = F.columns[-1]
    if up_last == Letter.AB and pairs[-1][0] != b:
        return False
    if down_last == Letter.AB and pairs[-1][1] != b:
        return False
    if ell == 1:
        # the next O continues the row of this O
        if up0 in _PLAIN and pairs[0][1] != a:
            return False
        if down0 in _PLAIN and pairs[0][0] != a:
            return False
    for i in range(1, ell):
        up, down = pairs[i]
        up_prev, down_prev = pairs[i - 1]
        X_up, X_down = F.columns[i]
        P_up, P_down = F.columns[i - 1]
        if (up, down) == (a, a):
            return False
        if (up, down) == (b, b):
            if P_up.similar(P_down) == (up_prev == down_prev):
                return False
        elif (up, down) == (a, b):
            if (up_prev == a) != X_up.similar(P_up):
                return False
        elif (down_prev == a) != X_down.similar(P_down):
            return False
    return True
