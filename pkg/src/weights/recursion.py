"""
Layered weight recursion

Both weight recursions (per fragment, and per degenerate gene) have the same
shape: layer i holds three sets of (i+1)-bit words indexed by a PairState;
each set is the union of some sets of layer i-1 with one bit appended (1 for
the (b,b) table, 0 for the others). Layer -1 holds the empty word in a chosen
set of seed states.

Two unions occur: a (b,b) table with one of the others, which is disjoint
because the last bits differ, and (a,b) with (b,a), which is nested so its
size is the larger size. Counting uses exactly this; streaming follows only
the larger branch of a nested union so that no word is produced twice.
"""

import logging
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from src.core.exceptions import InvariantViolation

from .states import ALL_STATES, PairState


logger = logging.getLogger(__name__)

Sources = Dict[PairState, Tuple[Hashable, ...]]
Word = Tuple[int, ...]


def union_size(sizes: Dict[Hashable, int], members: Iterable[Hashable]) -> int:
    """Size of a union of tables given their sizes: (b,b) adds, the rest nest."""
    total = 0
    nested = 0
    for m in members:
        if m == PairState.BB:
            total += sizes.get(m, 0)
        else:
            nested = max(nested, sizes.get(m, 0))
    return total + nested


def collapse(sizes: Dict[Hashable, int], members: Sequence[Hashable]) -> Tuple[Hashable, ...]:
    """Members of a union with empty tables dropped and nested pairs reduced to the larger."""
    live = [m for m in members if sizes.get(m, 0) > 0]
    nested = [m for m in live if m != PairState.BB]
    if len(nested) > 1:
        keep = max(nested, key=lambda m: sizes[m])
        live = [m for m in live if m == PairState.BB or m == keep]
    return tuple(live)


class LayeredRecursion:
    """
    Counts, tables and streaming enumeration for one recursion.

    Args:
        seeds: states holding the empty word at layer -1
        steps: for each layer 0..n-1, the source states of every PairState
        check_invariants: verify nesting, disjointness and (if triangle)
            the triangle inequalities on the sizes at every layer
    """

    def __init__(
        self,
        seeds: Iterable[Hashable],
        steps: List[Sources],
        check_invariants: bool = False,
        triangle: bool = True,
    ):
        self.seeds = frozenset(seeds)
        self.steps = steps
        self.n = len(steps)
        self.check_invariants = check_invariants
        self.triangle = triangle
        self.counts: List[Dict[PairState, int]] = []
        self._count()

    def _layer_sizes(self, i: int) -> Dict[Hashable, int]:
        if i < 0:
            return {s: 1 for s in self.seeds}
        return self.counts[i]  # type: ignore[return-value]

    def _count(self) -> None:
        for i, sources in enumerate(self.steps):
            previous = self._layer_sizes(i - 1)
            layer = {s: union_size(previous, sources[s]) for s in ALL_STATES}
            if self.check_invariants and self.triangle:
                self._check_triangle(i, layer)
            self.counts.append(layer)
        logger.debug("Counted %d layers, last layer %s", self.n, self.counts[-1] if self.counts else {})

    @staticmethod
    def _check_triangle(i: int, c: Dict[PairState, int]) -> None:
        bb, ab, ba = c[PairState.BB], c[PairState.AB], c[PairState.BA]
        if ab > ba + bb or ba > ab + bb or bb > ab + ba:
            raise InvariantViolation(
                f"triangle inequality fails at layer {i}",
                {"layer": i, "bb": bb, "ab": ab, "ba": ba},
            )

    def size(self, finals: Iterable[PairState]) -> int:
        """Size of the union of the given last-layer tables."""
        return union_size(self.counts[-1], finals)

    def tables(self) -> List[Dict[PairState, FrozenSet[Word]]]:
        """Every table materialized (exponential; for display and checks)."""
        previous: Dict[Hashable, Set[Word]] = {s: {()} for s in self.seeds}
        out: List[Dict[PairState, FrozenSet[Word]]] = []
        for i, sources in enumerate(self.steps):
            layer: Dict[PairState, FrozenSet[Word]] = {}
            for s in ALL_STATES:
                words: Set[Word] = set()
                for src in sources[s]:
                    words.update(w + (s.bit,) for w in previous.get(src, ()))
                layer[s] = frozenset(words)
            if self.check_invariants:
                self._check_tables(i, layer)
            out.append(layer)
            previous = dict(layer)  # type: ignore[arg-type]
        return out

    @staticmethod
    def _check_tables(i: int, t: Dict[PairState, FrozenSet[Word]]) -> None:
        bb, ab, ba = t[PairState.BB], t[PairState.AB], t[PairState.BA]
        if ab & bb or ba & bb:
            raise InvariantViolation(f"(b,b) table meets another table at layer {i}", {"layer": i})
        if not (ab <= ba or ba <= ab):
            raise InvariantViolation(f"(a,b) and (b,a) tables are not nested at layer {i}", {"layer": i})

    def find_path(self, word: Sequence[int], finals: Iterable[PairState]) -> Optional[Tuple[PairState, ...]]:
        """
        One state sequence spelling `word` and ending in one of `finals`.

        Forward reachability with a parent per reached state, then a walk back.
        """
        if len(word) != self.n:
            return None
        parents: List[Dict[PairState, Hashable]] = []
        reachable: Set[Hashable] = set(self.seeds)
        for i, sources in enumerate(self.steps):
            layer: Dict[PairState, Hashable] = {}
            for s in ALL_STATES:
                if s.bit != word[i]:
                    continue
                src = next((x for x in sources[s] if x in reachable), None)
                if src is not None:
                    layer[s] = src
            if not layer:
                return None
            parents.append(layer)
            reachable = set(layer)
        end = next((s for s in finals if s in reachable), None)
        if end is None:
            return None
        path = [end]
        for i in range(self.n - 1, 0, -1):
            path.append(parents[i][path[-1]])  # type: ignore[arg-type]
        return tuple(reversed(path))  # type: ignore[arg-type]

    def contains(self, word: Sequence[int], finals: Iterable[PairState]) -> bool:
        """Membership of a full-length word in the union of the given last tables."""
        return self.find_path(word, finals) is not None

    def iter_words(self, finals: Sequence[PairState]) -> Iterator[Word]:
        """
        Stream the union of the given last-layer tables.

        Depth-first from the last layer back to the seeds over non-empty
        tables only; every branch reaches a seed, so each word costs O(n).
        """
        n = self.n
        if n == 0:
            return
        bits = [0] * n
        for final in collapse(self.counts[-1], finals):
            bits[n - 1] = final.bit  # type: ignore[union-attr]
            stack = [(n - 1, iter(collapse(self._layer_sizes(n - 2), self.steps[n - 1][final])))]
            while stack:
                i, branches = stack[-1]
                src = next(branches, None)
                if src is None:
                    stack.pop()
                    continue
                if i == 0:
                    yield tuple(bits)
                    continue
                bits[i - 1] = src.bit  # type: ignore[union-attr]
                stack.append((i - 1, iter(collapse(self._layer_sizes(i - 2), self.steps[i - 1][src]))))

    def _live(self, i: int, members: Sequence[Hashable]) -> Tuple[Hashable, ...]:
        sizes = self._layer_sizes(i)
        return tuple(m for m in members if sizes.get(m, 0) > 0)

    def iter_paths(self, finals: Sequence[PairState]) -> Iterator[Tuple[PairState, ...]]:
        """
        Stream every state sequence through non-empty tables ending in `finals`.

        Unlike `iter_words` nothing is collapsed: two paths spelling the same
        word are both produced, since they differ as state sequences.
        """
        n = self.n
        if n == 0:
            return
        states: List[Hashable] = [None] * n
        for final in self._live(n - 1, finals):
            states[n - 1] = final
            stack = [(n - 1, iter(self._live(n - 2, self.steps[n - 1][final])))]  # type: ignore[index]
            while stack:
                i, branches = stack[-1]
                src = next(branches, None)
                if src is None:
                    stack.pop()
                    continue
                if i == 0:
                    yield tuple(states)  # type: ignore[arg-type]
                    continue
                states[i - 1] = src
                stack.append((i - 1, iter(self._live(i - 2, self.steps[i - 1][src]))))  # type: ignore[index]
