"""
Fragments

Cutting a viable nondegenerate gene vertically before each column holding an O
gives its fragments. A fragment of length l has columns (F_i^up, F_i^down):
exactly one O in the first column, no O after it, no AB before the last
column and, when l > 1, exactly one AB in the last column.

The last fragment may run past column f-1. Its columns there are read
2f-periodically, so they appear with their rows swapped.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.core.exceptions import DegenerateGene, InvalidFragment, NotViable

from .gene import Column, Gene, is_degenerate, is_viable
from .letters import Letter, parse_letter


@dataclass(frozen=True)
class Fragment:
    """Columns of a fragment, optionally anchored at a column of its gene."""

    columns: Tuple[Column, ...]
    anchor: Optional[int] = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.columns)

    def __len__(self) -> int:
        return len(self.columns)

    def up(self, i: int) -> Letter:
        return self.columns[i][0]

    def down(self, i: int) -> Letter:
        return self.columns[i][1]

    @property
    def top(self) -> Tuple[Letter, ...]:
        return tuple(c[0] for c in self.columns)

    @property
    def bottom(self) -> Tuple[Letter, ...]:
        return tuple(c[1] for c in self.columns)

    def swap_rows(self) -> "Fragment":
        return Fragment(tuple((d, u) for u, d in self.columns), self.anchor)

    def flip(self) -> "Fragment":
        """A and B exchanged everywhere."""
        return Fragment(tuple((u.flipped(), d.flipped()) for u, d in self.columns), self.anchor)

    def position(self, j: int, f: int) -> Tuple[int, bool]:
        """Gene column of fragment column j, and whether its rows are swapped there."""
        k = (self.anchor or 0) + j
        return k % f, (k // f) % 2 == 1

    def text(self) -> str:
        return ",".join(u.value for u, _ in self.columns) + "/" + ",".join(d.value for _, d in self.columns)

    def __str__(self) -> str:
        return "[" + " ".join(u.value for u in self.top) + " / " + " ".join(d.value for d in self.bottom) + "]"


def validate_fragment(columns: Iterable[Sequence[Union[str, Letter]]], anchor: Optional[int] = None) -> Fragment:
    """Build a Fragment, checking the left, center and right conditions."""
    cols: List[Column] = []
    for col in columns:
        if len(col) != 2:
            raise InvalidFragment(f"a column has two letters, got {col!r}")
        try:
            u, d = (x if isinstance(x, Letter) else parse_letter(x) for x in col)
        except ValueError as e:
            raise InvalidFragment(f"unknown letter in column {col!r}") from e
        cols.append((u, d))
    if not cols:
        raise InvalidFragment("a fragment has at least one column")

    u0, d0 = cols[0]
    if (u0 == Letter.O) == (d0 == Letter.O):
        raise InvalidFragment("the first column must hold exactly one O", {"column": 0})
    ell = len(cols)
    for i, (u, d) in enumerate(cols):
        if i > 0 and Letter.O in (u, d):
            raise InvalidFragment(f"O inside the fragment at column {i}", {"column": i})
        if i < ell - 1 and Letter.AB in (u, d):
            raise InvalidFragment(f"AB before the last column at column {i}", {"column": i})
    if ell > 1:
        u, d = cols[-1]
        if (u == Letter.AB) == (d == Letter.AB):
            raise InvalidFragment("the last column must hold exactly one AB", {"column": ell - 1})
    return Fragment(tuple(cols), anchor)


def parse_fragment(text: str) -> Fragment:
    """Parse "top/bottom" rows, e.g. "O,A,B/B,A,AB"."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise InvalidFragment(f"expected 'top/bottom', got {text!r}")
    top = [t for t in parts[0].split(",") if t.strip()]
    bottom = [t for t in parts[1].split(",") if t.strip()]
    if len(top) != len(bottom):
        raise InvalidFragment("rows have different lengths")
    return validate_fragment(zip(top, bottom))


def cut_columns(g: Gene) -> List[int]:
    """Columns holding an O, in increasing order."""
    return [i for i, (u, d) in enumerate(g.columns) if Letter.O in (u, d)]


def fragments(g: Gene) -> List[Fragment]:
    """
    The fragments of a viable nondegenerate gene, starting at the smallest
    cut column and wrapping around.
    """
    if is_degenerate(g):
        raise DegenerateGene("a gene without O has no fragments")
    if not is_viable(g):
        raise NotViable("a column (O, O) cannot start a fragment")
    cuts = cut_columns(g)
    f = g.f
    out = []
    for k, start in enumerate(cuts):
        stop = cuts[k + 1] if k + 1 < len(cuts) else cuts[0] + f
        out.append(validate_fragment((g.column(i) for i in range(start, stop)), anchor=start))
    return out


def all_fragments(ell: int) -> List[Fragment]:
    """Every fragment of length ell (exhaustive; used by the scans)."""
    if ell == 1:
        firsts = [(Letter.O, x) for x in (Letter.A, Letter.B, Letter.AB)]
        firsts += [(x, Letter.O) for x in (Letter.A, Letter.B, Letter.AB)]
        return [Fragment((c,)) for c in firsts]
    firsts = [(Letter.O, x) for x in (Letter.A, Letter.B)] + [(x, Letter.O) for x in (Letter.A, Letter.B)]
    plain = [(u, d) for u in (Letter.A, Letter.B) for d in (Letter.A, Letter.B)]
    lasts = [(Letter.AB, x) for x in (Letter.A, Letter.B)] + [(x, Letter.AB) for x in (Letter.A, Letter.B)]
    out: List[Fragment] = []

    def grow(prefix: List[Column]) -> None:
        if len(prefix) == ell - 1:
            for last in lasts:
                out.append(Fragment(tuple(prefix + [last])))
            return
        for col in plain:
            prefix.append(col)
            grow(prefix)
            prefix.pop()

    for first in firsts:
        grow([first])
    return out
