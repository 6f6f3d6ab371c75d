"""
Genes

A gene is a 2f-periodic word X_0, X_1, ... over {A, B, AB, O}, drawn as two
rows of f letters: the top row X_0..X_{f-1} over the bottom row
X_f..X_{2f-1}, so that column i is (X_i, X_{i+f}).
"""

import logging
import os
import random
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from src.core.exceptions import (
    ABNotFollowedByO,
    ConditionThreeFails,
    InvalidGene,
    OIllegallyPreceded,
)

from .letters import Letter, parse_letter


logger = logging.getLogger(__name__)

Column = Tuple[Letter, Letter]


@dataclass(frozen=True)
class Gene:
    """A validated gene; build it with validate_gene or parse_gene."""

    letters: Tuple[Letter, ...]

    @property
    def f(self) -> int:
        return len(self.letters) // 2

    def at(self, i: int) -> Letter:
        """X_i, read 2f-periodically."""
        return self.letters[i % len(self.letters)]

    def column(self, i: int) -> Column:
        """(X_i, X_{i+f}); column f+j is column j with its rows swapped."""
        return self.at(i), self.at(i + self.f)

    @property
    def columns(self) -> List[Column]:
        return [self.column(i) for i in range(self.f)]

    @property
    def top(self) -> Tuple[Letter, ...]:
        return self.letters[: self.f]

    @property
    def bottom(self) -> Tuple[Letter, ...]:
        return self.letters[self.f:]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return render_gene(self)


def _as_letters(letters: Iterable[Union[str, Letter]]) -> Tuple[Letter, ...]:
    out = []
    for x in letters:
        try:
            out.append(x if isinstance(x, Letter) else parse_letter(x))
        except ValueError as e:
            raise InvalidGene(f"unknown letter {x!r}", {"letter": str(x)}) from e
    return tuple(out)


def validate_gene(letters: Iterable[Union[str, Letter]]) -> Gene:
    """
    Check the gene conditions on a word of length 2f (f >= 2).

    Raises:
        ABNotFollowedByO: some X_i = AB with X_{i+1} != O
        OIllegallyPreceded: some X_i = O with X_{i-1} not in {AB, O}
        ConditionThreeFails: no O and X_i = X_{i+f} for every i
    """
    word = _as_letters(letters)
    n = len(word)
    if n % 2 or n < 4:
        raise InvalidGene(f"a gene has even length 2f with f >= 2, got {n}", {"length": n})
    f = n // 2

    for i, x in enumerate(word):
        nxt = word[(i + 1) % n]
        prev = word[i - 1]
        if x == Letter.AB and nxt != Letter.O:
            raise ABNotFollowedByO(
                f"X_{i} = AB but X_{(i + 1) % n} = {nxt.value}", {"index": i}
            )
        if x == Letter.O and prev not in (Letter.AB, Letter.O):
            raise OIllegallyPreceded(
                f"X_{i} = O but X_{(i - 1) % n} = {prev.value}", {"index": i}
            )

    if all(word[i] != Letter.O and word[i] == word[i + f] for i in range(f)):
        raise ConditionThreeFails("no O and every column repeats its letter", {"f": f})

    return Gene(word)


def is_degenerate(g: Gene) -> bool:
    return Letter.O not in g.letters


def is_viable(g: Gene) -> bool:
    """No column (O, O)."""
    return all(col != (Letter.O, Letter.O) for col in g.columns)


def parse_gene(text: str) -> Gene:
    """Parse "top/bottom" with comma separated letters, e.g. "O,A,B/B,A,AB"."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise InvalidGene(f"expected 'top/bottom', got {text!r}", {"text": text})
    top = [t for t in parts[0].split(",") if t.strip()]
    bottom = [t for t in parts[1].split(",") if t.strip()]
    if len(top) != len(bottom):
        raise InvalidGene(
            f"rows have different lengths {len(top)} and {len(bottom)}", {"text": text}
        )
    return validate_gene(top + bottom)


_COLORS = {Letter.A: "\033[34m", Letter.B: "\033[31m"}
_RESET = "\033[0m"


def use_color(stream=None) -> bool:
    stream = stream or sys.stdout
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def render_gene(g: Gene, dominance: Optional[Sequence[Letter]] = None, color: bool = False) -> str:
    """
    Two text rows "top" / "bottom". With a dominance vector a third line
    marks each column with ^A or ^B; color paints dominant letters instead
    (blue for A, red for B).
    """
    top = [x.value for x in g.top]
    bottom = [x.value for x in g.bottom]
    if dominance is not None and color:
        for i, d in enumerate(dominance):
            if d is None:
                continue
            top[i] = _paint(g.top[i], d)
            bottom[i] = _paint(g.bottom[i], d)
    lines = [",".join(top), ",".join(bottom)]
    if dominance is not None and not color:
        lines.append(",".join("^" + d.value if d is not None else "^?" for d in dominance))
    return "\n".join(lines)


def _paint(x: Letter, dominant: Letter) -> str:
    if x == dominant or (x == Letter.AB):
        return f"{_COLORS[dominant]}{x.value}{_RESET}"
    return x.value


def gene_text(g: Gene) -> str:
    """One-line form accepted by parse_gene."""
    return ",".join(x.value for x in g.top) + "/" + ",".join(x.value for x in g.bottom)


def enumerate_genes(f: int) -> Iterator[Gene]:
    """
    Every valid gene with 2f letters.

    Depth-first over the word with the local AB/O rules checked as letters
    are placed; the cyclic wrap and the third condition are checked at the end.
    """
    n = 2 * f
    word: List[Letter] = []
    alphabet = (Letter.A, Letter.B, Letter.AB, Letter.O)

    def allowed_after(prev: Letter) -> Iterable[Letter]:
        if prev == Letter.AB:
            return (Letter.O,)
        if prev == Letter.O:
            return alphabet
        return (Letter.A, Letter.B, Letter.AB)

    def extend() -> Iterator[Gene]:
        if len(word) == n:
            try:
                yield validate_gene(word)
            except InvalidGene:
                pass
            return
        choices = alphabet if not word else allowed_after(word[-1])
        for x in choices:
            word.append(x)
            yield from extend()
            word.pop()

    yield from extend()


def random_gene(f: int, rng: Optional[random.Random] = None, max_tries: int = 1000) -> Gene:
    """A random valid gene, built letter by letter and closed by rejection."""
    rng = rng or random.Random()
    alphabet = (Letter.A, Letter.B, Letter.AB, Letter.O)
    for _ in range(max_tries):
        word = [rng.choice(alphabet)]
        for _ in range(2 * f - 1):
            prev = word[-1]
            if prev == Letter.AB:
                word.append(Letter.O)
            elif prev == Letter.O:
                word.append(rng.choice(alphabet))
            else:
                word.append(rng.choice((Letter.A, Letter.B, Letter.AB)))
        try:
            return validate_gene(word)
        except InvalidGene:
            continue
    raise InvalidGene(f"no valid gene drawn in {max_tries} tries", {"f": f})
