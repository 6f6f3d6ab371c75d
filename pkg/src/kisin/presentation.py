"""
Presentations of Kisin varieties

The Kisin variety of a gene sits in (P^1)^f with coordinates [x_i : x_{i+f}]
on the i-th factor: an O at position i forces x_i = 0, and two neighbouring
columns with the same dominant letter are tied by

    lam_i x_i x_{i+1+f} = lam_{i+f} x_{i+f} x_{i+1}

where lam_i = 1 iff X_i is the dominant letter at i. A fragment gets the
same rules on coordinates [x_i : y_i], without the cyclic wrap.

Presentations are kept structural: per-column forced values and equation
records (index and the two coefficient bits).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Optional, Tuple

from src.core.exceptions import CircularDominance
from src.genes import Fragment, Gene, Letter, dominant_letters, fragment_dominance


class ColumnValue(str, Enum):
    FREE = "free"
    ZERO_ONE = "[0:1]"
    ONE_ZERO = "[1:0]"


@dataclass(frozen=True)
class Equation:
    """lam x_i x'_{i+1} = mu x'_i x_{i+1} between columns i and i+1."""

    i: int
    lam: int
    mu: int


@dataclass(frozen=True)
class KisinPresentation:
    n: int
    constants: Tuple[ColumnValue, ...]
    equations: Tuple[Equation, ...]
    # gene presentations wrap from column n-1 to column 0
    cyclic: bool = False
    # shape function; never populated
    shape_slot: Optional[Any] = field(default=None, compare=False)

    def equation_at(self, i: int) -> Optional[Equation]:
        return next((e for e in self.equations if e.i == i), None)

    def constant_columns(self) -> List[int]:
        return [i for i, c in enumerate(self.constants) if c != ColumnValue.FREE]


def flip(F: Fragment) -> Fragment:
    """Exchange the letters A and B."""
    return F.flip()


def presentation_of_gene(g: Gene) -> KisinPresentation:
    """
    Raises:
        DegenerateGene: if g has no O
        NotViable: if g has a column (O, O)
    """
    try:
        dom: Optional[Tuple[Letter, ...]] = dominant_letters(g)
    except CircularDominance:
        # only (AB, O) and (O, AB) columns: every column is forced, no equation
        dom = None
    f = g.f
    constants = []
    for i in range(f):
        if g.at(i) == Letter.O:
            constants.append(ColumnValue.ZERO_ONE)
        elif g.at(i + f) == Letter.O:
            constants.append(ColumnValue.ONE_ZERO)
        else:
            constants.append(ColumnValue.FREE)
    equations = []
    for i in range(f):
        if dom is not None and dom[i] == dom[(i + 1) % f]:
            equations.append(Equation(i, int(g.at(i) == dom[i]), int(g.at(i + f) == dom[i])))
    return KisinPresentation(f, tuple(constants), tuple(equations), cyclic=True)


def presentation_of_fragment(F: Fragment) -> KisinPresentation:
    dom = fragment_dominance(F)
    ell = len(F)
    constants = [ColumnValue.FREE] * ell
    if F.up(0) == Letter.O:
        constants[0] = ColumnValue.ZERO_ONE
    elif F.down(0) == Letter.O:
        constants[0] = ColumnValue.ONE_ZERO
    equations = []
    for i in range(ell - 1):
        if dom[i] == dom[i + 1]:
            equations.append(Equation(i, int(F.up(i) == dom[i]), int(F.down(i) == dom[i])))
    return KisinPresentation(ell, tuple(constants), tuple(equations))


def _point_note(P: KisinPresentation) -> Optional[str]:
    if P.n == 1 and P.constants[0] != ColumnValue.FREE:
        return "{" + P.constants[0].value + "}"
    return None


def render_presentation(P: KisinPresentation) -> str:
    """
    One line per forced coordinate and one per equation. Gene presentations
    use x_0 .. x_{2f-1}; fragment presentations use x_i, y_i.
    """
    lines = []
    n = P.n
    for i, c in enumerate(P.constants):
        if c == ColumnValue.ZERO_ONE:
            lines.append(f"x_{i} = 0")
        elif c == ColumnValue.ONE_ZERO:
            lines.append(f"x_{i + n} = 0" if P.cyclic else f"y_{i} = 0")
    for e in P.equations:
        if P.cyclic:
            j = (e.i + 1) % (2 * n)
            lines.append(
                f"{e.lam}·x_{e.i}·x_{(e.i + 1 + n) % (2 * n)} = {e.mu}·x_{e.i + n}·x_{j}"
            )
        else:
            lines.append(f"{e.lam}·x_{e.i}·y_{e.i + 1} = {e.mu}·y_{e.i}·x_{e.i + 1}")
    note = _point_note(P)
    if note:
        lines.append(f"variety: {note}")
    return "\n".join(lines)
