"""
Single-equation moves

Under a dominant A, a column (A, B) followed by a column dominated by A ties
the two columns by an equation. Replacing it by (A, A) and flipping the rest
of the fragment keeps every other equation and forced value and drops that
one, so the Kisin variety grows and the weight count cannot decrease.
"""

from typing import List, Tuple

from src.genes import Fragment, Letter, fragment_dominance, validate_fragment


_AB_COLUMN = (Letter.A, Letter.B)
_AA_COLUMN = (Letter.A, Letter.A)


def _variants(F: Fragment) -> List[Fragment]:
    out: List[Fragment] = []
    for V in (F, F.flip(), F.swap_rows(), F.swap_rows().flip()):
        if V not in out:
            out.append(V)
    return out


def single_equation_moves(F: Fragment) -> List[Tuple[Fragment, Fragment]]:
    """
    Pairs (V, V') with V a row-swap and/or flip of F and V' the same
    fragment with one equation removed.
    """
    moves: List[Tuple[Fragment, Fragment]] = []
    for V in _variants(F):
        dom = fragment_dominance(V)
        for s in range(2, len(V)):
            if V.columns[s - 1] != _AB_COLUMN or dom[s] != Letter.A:
                continue
            rest = Fragment(V.columns[s:]).flip().columns
            moved = validate_fragment(V.columns[:s - 1] + (_AA_COLUMN,) + rest, V.anchor)
            moves.append((V, moved))
    return moves
