"""
Reduced fragments

A fragment whose O is on top, next to A, keeps a run of columns with bottom
letter A under a dominant A; on the Kisin variety those columns are all
[0:1]. Reduction strips the run, keeping just enough of it to preserve the
variety (and its shape), after turning the fragment so the O is on top and
flipping letters so the O sits over A or AB.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from src.genes import Fragment, Letter, fragment_dominance, validate_fragment


logger = logging.getLogger(__name__)

_OA = (Letter.O, Letter.A)
_AB_COLUMN = (Letter.A, Letter.B)


class ReducedCase(str, Enum):
    SINGLE = "i"
    B_DOMINANT = "ii"
    A_B_PREFIX = "iii"


@dataclass(frozen=True)
class ReductionResult:
    n: int
    reduced: Fragment
    case: ReducedCase
    rows_swapped: bool = False
    letters_flipped: bool = False


def orient(F: Fragment) -> Tuple[Fragment, bool, bool]:
    """Put the O on top and A (or AB) beside it."""
    swapped = F.down(0) == Letter.O
    if swapped:
        F = F.swap_rows()
    flipped = F.down(0) == Letter.B
    if flipped:
        F = F.flip()
    return F, swapped, flipped


def _top_reduced_case(F: Fragment) -> Optional[ReducedCase]:
    if F.up(0) != Letter.O or F.down(0) not in (Letter.A, Letter.AB):
        return None
    ell = len(F)
    if ell == 1:
        return ReducedCase.SINGLE
    dom = fragment_dominance(F)
    if dom[1] == Letter.B:
        return ReducedCase.B_DOMINANT
    if ell > 2 and F.columns[1] == _AB_COLUMN and dom[2] == Letter.A:
        return ReducedCase.A_B_PREFIX
    return None


def reduced_case(F: Fragment) -> Optional[ReducedCase]:
    """Which clause makes F reduced (top- or bottom-), or None."""
    case = _top_reduced_case(F)
    if case is None:
        case = _top_reduced_case(F.swap_rows())
    return case


def is_reduced(F: Fragment) -> bool:
    return reduced_case(F) is not None


def reducible_prefix_length(F: Fragment) -> int:
    """
    Number of leading columns whose projection is constant on the Kisin
    variety: the largest n with bottom letter A before column n-1 and A
    dominant before column n (after orienting).
    """
    F, _, _ = orient(F)
    if len(F) == 1:
        return 1
    dom = fragment_dominance(F)
    n = 1
    while n < len(F) and F.down(n - 1) == Letter.A and dom[n] == Letter.A:
        n += 1
    return n


def reduce(F: Fragment) -> ReductionResult:
    """The collapsed prefix length and the reduced fragment (top-reduced)."""
    oriented, swapped, flipped = orient(F)
    ell = len(oriented)
    if ell == 1:
        return ReductionResult(0, oriented, ReducedCase.SINGLE, swapped, flipped)
    n = reducible_prefix_length(oriented)
    last = oriented.down(n - 1)
    if n == 1:
        reduced, case = oriented, ReducedCase.B_DOMINANT
    elif last == Letter.A:
        reduced = validate_fragment((_OA,) + oriented.columns[n:], oriented.anchor)
        case = ReducedCase.SINGLE if n == ell else ReducedCase.B_DOMINANT
    elif last == Letter.B:
        reduced = validate_fragment((_OA, _AB_COLUMN) + oriented.columns[n:], oriented.anchor)
        case = ReducedCase.A_B_PREFIX
    else:
        reduced = validate_fragment(((Letter.O, Letter.AB),), oriented.anchor)
        case = ReducedCase.SINGLE
    result = ReductionResult(ell - len(reduced), reduced, case, swapped, flipped)
    logger.debug("Reduced %s to %s (n=%d, case %s)", F, reduced, result.n, case.value)
    return result
