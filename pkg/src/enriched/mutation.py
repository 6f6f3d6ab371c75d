"""
Mutations, activity and compatibility

A mutation by a numerical mask chi shifts one unit from every position to
the one before it, scaled by p:

    sigma_i  ->  sigma_i - chi_i + p * chi_{i-1}

so the packed value sum(sigma_i p^(2f-1-i)) does not move modulo q^2-1.
Enriched weights encode 0/1 masks relative to a gene: chi_i = 1 exactly when
w_i is the letter class of X_i.
"""

import logging
from typing import Hashable, Optional, Sequence

from src.arithmetic import CoherentTriple, make_residue, v_sequence
from src.core.exceptions import InvalidParameters
from src.genes import Gene, LetterClass, gene_of_triple
from src.weights import Word

from .models import EnrichedWeight, NumericalMask, PeriodicIntSequence


logger = logging.getLogger(__name__)


def mutate(sigma: Sequence[int], chi: Sequence[int], p: int) -> PeriodicIntSequence:
    """The mutation of sigma by chi."""
    if len(sigma) != len(chi):
        raise InvalidParameters(
            "a mutation needs a mask of the same period",
            {"sigma": len(sigma), "chi": len(chi)},
        )
    n = len(sigma)
    return PeriodicIntSequence(sigma[i] - chi[i] + p * chi[(i - 1) % n] for i in range(n))


def is_active_pair(x: int, y: int, p: int) -> bool:
    return 0 <= x <= p and 0 <= y <= p and x != y and (x in (0, p) or y in (0, p))


def is_active(sigma: Sequence[int], p: int) -> bool:
    """Every column pair (sigma_i, sigma_{i+f}) is active."""
    f = len(sigma) // 2
    return all(is_active_pair(sigma[i], sigma[i + f], p) for i in range(f))


def pack(sigma: Sequence[int], p: int) -> int:
    """sum(sigma_i p^(2f-1-i)) as a plain integer."""
    total = 0
    for s in sigma:
        total = total * p + s
    return total


def is_compatible(sigma: Sequence[int], t: CoherentTriple) -> bool:
    """sum(sigma_i p^(2f-1-i)) = h - (q+1) gamma' mod q^2-1."""
    if len(sigma) != 2 * t.f:
        return False
    target = make_residue(pack(v_sequence(t), t.p), t.q2m1)
    return make_residue(pack(sigma, t.p), t.q2m1) == target


def kronecker(x: Hashable, y: Hashable) -> int:
    return 1 if x == y else 0


def chi_of(g: Gene, w_hat: EnrichedWeight) -> NumericalMask:
    """chi_i = 1 iff w_i equals the letter class of X_i."""
    return NumericalMask(kronecker(w_hat.at(i), g.at(i).letter_class) for i in range(2 * g.f))


def enriched_of_chi(g: Gene, chi: Sequence[int]) -> EnrichedWeight:
    """Inverse of chi_of for 0/1 masks."""
    letters = []
    for i, c in enumerate(chi):
        cls = g.at(i).letter_class
        if not c:
            cls = LetterClass.b if cls == LetterClass.a else LetterClass.a
        letters.append(cls)
    return EnrichedWeight(tuple(letters))


def sigma_of(t: CoherentTriple, w_hat: EnrichedWeight, g: Optional[Gene] = None) -> PeriodicIntSequence:
    """v mutated by the mask of w_hat."""
    if g is None:
        g = gene_of_triple(t)
    return mutate(v_sequence(t), chi_of(g, w_hat), t.p)


def delta(w_hat: EnrichedWeight) -> Word:
    """Combinatorial weight of an enriched weight: bit i is 1 iff w_i = w_{i+f}."""
    return tuple(kronecker(*w_hat.column(i)) for i in range(w_hat.f))
