"""
Gene of a coherent triple

Fast path: read the letters off the v-digits in one backward sweep started at
a digit >= 2 (which always sits under an O). Oracle path: decide every O
independently by comparing a rotated 2f-digit integer with (q^2-1)/(p-1).
"""

import logging
from typing import List, Optional

from src.arithmetic import CoherentTriple, v_sequence

from .gene import Gene, validate_gene
from .letters import Letter


logger = logging.getLogger(__name__)


def _letter_before(v: int, following: Letter) -> Letter:
    if v == 0:
        return Letter.AB if following == Letter.O else Letter.A
    if v == 1:
        return Letter.O if following == Letter.O else Letter.B
    return Letter.O


def gene_of_triple(t: CoherentTriple) -> Gene:
    """The gene of (h, gamma, gamma'), linear in f once v is known."""
    v = v_sequence(t)
    n = len(v)
    seed = next((i for i, x in enumerate(v) if x >= 2), None)
    if seed is None:
        # all digits in {0, 1}: no O can occur
        return validate_gene(Letter.A if x == 0 else Letter.B for x in v)

    letters: List[Optional[Letter]] = [None] * n
    letters[seed] = Letter.O
    for k in range(1, n):
        i = (seed - k) % n
        letters[i] = _letter_before(v[i], letters[(i + 1) % n])
    return validate_gene(letters)


def gene_of_triple_oracle(t: CoherentTriple) -> Gene:
    """Quadratic construction deciding each O from the rotated v-digits."""
    v = v_sequence(t)
    n = len(v)
    p = t.p
    threshold = (t.q * t.q - 1) // (p - 1)
    is_o = []
    for i in range(n):
        rotated = 0
        for j in range(n):
            rotated = rotated * p + v[(i + j) % n]
        is_o.append(rotated >= threshold)

    letters = []
    for i in range(n):
        if is_o[i]:
            letters.append(Letter.O)
        elif v[i] == 0:
            letters.append(Letter.AB if is_o[(i + 1) % n] else Letter.A)
        else:
            letters.append(Letter.B)
    return validate_gene(letters)
