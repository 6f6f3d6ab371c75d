"""
Weights of the representation

Serre weights attached to h come from the solutions (epsilon, r) of

    h = sum((-1)^eps_i p^i (1 + r_i))  mod q+1.

Writing t_i = (-1)^eps_i (1 + r_i), every t_i lies in [-p, -1] u [1, p] and
the sum is an honest integer T in a bounded window, so the solutions are
found by running through the lifts T of h mod q+1 in that window and peeling
off one signed digit at a time.
"""

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from src.arithmetic import (
    CoherentTriple,
    Modulus,
    ModulusKind,
    Residue,
    check_parameters,
    exact_div_qp1,
    make_residue,
    res_sub,
    residue_of,
)
from src.core.exceptions import NotAWeight

from .models import SerreWeight, WeightWitness


logger = logging.getLogger(__name__)

SignedDigits = Tuple[int, ...]


def _signed_expansions(
    target: int, p: int, f: int, magnitudes: Optional[Sequence[int]] = None
) -> Iterator[SignedDigits]:
    """All (t_0, ..., t_{f-1}) with t_i in [-p, -1] u [1, p] and sum(t_i p^i) = target."""
    out: List[int] = []

    def walk(rest: int, i: int) -> Iterator[SignedDigits]:
        if i == f:
            if rest == 0:
                yield tuple(out)
            return
        # the remaining digits reach at most p + p^2 + ... in absolute value
        if abs(rest) > p * (p ** (f - i) - 1) // (p - 1):
            return
        d = rest % p
        choices = (d, d - p) if d else (p, -p)
        for t in choices:
            if magnitudes is not None and abs(t) != magnitudes[i]:
                continue
            out.append(t)
            yield from walk((rest - t) // p, i + 1)
            out.pop()

    yield from walk(target, 0)


def _h_residue(p: int, f: int, h: Union[int, Sequence[int], Residue]) -> Residue:
    q2m1 = Modulus(p, f, ModulusKind.Q2M1)
    if isinstance(h, Residue):
        return h if h.modulus == q2m1 else make_residue(h.value, q2m1)
    return residue_of(h, q2m1)


def _signed_solutions(p: int, f: int, h: Residue, magnitudes: Optional[Sequence[int]] = None) -> Iterator[SignedDigits]:
    q = p ** f
    bound = p * (q - 1) // (p - 1)
    base = h.value % (q + 1)
    k_low = -((bound + base) // (q + 1))
    k_high = (bound - base) // (q + 1)
    for k in range(k_low, k_high + 1):
        yield from _signed_expansions(base + k * (q + 1), p, f, magnitudes)


def exponent_of_solution(h: Residue, signed: SignedDigits) -> Residue:
    """s = (h - sum(t_i p^i)) / (q+1) - sum(eps_i (1 + r_i) p^i) mod q-1."""
    m = h.modulus
    qm1 = Modulus(m.p, m.f, ModulusKind.QM1)
    total = sum(t * m.p ** i for i, t in enumerate(signed))
    negative = sum(-t * m.p ** i for i, t in enumerate(signed) if t < 0)
    quotient = exact_div_qp1(res_sub(h, make_residue(total, m)))
    return res_sub(quotient, make_residue(negative, qm1))


def weights_of_rep_with_witness(p: int, f: int, h: Union[int, Sequence[int], Residue]) -> List[WeightWitness]:
    """One witness per solution (epsilon, r); r = (p-1, ..., p-1) solutions are dropped."""
    check_parameters(p, f)
    h_res = _h_residue(p, f, h)
    witnesses = []
    discarded = 0
    for signed in _signed_solutions(p, f, h_res):
        r = tuple(abs(t) - 1 for t in signed)
        if all(x == p - 1 for x in r):
            discarded += 1
            continue
        eps = tuple(int(t < 0) for t in signed)
        witnesses.append(WeightWitness(SerreWeight(exponent_of_solution(h_res, signed), r), epsilon=eps))
    if discarded:
        logger.debug("Discarded %d solution(s) with r = (p-1, ..., p-1) for h = %d", discarded, h_res.value)
    return witnesses


def weights_of_rep(p: int, f: int, h: Union[int, Sequence[int], Residue]) -> List[SerreWeight]:
    """D(rhobar) for h mod q^2-1, sorted."""
    weights = sorted({w.weight for w in weights_of_rep_with_witness(p, f, h)})
    logger.debug("D(rhobar) has %d weights", len(weights))
    return weights


def weights_of_rep_brute_force(p: int, f: int, h: Union[int, Sequence[int], Residue]) -> List[SerreWeight]:
    """D(rhobar) by scanning all 2^f p^f candidates (eps, r)."""
    check_parameters(p, f)
    h_res = _h_residue(p, f, h)
    q = p ** f
    found = set()
    for eps in itertools.product((0, 1), repeat=f):
        for r in itertools.product(range(p), repeat=f):
            if all(x == p - 1 for x in r):
                continue
            signed = tuple((-1 if e else 1) * (1 + x) for e, x in zip(eps, r))
            if (h_res.value - sum(t * p ** i for i, t in enumerate(signed))) % (q + 1):
                continue
            found.add(SerreWeight(exponent_of_solution(h_res, signed), r))
    return sorted(found)


def recover_epsilon(t: CoherentTriple, weight: SerreWeight) -> Tuple[int, ...]:
    """
    Signs eps exhibiting weight as an element of D(rhobar).

    Raises:
        NotAWeight: if weight is not in D(rhobar)
    """
    magnitudes = [x + 1 for x in weight.r]
    for signed in _signed_solutions(t.p, t.f, t.h, magnitudes):
        if exponent_of_solution(t.h, signed) == weight.s:
            return tuple(int(x < 0) for x in signed)
    raise NotAWeight(f"{weight} is not a weight of the representation", {"h": t.h.value})
