"""
Serre weights of active sequences

An active compatible sequence sigma determines a Serre weight column by
column: in the pair (sigma_i, sigma_{i+f}) one entry is 0 or p and the other
gives r_{f-1-i}; eps_{f-1-i} is 0 exactly when sigma_i < sigma_{i+f}. The
exponent then follows the representation side formula. Conversely every
common weight comes from the sequence built out of its two sign vectors.
"""

import logging
from typing import Optional, Sequence, Tuple

from src.arithmetic import CoherentTriple, exact_div_qp1, make_residue, res_sub
from src.core.exceptions import NonIntegralS, NotDivisibleByQPlusOne
from src.enriched import PeriodicIntSequence, is_active, is_compatible

from .models import SerreWeight
from .representation import recover_epsilon
from .type_weights import recover_epsilon_prime


logger = logging.getLogger(__name__)


def _column_parameters(x: int, y: int, p: int) -> Tuple[int, int]:
    """(r, eps) of one active column pair."""
    if y == 0:
        r = x - 1
    elif y == p:
        r = p - 1 - x
    elif x == 0:
        r = y - 1
    else:
        r = p - 1 - y
    return r, 0 if x < y else 1


def serre_of_sigma(t: CoherentTriple, sigma: Sequence[int]) -> SerreWeight:
    """
    The Serre weight of an active, compatible sequence.

    Raises:
        NonIntegralS: if sigma is not active and compatible
    """
    p, f = t.p, t.f
    if len(sigma) != 2 * f or not is_active(sigma, p):
        raise NonIntegralS("the sequence is not active", {"sigma": list(sigma)})
    r = [0] * f
    eps = [0] * f
    for i in range(f):
        r[f - 1 - i], eps[f - 1 - i] = _column_parameters(sigma[i], sigma[i + f], p)
    signed = sum((-1) ** e * (1 + x) * p ** i for i, (x, e) in enumerate(zip(r, eps)))
    negative = sum(e * (1 + x) * p ** i for i, (x, e) in enumerate(zip(r, eps)))
    try:
        quotient = exact_div_qp1(res_sub(t.h, make_residue(signed, t.q2m1)))
    except NotDivisibleByQPlusOne as exc:
        raise NonIntegralS("the exponent is not integral; the sequence is not compatible", {"sigma": list(sigma)}) from exc
    s = res_sub(quotient, make_residue(negative, t.qm1))
    return SerreWeight(s, tuple(r))


def epsilon_prime_of_sigma(sigma: Sequence[int], p: int) -> Tuple[int, ...]:
    """
    The type-side signs read off an active sequence.

    A column pair other than {0, p} holds 0 (eps' = 0) or p (eps' = 1); a
    {0, p} pair copies the previous sign. If every pair is {0, p} all signs
    are 1.
    """
    f = len(sigma) // 2
    eps: list = [None] * f
    for i in range(f):
        pair = {sigma[i], sigma[i + f]}
        if pair != {0, p}:
            eps[f - 1 - i] = 0 if 0 in pair else 1
    if all(e is None for e in eps):
        return (1,) * f
    # eps'_{f-1-i} = eps'_{f-2-i}: fill each gap from the next lower index, cyclically
    while any(e is None for e in eps):
        for j in range(f):
            if eps[j] is None and eps[j - 1] is not None:
                eps[j] = eps[j - 1]
    return tuple(eps)


def sigma_of_serre_weight(
    t: CoherentTriple,
    weight: SerreWeight,
    epsilon: Optional[Sequence[int]] = None,
    epsilon_prime: Optional[Sequence[int]] = None,
) -> PeriodicIntSequence:
    """
    An active compatible sequence mapping to a common weight.

    sigma_i = eps_{f-1-i} (1 + r_{f-1-i}) + eps'_{f-1-i} (p - 1 - r_{f-1-i}),
    continued to the second half by eps_{j+f} = 1 - eps_j and eps'_{j+f} = eps'_j.
    Missing sign vectors are recovered from the triple.
    """
    p, f = t.p, t.f
    if epsilon is None:
        epsilon = recover_epsilon(t, weight)
    if epsilon_prime is None:
        epsilon_prime = recover_epsilon_prime(t, weight)
    values = []
    for i in range(2 * f):
        j = (f - 1 - i) % (2 * f)
        k = j % f
        e = epsilon[k] if j < f else 1 - epsilon[k]
        r = weight.r[k]
        values.append(e * (1 + r) + epsilon_prime[k] * (p - 1 - r))
    sigma = PeriodicIntSequence(values)
    if not (is_active(sigma, p) and is_compatible(sigma, t)):
        raise NonIntegralS("sign vectors do not give an active compatible sequence", {"sigma": values})
    return sigma
