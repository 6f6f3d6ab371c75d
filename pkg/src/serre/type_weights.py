"""
Weights of the type

Every choice of eps' in {0,1}^f gives r through a four-entry table in the
c-digits of the type (eps'_{-1} read as eps'_{f-1}); the choice fails when
some r_i leaves [0, p-1]. The exponent is

    s = gamma' + sum(eps'_i (p-1-r_i) p^i)  mod q-1.

Two tables are available (see CalibrationConfig); the printed one is the
default and the only one for which the halved form

    s = gamma' + (eps'_{f-1} (q-1) + sum((c_i - r_i) p^i)) / 2

agrees, which is checked on every weight.
"""

import itertools
import logging
from typing import List, Optional, Sequence, Tuple, Union

from src.arithmetic import (
    CoherentTriple,
    Modulus,
    ModulusKind,
    Residue,
    check_parameters,
    make_residue,
    res_add,
    residue_of,
    type_digits,
)
from src.config import CalibrationConfig, TableVariant, get_config
from src.core.exceptions import ConventionError, NotAWeight

from .models import SerreWeight, WeightWitness


logger = logging.getLogger(__name__)


def table_entry(c: int, eps: int, eps_prev: int, p: int, variant: TableVariant = TableVariant.PRINTED) -> int:
    """r_i from c_i, eps'_i and eps'_{i-1}."""
    if variant == TableVariant.RECONCILED:
        return c + eps_prev if eps == 0 else p - 2 - c - eps_prev
    return c - eps_prev if eps == 0 else p - 2 - c + eps_prev


def r_of_epsilon_prime(
    c: Sequence[int], eps: Sequence[int], p: int, variant: TableVariant = TableVariant.PRINTED
) -> Optional[Tuple[int, ...]]:
    """r for one eps', or None when the table leaves [0, p-1]."""
    f = len(c)
    r = tuple(table_entry(c[i], eps[i], eps[i - 1], p, variant) for i in range(f))
    if any(not 0 <= x <= p - 1 for x in r):
        return None
    return r


def exponent_of_epsilon_prime(gamma_prime: Residue, r: Sequence[int], eps: Sequence[int]) -> Residue:
    p = gamma_prime.modulus.p
    total = sum(e * (p - 1 - x) * p ** i for i, (x, e) in enumerate(zip(r, eps)))
    return res_add(gamma_prime, make_residue(total, gamma_prime.modulus))


def halved_exponent(gamma_prime: Residue, c: Sequence[int], r: Sequence[int], eps_last: int) -> Residue:
    """gamma' + (eps'_{f-1}(q-1) + sum((c_i - r_i) p^i)) / 2, halving the exact numerator."""
    m = gamma_prime.modulus
    numerator = eps_last * (m.q - 1) + sum((ci - ri) * m.p ** i for i, (ci, ri) in enumerate(zip(c, r)))
    if numerator % 2:
        raise ConventionError("odd numerator in the halved exponent", {"numerator": numerator})
    return res_add(gamma_prime, make_residue(numerator // 2, m))


def _type_residues(p: int, f: int, gamma, gamma_prime) -> Tuple[Residue, Residue]:
    qm1 = Modulus(p, f, ModulusKind.QM1)

    def coerce(x) -> Residue:
        if isinstance(x, Residue):
            return x if x.modulus == qm1 else make_residue(x.value, qm1)
        return residue_of(x, qm1)

    return coerce(gamma), coerce(gamma_prime)


def weights_of_type_with_witness(
    p: int,
    f: int,
    gamma: Union[int, Sequence[int], Residue],
    gamma_prime: Union[int, Sequence[int], Residue],
    calibration: Optional[CalibrationConfig] = None,
) -> List[WeightWitness]:
    """One witness per successful eps'."""
    check_parameters(p, f)
    calibration = calibration or get_config().calibration
    g, gp = _type_residues(p, f, gamma, gamma_prime)
    c = type_digits(g, gp, calibration.c_sign)
    witnesses = []
    for eps in itertools.product((0, 1), repeat=f):
        r = r_of_epsilon_prime(c, eps, p, calibration.table_variant)
        if r is None or all(x == p - 1 for x in r):
            continue
        s = exponent_of_epsilon_prime(gp, r, eps)
        if calibration.table_variant == TableVariant.PRINTED:
            halved = halved_exponent(gp, c, r, eps[-1])
            if halved != s:
                raise ConventionError(
                    "the two exponent formulas disagree",
                    {"r": list(r), "eps_prime": list(eps), "s": s.value, "halved": halved.value},
                )
        witnesses.append(WeightWitness(SerreWeight(s, r), epsilon_prime=eps))
    return witnesses


def weights_of_type(
    p: int,
    f: int,
    gamma: Union[int, Sequence[int], Residue],
    gamma_prime: Union[int, Sequence[int], Residue],
    calibration: Optional[CalibrationConfig] = None,
) -> List[SerreWeight]:
    """D(t) for t = omega^gamma + omega^gamma', sorted."""
    weights = sorted({w.weight for w in weights_of_type_with_witness(p, f, gamma, gamma_prime, calibration)})
    logger.debug("D(t) has %d weights", len(weights))
    return weights


def recover_epsilon_prime(
    t: CoherentTriple, weight: SerreWeight, calibration: Optional[CalibrationConfig] = None
) -> Tuple[int, ...]:
    """
    The unique eps' producing weight from the type of t.

    The table is never ambiguous for odd p, so eps' propagates from a guess
    of eps'_{f-1}; the guess survives when it closes up and gives s.

    Raises:
        NotAWeight: if weight is not in D(t)
    """
    calibration = calibration or get_config().calibration
    p, f = t.p, t.f
    c = type_digits(t.gamma, t.gamma_prime, calibration.c_sign)
    for last in (0, 1):
        eps: List[int] = []
        prev = last
        for i in range(f):
            nxt = next(
                (e for e in (0, 1) if table_entry(c[i], e, prev, p, calibration.table_variant) == weight.r[i]),
                None,
            )
            if nxt is None:
                break
            eps.append(nxt)
            prev = nxt
        if len(eps) == f and eps[-1] == last:
            if exponent_of_epsilon_prime(t.gamma_prime, weight.r, eps) == weight.s:
                return tuple(eps)
    raise NotAWeight(f"{weight} is not a weight of the type", {"gamma": t.gamma.value, "gamma_prime": t.gamma_prime.value})
