"""
Coherent triples

A coherent triple (h, gamma, gamma') packs the restriction to inertia of an
irreducible two-dimensional mod p representation (h mod q^2-1) together with a
tame type (gamma, gamma' mod q-1). Everything downstream is driven by the two
digit sequences derived here: v (2f digits of h - (q+1) gamma') and c (f digits
of a difference of the type exponents).
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from src.config import CalibrationConfig, CSign, get_config
from src.core.exceptions import (
    DeterminantMismatch,
    DivisibleByQPlusOne,
    InvalidDigits,
    NotDivisibleByQPlusOne,
)

from .basep import (
    Modulus,
    ModulusKind,
    Residue,
    exact_div_qp1,
    fold_to_qm1,
    make_residue,
    res_add,
    res_mul_pk,
    res_sub,
    residue_of,
)


logger = logging.getLogger(__name__)

IntOrDigits = Union[int, Sequence[int]]


class VSequence(tuple):
    """v_0, ..., v_{2f-1}; v_i multiplies p^(2f-1-i). Read 2f-periodically with `at`."""

    def at(self, i: int) -> int:
        return self[i % len(self)]


class CSequence(tuple):
    """c_0, ..., c_{f-1}, low digit first (c_i multiplies p^i)."""

    def at(self, i: int) -> int:
        return self[i % len(self)]


@dataclass(frozen=True)
class CoherentTriple:
    """Parameters (p, f, h, gamma, gamma') with (q+1) not dividing h and the determinant congruence."""

    p: int
    f: int
    h: Residue
    gamma: Residue
    gamma_prime: Residue

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def qm1(self) -> Modulus:
        return self.gamma.modulus

    @property
    def q2m1(self) -> Modulus:
        return self.h.modulus

    def swapped(self) -> "CoherentTriple":
        """Same type with gamma and gamma' exchanged."""
        return make_triple(self.p, self.f, self.h, self.gamma_prime, self.gamma)

    def conjugate(self) -> "CoherentTriple":
        """h replaced by q*h; same representation, distinct input."""
        return make_triple(self.p, self.f, res_mul_pk(self.h, self.f), self.gamma, self.gamma_prime)

    def render(self) -> str:
        return (
            f"(Ind(ω_{2 * self.f}^{self.h.value}), "
            f"ω_{self.f}^{self.gamma.value} ⊕ ω_{self.f}^{self.gamma_prime.value})"
        )

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "h": self.h.value,
            "gamma": self.gamma.value,
            "gamma_prime": self.gamma_prime.value,
        }

    def __str__(self) -> str:
        return self.render()


def _coerce(value: Union[IntOrDigits, Residue], modulus: Modulus) -> Residue:
    if isinstance(value, Residue):
        if value.modulus != modulus:
            return make_residue(value.value, modulus)
        return value
    return residue_of(value, modulus)


def _units_repunit(modulus: Modulus) -> Residue:
    """(q-1)/(p-1), whose base-p digits are all 1."""
    return Residue.from_digits(modulus, (1,) * modulus.f)


def make_triple(
    p: int,
    f: int,
    h: Union[IntOrDigits, Residue],
    gamma: Union[IntOrDigits, Residue],
    gamma_prime: Union[IntOrDigits, Residue],
) -> CoherentTriple:
    """
    Validate and build a coherent triple.

    Integers are reduced to canonical residues; digit lists are read
    big-endian and must have width 2f (h) or f (gamma, gamma').

    Raises:
        DivisibleByQPlusOne: if (q+1) divides h
        DeterminantMismatch: if h != gamma + gamma' + (q-1)/(p-1) mod q-1
    """
    q2m1 = Modulus(p, f, ModulusKind.Q2M1)
    qm1 = Modulus(p, f, ModulusKind.QM1)

    h_res = _coerce(h, q2m1)
    g_res = _coerce(gamma, qm1)
    gp_res = _coerce(gamma_prime, qm1)

    try:
        exact_div_qp1(h_res)
    except NotDivisibleByQPlusOne:
        pass
    else:
        raise DivisibleByQPlusOne(
            f"h = {h_res.value} is divisible by q+1 = {q2m1.q + 1}",
            {"h": h_res.value, "p": p, "f": f},
        )

    # only digit operations, so digit inputs never pay for a decimal conversion
    expected = res_add(res_add(g_res, gp_res), _units_repunit(qm1))
    if fold_to_qm1(h_res) != expected:
        raise DeterminantMismatch(
            "h is not congruent to gamma + gamma' + (q-1)/(p-1) modulo q-1",
            {"h": h_res.value, "gamma": g_res.value, "gamma_prime": gp_res.value},
        )

    triple = CoherentTriple(p=p, f=f, h=h_res, gamma=g_res, gamma_prime=gp_res)
    logger.debug("Validated coherent triple p=%d f=%d", p, f)
    return triple


def _qp1_multiple(gamma_prime: Residue, q2m1: Modulus) -> Residue:
    """(q+1)*gamma' mod q^2-1: the f digits of gamma' written twice."""
    d = gamma_prime.digits
    return Residue.from_digits(q2m1, d + d)


def v_sequence(t: CoherentTriple) -> VSequence:
    """Digits of (h - (q+1) gamma') mod (q^2-1) over 2f positions."""
    diff = res_sub(t.h, _qp1_multiple(t.gamma_prime, t.q2m1))
    return VSequence(diff.digits)


def c_sequence(
    t: CoherentTriple,
    sign: Optional[CSign] = None,
    calibration: Optional[CalibrationConfig] = None,
) -> CSequence:
    """
    Low-first base-p digits of a difference of the type exponents mod q-1.

    With no explicit sign the calibrated convention is used.
    """
    return type_digits(t.gamma, t.gamma_prime, sign, calibration)


def type_digits(
    gamma: Residue,
    gamma_prime: Residue,
    sign: Optional[CSign] = None,
    calibration: Optional[CalibrationConfig] = None,
) -> CSequence:
    """c-digits of a type alone (no h needed)."""
    if sign is None:
        sign = (calibration or get_config().calibration).c_sign
    if sign == CSign.GAMMA_PRIME_MINUS_GAMMA:
        diff = res_sub(gamma_prime, gamma)
    else:
        diff = res_sub(gamma, gamma_prime)
    return CSequence(reversed(diff.digits))


def triple_from_v(p: int, f: int, v: Iterable[int], gamma_prime: Union[IntOrDigits, Residue]) -> CoherentTriple:
    """
    The unique coherent triple with the given v-sequence and gamma'.

    h = v + (q+1) gamma' mod q^2-1 and gamma = h - gamma' - (q-1)/(p-1) mod q-1.
    """
    q2m1 = Modulus(p, f, ModulusKind.Q2M1)
    qm1 = Modulus(p, f, ModulusKind.QM1)
    v = tuple(int(x) for x in v)
    if len(v) != 2 * f:
        raise InvalidDigits(f"v needs {2 * f} digits, got {len(v)}", {"v": list(v)})
    gp = _coerce(gamma_prime, qm1)
    v_res = Residue.from_digits(q2m1, v)
    h = res_add(v_res, _qp1_multiple(gp, q2m1))
    gamma = res_sub(res_sub(fold_to_qm1(h), gp), _units_repunit(qm1))
    return make_triple(p, f, h, gamma, gp)


def reconstruct_h(p: int, f: int, v: Sequence[int], gamma_prime: Residue) -> Residue:
    """h from v and gamma' (the inverse of v_sequence)."""
    q2m1 = Modulus(p, f, ModulusKind.Q2M1)
    return res_add(Residue.from_digits(q2m1, tuple(v)), _qp1_multiple(gamma_prime, q2m1))
