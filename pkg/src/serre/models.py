"""
Serre weight parameters

A Serre weight is the pair (s, r): s a residue mod q-1 and r_0, ..., r_{f-1}
in [0, p-1], not all equal to p-1. It is displayed as
"Sym^[r_0,...,r_{f-1}] ⊗ det^s" with s canonical in [0, q-2].
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Sequence, Tuple

from src.arithmetic import Modulus, ModulusKind, Residue, make_residue
from src.core.exceptions import InvalidParameters


@total_ordering
@dataclass(frozen=True)
class SerreWeight:
    s: Residue
    r: Tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.s.modulus
        if m.kind != ModulusKind.QM1:
            raise InvalidParameters("s is a residue mod q-1", {"modulus": str(m)})
        if len(self.r) != m.f:
            raise InvalidParameters(f"r needs {m.f} entries", {"r": list(self.r)})
        if any(not 0 <= x <= m.p - 1 for x in self.r):
            raise InvalidParameters("r entries lie in [0, p-1]", {"r": list(self.r)})
        if all(x == m.p - 1 for x in self.r):
            raise InvalidParameters("r = (p-1, ..., p-1) is not a Serre weight", {"r": list(self.r)})

    @property
    def p(self) -> int:
        return self.s.modulus.p

    @property
    def f(self) -> int:
        return self.s.modulus.f

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.s.value, self.r

    def __lt__(self, other: "SerreWeight") -> bool:
        return self.sort_key() < other.sort_key()

    def as_dict(self) -> dict:
        return {"s": self.s.value, "r": list(self.r)}

    def __str__(self) -> str:
        return render_serre_weight(self)


def make_serre_weight(p: int, f: int, s: int, r: Sequence[int]) -> SerreWeight:
    """Reduce s mod q-1 and build the weight."""
    return SerreWeight(make_residue(s, Modulus(p, f, ModulusKind.QM1)), tuple(int(x) for x in r))


def render_serre_weight(weight: SerreWeight) -> str:
    return "Sym^[" + ",".join(str(x) for x in weight.r) + f"] ⊗ det^{weight.s.value}"


@dataclass(frozen=True)
class WeightWitness:
    """A Serre weight with the sign choices that produced it."""

    weight: SerreWeight
    epsilon: Optional[Tuple[int, ...]] = None
    epsilon_prime: Optional[Tuple[int, ...]] = None
