"""
Base-p residue arithmetic

Residues modulo q-1, q+1 and q^2-1 (q = p^f). The q-1 and q^2-1 residues carry
a fixed-width big-endian digit vector: modulo p^n - 1 addition is a digit
addition with end-around carry, negation is digit complement and
multiplication by p^k is a rotation. Values and digits are converted lazily, so
a residue built from digits never pays for a decimal conversion unless asked.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from src.core.exceptions import (
    InvalidDigits,
    InvalidParameters,
    ModulusMismatch,
    NotDivisibleByQPlusOne,
    UnsupportedModulusKind,
)


class ModulusKind(str, Enum):
    """The three moduli attached to (p, f)."""
    QM1 = "q-1"
    QP1 = "q+1"
    Q2M1 = "q^2-1"


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def check_parameters(p: int, f: int) -> None:
    """Raise InvalidParameters unless p is an odd prime and f >= 2."""
    if not isinstance(p, int) or not is_prime(p) or p == 2:
        raise InvalidParameters(f"p must be an odd prime, got {p}", {"p": p})
    if not isinstance(f, int) or f < 2:
        raise InvalidParameters(f"f must be an integer >= 2, got {f}", {"f": f})


@dataclass(frozen=True)
class Modulus:
    """One of q-1, q+1, q^2-1 for q = p^f."""

    p: int
    f: int
    kind: ModulusKind

    def __post_init__(self) -> None:
        check_parameters(self.p, self.f)

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def value(self) -> int:
        q = self.q
        if self.kind == ModulusKind.QM1:
            return q - 1
        if self.kind == ModulusKind.QP1:
            return q + 1
        return q * q - 1

    @property
    def width(self) -> int:
        """Number of base-p digits of a canonical representative."""
        if self.kind == ModulusKind.QM1:
            return self.f
        if self.kind == ModulusKind.Q2M1:
            return 2 * self.f
        raise UnsupportedModulusKind("q+1 residues have no digit law", {"modulus": self.kind.value})

    @property
    def has_digit_law(self) -> bool:
        return self.kind != ModulusKind.QP1

    def __str__(self) -> str:
        return f"{self.kind.value} (p={self.p}, f={self.f})"


@dataclass(frozen=True)
class DigitVector:
    """
    Base-p digits d_0, ..., d_{k-1}, big-endian: d_i multiplies p^(k-1-i).
    """

    p: int
    digits: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        for d in self.digits:
            if not 0 <= d < self.p:
                raise InvalidDigits(f"digit {d} outside [0, {self.p - 1}]", {"digits": list(self.digits)})

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    @property
    def value(self) -> int:
        return _digits_to_int(self.digits, self.p)

    @classmethod
    def of_int(cls, p: int, n: int, width: int) -> "DigitVector":
        return cls(p, _int_to_digits(n, p, width))


def _digits_to_int(digits: Sequence[int], p: int) -> int:
    if not digits:
        return 0
    if p <= 10:
        return int("".join(map(str, digits)), p)
    n = 0
    for d in digits:
        n = n * p + d
    return n


def _int_to_digits(n: int, p: int, width: int) -> Tuple[int, ...]:
    """Big-endian digits of 0 <= n < p^width, split recursively for wide inputs."""
    if n < 0:
        raise InvalidDigits(f"cannot expand negative integer {n}")
    if width <= 64:
        out = [0] * width
        for i in range(width - 1, -1, -1):
            n, out[i] = divmod(n, p)
        if n:
            raise InvalidDigits(f"integer does not fit in {width} base-{p} digits")
        return tuple(out)
    low_width = width // 2
    high, low = divmod(n, p ** low_width)
    return _int_to_digits(high, p, width - low_width) + _int_to_digits(low, p, low_width)


class Residue:
    """
    A canonical residue 0 <= value < modulus.

    For q-1 and q^2-1 the digit vector is the canonical one (never all p-1).
    Either representation may be absent until first requested.
    """

    __slots__ = ("modulus", "_value", "_digits")

    def __init__(self, modulus: Modulus, value: Optional[int] = None, digits: Optional[Tuple[int, ...]] = None):
        if value is None and digits is None:
            raise InvalidDigits("a residue needs a value or digits")
        self.modulus = modulus
        self._value = value
        self._digits = digits
        if value is not None and not 0 <= value < modulus.value:
            raise InvalidDigits(
                f"value {value} is not canonical modulo {modulus.value}",
                {"value": value, "modulus": modulus.value},
            )

    @classmethod
    def from_digits(cls, modulus: Modulus, digits: Sequence[int]) -> "Residue":
        """Build from exactly `modulus.width` digits; all p-1 reads as zero."""
        digits = tuple(digits)
        if len(digits) != modulus.width:
            raise InvalidDigits(
                f"expected {modulus.width} digits, got {len(digits)}",
                {"digits": list(digits)},
            )
        p = modulus.p
        if any(not 0 <= d < p for d in digits):
            raise InvalidDigits(f"digit outside [0, {p - 1}]", {"digits": list(digits)})
        if all(d == p - 1 for d in digits):
            digits = (0,) * len(digits)
        return cls(modulus, digits=digits)

    @property
    def value(self) -> int:
        if self._value is None:
            self._value = _digits_to_int(self._digits, self.modulus.p)
        return self._value

    @property
    def digits(self) -> Tuple[int, ...]:
        if self._digits is None:
            self._digits = _int_to_digits(self.value, self.modulus.p, self.modulus.width)
        return self._digits

    @property
    def has_digits(self) -> bool:
        return self._digits is not None

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Residue):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        if self._digits is not None and other._digits is not None:
            return self._digits == other._digits
        return self.value == other.value

    def __hash__(self) -> int:
        return hash((self.modulus, self.value))

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.modulus.value})"


def make_residue(value: int, modulus: Modulus) -> Residue:
    """Reduce any integer to its canonical residue."""
    return Residue(modulus, value=value % modulus.value)


def digits_to_residue(d: DigitVector, m: Modulus) -> Residue:
    """Reduce the integer carried by `d` modulo `m`."""
    if d.p != m.p:
        raise ModulusMismatch(f"digit vector is base {d.p}, modulus is base {m.p}", {"digit_p": d.p, "modulus_p": m.p})
    if m.has_digit_law and len(d) == m.width:
        return Residue.from_digits(m, d.digits)
    return make_residue(d.value, m)


def residue_digits(x: Residue) -> DigitVector:
    """Canonical digit vector of a q-1 or q^2-1 residue (width f or 2f)."""
    return DigitVector(x.modulus.p, x.digits)


def _require_same(a: Residue, b: Residue) -> None:
    if a.modulus != b.modulus:
        raise ModulusMismatch(
            f"residues live modulo {a.modulus} and {b.modulus}",
            {"left": str(a.modulus), "right": str(b.modulus)},
        )


def _add_digits_end_around(x: Sequence[int], y: Sequence[int], p: int) -> Tuple[int, ...]:
    """Sum modulo p^n - 1 of two big-endian digit vectors of width n."""
    n = len(x)
    out = [0] * n
    carry = 0
    for i in range(n - 1, -1, -1):
        carry, out[i] = divmod(x[i] + y[i] + carry, p)
    # p^n == 1: the outgoing carry re-enters at the bottom; it cannot overflow twice
    i = n - 1
    while carry and i >= 0:
        carry, out[i] = divmod(out[i] + carry, p)
        i -= 1
    if all(d == p - 1 for d in out):
        return (0,) * n
    return tuple(out)


def res_add(a: Residue, b: Residue) -> Residue:
    _require_same(a, b)
    m = a.modulus
    if m.has_digit_law and a.has_digits and b.has_digits:
        return Residue(m, digits=_add_digits_end_around(a.digits, b.digits, m.p))
    return make_residue(a.value + b.value, m)


def res_neg(a: Residue) -> Residue:
    m = a.modulus
    if m.has_digit_law and a.has_digits:
        p = m.p
        complement = tuple(p - 1 - d for d in a.digits)
        return Residue.from_digits(m, complement)
    return make_residue(-a.value, m)


def res_sub(a: Residue, b: Residue) -> Residue:
    return res_add(a, res_neg(b))


def res_mul_pk(a: Residue, k: int) -> Residue:
    """a * p^k, as a left rotation of the f- or 2f-digit representation."""
    m = a.modulus
    if not m.has_digit_law:
        raise UnsupportedModulusKind("multiplication by p^k has no rotation law modulo q+1", {"k": k})
    digits = a.digits
    k %= len(digits)
    return Residue(m, digits=digits[k:] + digits[:k])


def exact_div_qp1(a: Residue) -> Residue:
    """(a / (q+1)) mod (q-1) for a residue mod q^2-1 divisible by q+1."""
    m = a.modulus
    if m.kind != ModulusKind.Q2M1:
        raise UnsupportedModulusKind("exact division by q+1 takes a residue mod q^2-1", {"modulus": m.kind.value})
    qm1 = Modulus(m.p, m.f, ModulusKind.QM1)
    if a.has_digits:
        # a = hi*q + lo with hi, lo < q; divisible iff hi == lo, and then a/(q+1) == lo
        f = m.f
        hi, lo = a.digits[:f], a.digits[f:]
        if hi != lo:
            raise NotDivisibleByQPlusOne(f"{a} is not divisible by q+1", {"value": a.value})
        return Residue.from_digits(qm1, lo)
    quotient, remainder = divmod(a.value, m.q + 1)
    if remainder:
        raise NotDivisibleByQPlusOne(f"{a} is not divisible by q+1", {"value": a.value})
    return make_residue(quotient, qm1)


def fold_to_qm1(a: Residue) -> Residue:
    """Reduce a residue mod q^2-1 to its class mod q-1 (sum of the two halves)."""
    m = a.modulus
    if m.kind != ModulusKind.Q2M1:
        raise UnsupportedModulusKind("only residues mod q^2-1 fold", {"modulus": m.kind.value})
    qm1 = Modulus(m.p, m.f, ModulusKind.QM1)
    f = m.f
    return res_add(Residue.from_digits(qm1, a.digits[:f]), Residue.from_digits(qm1, a.digits[f:]))


def residue_of(value: "int | Iterable[int]", modulus: Modulus) -> Residue:
    """Accept a decimal integer or a big-endian digit list."""
    if isinstance(value, int):
        return make_residue(value, modulus)
    digits = tuple(int(d) for d in value)
    dv = DigitVector(modulus.p, digits)
    return digits_to_residue(dv, modulus)
