"""
Unit tests for base-p residue arithmetic.

Digit laws (end-around carry, complement, rotation) are checked against
plain integer arithmetic.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arithmetic import (
    DigitVector,
    Modulus,
    ModulusKind,
    Residue,
    check_parameters,
    exact_div_qp1,
    fold_to_qm1,
    make_residue,
    res_add,
    res_mul_pk,
    res_neg,
    res_sub,
    residue_of,
)
from src.core.exceptions import (
    InvalidDigits,
    InvalidParameters,
    ModulusMismatch,
    NotDivisibleByQPlusOne,
    UnsupportedModulusKind,
)


QM1 = Modulus(5, 2, ModulusKind.QM1)
Q2M1 = Modulus(5, 2, ModulusKind.Q2M1)


def digit_residue(value: int, modulus: Modulus) -> Residue:
    """A residue that carries digits, so the digit laws are exercised."""
    return Residue.from_digits(modulus, make_residue(value, modulus).digits)


class TestParameters:
    """Test parameter validation and moduli."""

    @pytest.mark.parametrize("p,f", [(4, 2), (2, 3), (9, 2), (5, 1), (5, 0)])
    def test_rejects_bad_parameters(self, p, f):
        """Test that p must be an odd prime and f at least 2."""
        with pytest.raises(InvalidParameters):
            check_parameters(p, f)

    def test_modulus_values(self):
        """Test the three moduli of (5, 2)."""
        assert Modulus(5, 2, ModulusKind.QM1).value == 24
        assert Modulus(5, 2, ModulusKind.QP1).value == 26
        assert Modulus(5, 2, ModulusKind.Q2M1).value == 624
        assert QM1.width == 2
        assert Q2M1.width == 4

    def test_qp1_has_no_width(self):
        """Test that q+1 residues have no digit representation."""
        with pytest.raises(UnsupportedModulusKind):
            Modulus(5, 2, ModulusKind.QP1).width


class TestDigits:
    """Test digit vectors and canonical residues."""

    def test_digit_vector_is_big_endian(self):
        """Test that the first digit is the most significant."""
        assert DigitVector(5, (1, 2)).value == 7
        assert DigitVector.of_int(5, 7, 3).digits == (0, 1, 2)

    def test_digit_out_of_range(self):
        """Test that digits must lie in [0, p-1]."""
        with pytest.raises(InvalidDigits):
            DigitVector(5, (1, 5))

    def test_all_top_digits_read_as_zero(self):
        """Test that p-1, ..., p-1 is the zero residue."""
        assert Residue.from_digits(QM1, (4, 4)).value == 0
        assert Residue.from_digits(QM1, (4, 4)) == make_residue(0, QM1)

    def test_wrong_width(self):
        """Test that from_digits wants exactly the modulus width."""
        with pytest.raises(InvalidDigits):
            Residue.from_digits(QM1, (1, 2, 3))

    def test_non_canonical_value(self):
        """Test that a value outside [0, modulus) is refused."""
        with pytest.raises(InvalidDigits):
            Residue(QM1, value=24)

    def test_residue_of_accepts_both_forms(self):
        """Test decimal and digit inputs."""
        assert residue_of([1, 2], QM1).value == 7
        assert residue_of(-1, QM1).value == 23
        assert residue_of(31, QM1).value == 7


class TestOperations:
    """Test residue operations on small known values."""

    def test_end_around_carry(self):
        """Test that 23 + 2 wraps to 1 modulo 24."""
        total = res_add(digit_residue(23, QM1), digit_residue(2, QM1))
        assert total.digits == (0, 1)
        assert total.value == 1

    def test_negation_is_complement(self):
        """Test that -7 mod 24 is the digit complement of 7."""
        assert res_neg(digit_residue(7, QM1)).digits == (3, 2)
        assert res_neg(digit_residue(7, QM1)).value == 17

    def test_multiplication_is_rotation(self):
        """Test that 7 * 5 = 11 mod 24 by rotating digits."""
        assert res_mul_pk(digit_residue(7, QM1), 1).value == 11
        assert res_mul_pk(digit_residue(7, QM1), 2).value == 7

    def test_mixed_moduli(self):
        """Test that residues of different moduli do not mix."""
        with pytest.raises(ModulusMismatch):
            res_add(make_residue(1, QM1), make_residue(1, Q2M1))

    def test_exact_division(self):
        """Test (26 * 7) / 26 = 7 and a non-multiple."""
        assert exact_div_qp1(digit_residue(182, Q2M1)).value == 7
        assert exact_div_qp1(make_residue(182, Q2M1)).value == 7
        with pytest.raises(NotDivisibleByQPlusOne):
            exact_div_qp1(digit_residue(183, Q2M1))

    def test_fold(self):
        """Test that 183 mod 624 folds to 15 mod 24."""
        assert fold_to_qm1(digit_residue(183, Q2M1)).value == 15


moduli = st.sampled_from([
    Modulus(p, f, kind)
    for p in (3, 5, 7)
    for f in (2, 3, 4)
    for kind in (ModulusKind.QM1, ModulusKind.Q2M1)
])


class TestDigitLaws:
    """Property tests: digit operations agree with integer arithmetic."""

    @given(moduli, st.integers(min_value=0), st.integers(min_value=0))
    def test_add(self, m, a, b):
        a, b = a % m.value, b % m.value
        assert res_add(digit_residue(a, m), digit_residue(b, m)).value == (a + b) % m.value

    @given(moduli, st.integers(min_value=0), st.integers(min_value=0))
    def test_sub(self, m, a, b):
        a, b = a % m.value, b % m.value
        assert res_sub(digit_residue(a, m), digit_residue(b, m)).value == (a - b) % m.value

    @given(moduli, st.integers(min_value=0), st.integers(min_value=0, max_value=20))
    @settings(max_examples=50)
    def test_rotation(self, m, a, k):
        a %= m.value
        assert res_mul_pk(digit_residue(a, m), k).value == (a * m.p ** k) % m.value

    @given(moduli, st.integers(min_value=0))
    def test_digits_round_trip(self, m, a):
        a %= m.value
        r = make_residue(a, m)
        assert Residue.from_digits(m, r.digits).value == a
