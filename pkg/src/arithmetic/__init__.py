"""
Arithmetic package.

Base-p residues modulo q-1, q+1, q^2-1 and the coherent triples built on them.
"""

from .basep import (
    DigitVector,
    Modulus,
    ModulusKind,
    Residue,
    check_parameters,
    digits_to_residue,
    exact_div_qp1,
    fold_to_qm1,
    is_prime,
    make_residue,
    res_add,
    res_mul_pk,
    res_neg,
    res_sub,
    residue_digits,
    residue_of,
)
from .triple import (
    CoherentTriple,
    CSequence,
    VSequence,
    c_sequence,
    make_triple,
    reconstruct_h,
    triple_from_v,
    type_digits,
    v_sequence,
)

__all__ = [
    "DigitVector",
    "Modulus",
    "ModulusKind",
    "Residue",
    "check_parameters",
    "digits_to_residue",
    "exact_div_qp1",
    "fold_to_qm1",
    "is_prime",
    "make_residue",
    "res_add",
    "res_mul_pk",
    "res_neg",
    "res_sub",
    "residue_digits",
    "residue_of",
    "CoherentTriple",
    "CSequence",
    "VSequence",
    "c_sequence",
    "make_triple",
    "reconstruct_h",
    "triple_from_v",
    "type_digits",
    "v_sequence",
]
