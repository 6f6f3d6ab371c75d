"""
Shared plumbing: the exception hierarchy and logging setup.
"""

from .exceptions import (
    SerreWeightsError,
    InvalidParameters,
    InvalidDigits,
    ModulusMismatch,
    UnsupportedModulusKind,
    NotDivisibleByQPlusOne,
    DivisibleByQPlusOne,
    DeterminantMismatch,
    InvalidGene,
    ABNotFollowedByO,
    OIllegallyPreceded,
    ConditionThreeFails,
    InvalidFragment,
    DegenerateGene,
    NotViable,
    CircularDominance,
    SamplerFailure,
    UnsupportedPrime,
    NotAWeight,
    ConventionError,
    NonIntegralS,
    NotACross,
    InvariantViolation,
)
from .logging_setup import setup_logging

__all__ = [
    "SerreWeightsError",
    "InvalidParameters",
    "InvalidDigits",
    "ModulusMismatch",
    "UnsupportedModulusKind",
    "NotDivisibleByQPlusOne",
    "DivisibleByQPlusOne",
    "DeterminantMismatch",
    "InvalidGene",
    "ABNotFollowedByO",
    "OIllegallyPreceded",
    "ConditionThreeFails",
    "InvalidFragment",
    "DegenerateGene",
    "NotViable",
    "CircularDominance",
    "SamplerFailure",
    "UnsupportedPrime",
    "NotAWeight",
    "ConventionError",
    "NonIntegralS",
    "NotACross",
    "InvariantViolation",
    "setup_logging",
]
