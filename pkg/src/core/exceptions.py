"""
Exception hierarchy for the Serre weight toolkit.

Every error raised on purpose by the library derives from SerreWeightsError,
which carries a short message plus a details dict for diagnostics (the CLI
prints the message and logs the details).
"""

from typing import Any, Dict, Optional


class SerreWeightsError(Exception):
    """Base exception for all library errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)


# Arithmetic

class InvalidParameters(SerreWeightsError):
    """p is not an odd prime, or f < 2."""


class InvalidDigits(SerreWeightsError):
    """A digit lies outside [0, p-1] or a digit vector has the wrong width."""


class ModulusMismatch(SerreWeightsError):
    """Two residues (or a digit vector and a modulus) do not share a modulus."""


class UnsupportedModulusKind(SerreWeightsError):
    """The operation has no meaning for this kind of modulus."""


class NotDivisibleByQPlusOne(SerreWeightsError):
    """An exact division by q+1 was requested on a non-multiple."""


# Coherent triples

class DivisibleByQPlusOne(SerreWeightsError):
    """h is divisible by q+1: the representation is not absolutely irreducible."""


class DeterminantMismatch(SerreWeightsError):
    """h and gamma + gamma' + (q-1)/(p-1) disagree modulo q-1."""


# Genes

class InvalidGene(SerreWeightsError):
    """A word over {A, B, AB, O} breaks one of the gene conditions."""


class ABNotFollowedByO(InvalidGene):
    """Some X_i = AB has X_{i+1} != O."""


class OIllegallyPreceded(InvalidGene):
    """Some X_i = O has X_{i-1} not in {AB, O}."""


class ConditionThreeFails(InvalidGene):
    """No O anywhere and X_i = X_{i+f} for every i."""


class InvalidFragment(SerreWeightsError):
    """A column list is not a fragment."""


class DegenerateGene(SerreWeightsError):
    """The operation needs a gene containing the letter O."""


class NotViable(SerreWeightsError):
    """The gene has a column (O, O)."""


class CircularDominance(SerreWeightsError):
    """The dominance tie chase went all the way around."""


class SamplerFailure(SerreWeightsError):
    """A Las Vegas draw was rejected; retrying may succeed."""


class UnsupportedPrime(SerreWeightsError):
    """The sampler needs p >= 5."""


# Serre weights

class NotAWeight(SerreWeightsError):
    """The bit word is not a combinatorial weight of the gene."""


class ConventionError(SerreWeightsError):
    """Two evaluation paths for the same Serre weight disagree."""


class NonIntegralS(SerreWeightsError):
    """The exponent s is not integral: the sequence is not active and compatible."""


# Kisin varieties

class NotACross(SerreWeightsError):
    """The fragment has no cross at the requested column."""


# Internal consistency

class InvariantViolation(SerreWeightsError):
    """A table or counting invariant failed while invariant checks were enabled."""
