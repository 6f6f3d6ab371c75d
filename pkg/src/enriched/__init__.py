"""
Enriched weights package.

Mutations of the v-sequence, activity and compatibility of integer
sequences, active enriched weights (by recursion and by brute force), and
the map down to combinatorial weights.
"""

from .models import EnrichedWeight, FragmentaryEnrichedWeight, NumericalMask, PeriodicIntSequence
from .mutation import (
    chi_of,
    delta,
    enriched_of_chi,
    is_active,
    is_active_pair,
    is_compatible,
    kronecker,
    mutate,
    pack,
    sigma_of,
)
from .enumeration import (
    brute_force_enriched,
    enriched_weights,
    enumerate_enriched,
    fragment_enriched_paths,
    fragment_enriched_weights,
    is_fragmentary_enriched_weight,
    iter_enriched,
    lift,
)

__all__ = [
    "EnrichedWeight",
    "FragmentaryEnrichedWeight",
    "NumericalMask",
    "PeriodicIntSequence",
    "chi_of",
    "delta",
    "enriched_of_chi",
    "is_active",
    "is_active_pair",
    "is_compatible",
    "kronecker",
    "mutate",
    "pack",
    "sigma_of",
    "brute_force_enriched",
    "enriched_weights",
    "enumerate_enriched",
    "fragment_enriched_paths",
    "fragment_enriched_weights",
    "is_fragmentary_enriched_weight",
    "iter_enriched",
    "lift",
]
