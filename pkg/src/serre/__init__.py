"""
Serre weights package.

The two direct weight sets D(rhobar) and D(t), their intersection, and the
gene-based construction of the common weights.
"""

from .models import SerreWeight, WeightWitness, make_serre_weight, render_serre_weight
from .representation import (
    exponent_of_solution,
    recover_epsilon,
    weights_of_rep,
    weights_of_rep_brute_force,
    weights_of_rep_with_witness,
)
from .type_weights import (
    exponent_of_epsilon_prime,
    halved_exponent,
    r_of_epsilon_prime,
    recover_epsilon_prime,
    table_entry,
    weights_of_type,
    weights_of_type_with_witness,
)
from .sigma import epsilon_prime_of_sigma, serre_of_sigma, sigma_of_serre_weight
from .recipe import (
    RecipeContext,
    closed_form_exponent,
    common_weights_fast,
    common_weights_oracle,
    count_common_weights,
    figure_r,
    outside_serre_weights,
    recipe_context,
    serre_of_combinatorial,
)

__all__ = [
    "SerreWeight",
    "WeightWitness",
    "make_serre_weight",
    "render_serre_weight",
    "exponent_of_solution",
    "recover_epsilon",
    "weights_of_rep",
    "weights_of_rep_brute_force",
    "weights_of_rep_with_witness",
    "exponent_of_epsilon_prime",
    "halved_exponent",
    "r_of_epsilon_prime",
    "recover_epsilon_prime",
    "table_entry",
    "weights_of_type",
    "weights_of_type_with_witness",
    "epsilon_prime_of_sigma",
    "serre_of_sigma",
    "sigma_of_serre_weight",
    "RecipeContext",
    "closed_form_exponent",
    "common_weights_fast",
    "common_weights_oracle",
    "count_common_weights",
    "figure_r",
    "outside_serre_weights",
    "recipe_context",
    "serre_of_combinatorial",
]
