"""
From combinatorial weights to Serre weights

r is read from a table indexed by which entry of the column (if any) is O
and by whether w_{i-1} = delta_{i-1}. s is computed by lifting w to an
active enriched weight and reading the weight of the mutated v-sequence;
the halved closed form in the c-digits is evaluated alongside as a check.

On a degenerate gene the weight (1, ..., 1) gets r = (p-1, ..., p-1), which
is not a Serre weight. It is left out of the image, so D(t, rhobar) then has
one element fewer than W(X).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.arithmetic import CoherentTriple, CSequence, Residue, VSequence, c_sequence, make_residue, res_add, v_sequence
from src.config import CalibrationConfig, TableVariant, get_config
from src.core.exceptions import ConventionError
from src.enriched import lift, sigma_of
from src.genes import Gene, Letter, gene_of_triple, is_degenerate
from src.weights import count_weights, is_weight, iter_gene_weights

from .models import SerreWeight
from .representation import weights_of_rep
from .sigma import serre_of_sigma
from .type_weights import weights_of_type


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecipeContext:
    triple: CoherentTriple
    gene: Gene
    v: VSequence
    c: CSequence
    # delta_i = 1 iff X_i ~ X_{i+f}
    delta: Tuple[int, ...]


def recipe_context(t: CoherentTriple, calibration: Optional[CalibrationConfig] = None) -> RecipeContext:
    g = gene_of_triple(t)
    delta = tuple(int(g.at(i).similar(g.at(i + g.f))) for i in range(g.f))
    return RecipeContext(
        triple=t,
        gene=g,
        v=v_sequence(t),
        c=c_sequence(t, calibration=calibration),
        delta=delta,
    )


def figure_r(ctx: RecipeContext, w: Sequence[int]) -> Tuple[int, ...]:
    """r_{f-1-i} for every column i."""
    g, v, p, f = ctx.gene, ctx.v, ctx.triple.p, ctx.gene.f
    r = [0] * f
    for i in range(f):
        agrees = w[i - 1] == ctx.delta[i - 1]
        if g.at(i) == Letter.O:
            value = v[i] - 1 - w[i] if agrees else p - 1 - v[i] + w[i]
        elif g.at(i + f) == Letter.O:
            value = v[i + f] - 1 - w[i] if agrees else p - 1 - v[i + f] + w[i]
        else:
            value = w[i] * (p - 1) if agrees else p - 2 + w[i]
        r[f - 1 - i] = value
    return tuple(r)


def outside_serre_weights(ctx: RecipeContext, w: Sequence[int]) -> bool:
    """Whether the table sends w to r = (p-1, ..., p-1)."""
    p = ctx.triple.p
    return all(x == p - 1 for x in figure_r(ctx, w))


def closed_form_exponent(ctx: RecipeContext, w: Sequence[int], r: Sequence[int]) -> Residue:
    """
    s = gamma' + (eps'_{i0} (q-1) + sum(mu_i (c_i - r_i) p^i)) / 2 with mu_i = q
    for i <= i0 and 1 beyond, the numerator taken mod 2(q-1) before halving.

    i0 is the first index with c_{i0} != (p-1)/2, eps'_{i0} = 0 iff
    r_{i0} in {c_{i0}, c_{i0} - 1}. When every c_i is (p-1)/2, i0 = f-1-j
    for the first column j holding an O, and eps'_{i0} = 0 iff
    w_{f-2-i0} = delta_{f-2-i0}.
    """
    t, c, f = ctx.triple, ctx.c, ctx.gene.f
    p, q = t.p, t.q
    half = (p - 1) // 2
    i0 = next((i for i in range(f) if c[i] != half), None)
    if i0 is not None:
        eps = 0 if r[i0] in (c[i0], c[i0] - 1) else 1
    else:
        j = next((j for j in range(f) if Letter.O in ctx.gene.column(j)), None)
        if j is None:
            raise ConventionError("all c_i are (p-1)/2 but the gene has no O", {"gene": str(ctx.gene)})
        i0 = f - 1 - j
        k = (f - 2 - i0) % f
        eps = 0 if w[k] == ctx.delta[k] else 1
    numerator = eps * (q - 1) + sum((q if i <= i0 else 1) * (c[i] - r[i]) * p ** i for i in range(f))
    numerator %= 2 * (q - 1)
    if numerator % 2:
        raise ConventionError("odd numerator in the closed form", {"numerator": numerator})
    return res_add(t.gamma_prime, make_residue(numerator // 2, t.qm1))


def serre_of_combinatorial(
    t: CoherentTriple,
    w: Sequence[int],
    calibration: Optional[CalibrationConfig] = None,
    ctx: Optional[RecipeContext] = None,
) -> SerreWeight:
    """
    The Serre weight of a combinatorial weight of the gene of t.

    Raises:
        NotAWeight: if w is not a weight of the gene
        InvalidParameters: if w is sent to r = (p-1, ..., p-1)
        ConventionError: if the table, the lifted sequence and the closed
            form do not agree
    """
    calibration = calibration or get_config().calibration
    if ctx is None:
        ctx = recipe_context(t, calibration)
    w = tuple(w)
    w_hat = lift(ctx.gene, w)
    weight = serre_of_sigma(t, sigma_of(t, w_hat, ctx.gene))
    r = figure_r(ctx, w)
    if weight.r != r:
        raise ConventionError(
            "table r differs from the lifted weight",
            {"weight": list(w), "table": list(r), "lifted": list(weight.r)},
        )
    if calibration.cross_check_closed_form and calibration.table_variant == TableVariant.PRINTED:
        s = closed_form_exponent(ctx, w, r)
        if s != weight.s:
            raise ConventionError(
                "closed form exponent differs from the lifted weight",
                {"weight": list(w), "closed_form": s.value, "lifted": weight.s.value},
            )
    return weight


def common_weights_fast(t: CoherentTriple, calibration: Optional[CalibrationConfig] = None) -> List[SerreWeight]:
    """D(t, rhobar) as the image of W(X), sorted."""
    ctx = recipe_context(t, calibration)
    weights = []
    for w in iter_gene_weights(ctx.gene):
        if outside_serre_weights(ctx, w):
            logger.debug("Skipped %s: r = (p-1, ..., p-1)", w)
            continue
        weights.append(serre_of_combinatorial(t, w, calibration, ctx))
    weights.sort()
    logger.debug("D(t, rhobar) has %d weights", len(weights))
    return weights


def count_common_weights(t: CoherentTriple, calibration: Optional[CalibrationConfig] = None) -> int:
    """Card D(t, rhobar) without enumeration."""
    ctx = recipe_context(t, calibration)
    total = count_weights(ctx.gene)
    if is_degenerate(ctx.gene):
        ones = (1,) * ctx.gene.f
        if is_weight(ctx.gene, ones) and outside_serre_weights(ctx, ones):
            total -= 1
    return total


def common_weights_oracle(t: CoherentTriple, calibration: Optional[CalibrationConfig] = None) -> List[SerreWeight]:
    """D(t, rhobar) as the intersection of the two direct enumerations."""
    rep = set(weights_of_rep(t.p, t.f, t.h))
    typ = set(weights_of_type(t.p, t.f, t.gamma, t.gamma_prime, calibration))
    return sorted(rep & typ)
