"""
Unit tests for Serre weights: the two direct sets, their intersection, and
the construction of common weights from combinatorial weights.
"""

import logging

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.arithmetic import make_triple
from src.config import CalibrationConfig, CSign, TableVariant
from src.core.exceptions import ConventionError, InvalidParameters, NonIntegralS, NotAWeight
from src.enriched import enumerate_enriched, sigma_of
from src.genes import gene_of_triple, gene_text
from src.serre import (
    closed_form_exponent,
    common_weights_fast,
    common_weights_oracle,
    count_common_weights,
    epsilon_prime_of_sigma,
    figure_r,
    make_serre_weight,
    outside_serre_weights,
    recipe_context,
    recover_epsilon,
    recover_epsilon_prime,
    render_serre_weight,
    serre_of_combinatorial,
    serre_of_sigma,
    sigma_of_serre_weight,
    table_entry,
    weights_of_rep,
    weights_of_rep_brute_force,
    weights_of_rep_with_witness,
    weights_of_type,
    weights_of_type_with_witness,
)
from src.weights import count_weights


Q_MINUS_ONE = 78124


def as_weights(entries):
    return {make_serre_weight(5, 7, e["s"] % Q_MINUS_ONE, e["r"]) for e in entries}


class TestSerreWeight:
    """Test the Serre weight type."""

    def test_render(self):
        w = make_serre_weight(5, 7, 77758, [4, 2, 1, 0, 4, 3, 3])
        assert render_serre_weight(w) == "Sym^[4,2,1,0,4,3,3] ⊗ det^77758"
        assert w.as_dict() == {"s": 77758, "r": [4, 2, 1, 0, 4, 3, 3]}

    def test_canonical_exponent(self):
        assert make_serre_weight(5, 7, 140262, [0] * 7).s.value == 62138

    @pytest.mark.parametrize("r", [[4] * 7, [0] * 6, [5, 0, 0, 0, 0, 0, 0]])
    def test_invalid_r(self, r):
        with pytest.raises(InvalidParameters):
            make_serre_weight(5, 7, 0, r)


class TestDirectSets:
    """Test D(rhobar) and D(t) on the worked triple."""

    def test_rep(self, t_star, t_star_data):
        weights = weights_of_rep(5, 7, t_star.h)
        assert len(weights) == 96
        assert len(set(weights)) == 96
        assert as_weights(t_star_data["rep_members"]) <= set(weights)

    def test_type(self, t_star, t_star_data):
        weights = weights_of_type(5, 7, t_star.gamma, t_star.gamma_prime)
        assert len(weights) == 60
        assert as_weights(t_star_data["type_members"]) <= set(weights)

    def test_rep_from_integer(self, t_star_data):
        assert len(weights_of_rep(5, 7, t_star_data["triple"]["h"])) == 96

    @pytest.mark.parametrize("h", [1, 7, 13, 100, 311])
    def test_rep_brute_force(self, h):
        """Test the signed expansion search against a full scan for p = 5, f = 3."""
        assert weights_of_rep(5, 3, h) == weights_of_rep_brute_force(5, 3, h)

    def test_discarded_solutions_log_quietly(self, caplog):
        """Test that dropping r = (p-1, ..., p-1) is not reported above DEBUG."""
        with caplog.at_level(logging.DEBUG, logger="src.serre.representation"):
            for h in range(1, 624):
                if h % 26:
                    weights_of_rep(5, 2, h)
        assert not [r for r in caplog.records if r.levelno >= logging.WARNING]

    def test_witnesses(self, t_star):
        for witness in weights_of_rep_with_witness(5, 7, t_star.h):
            assert len(witness.epsilon) == 7
        for witness in weights_of_type_with_witness(5, 7, t_star.gamma, t_star.gamma_prime):
            assert len(witness.epsilon_prime) == 7


class TestTypeTable:
    """Test the two rule sets for r."""

    @pytest.mark.parametrize("eps,prev,printed,reconciled", [
        (0, 0, 2, 2),
        (0, 1, 1, 3),
        (1, 0, 1, 1),
        (1, 1, 2, 0),
    ])
    def test_entries(self, eps, prev, printed, reconciled):
        assert table_entry(2, eps, prev, 5) == printed
        assert table_entry(2, eps, prev, 5, TableVariant.RECONCILED) == reconciled


class TestCommonWeights:
    """Test D(t, rhobar) on the worked triple."""

    def test_oracle(self, t_star, t_star_common):
        assert set(common_weights_oracle(t_star)) == {w for _, w in t_star_common}

    def test_fast_matches_oracle(self, t_star):
        assert common_weights_fast(t_star) == common_weights_oracle(t_star)

    def test_full_pairing(self, t_star, t_star_common):
        """Test the image of each of the twenty combinatorial weights."""
        for w, expected in t_star_common:
            assert serre_of_combinatorial(t_star, w) == expected

    def test_table_r(self, t_star, t_star_common):
        ctx = recipe_context(t_star)
        assert ctx.delta == (1, 1, 0, 0, 0, 1, 1)
        for w, expected in t_star_common:
            assert figure_r(ctx, w) == expected.r
            assert closed_form_exponent(ctx, w, expected.r) == expected.s

    def test_not_a_weight(self, t_star):
        with pytest.raises(NotAWeight):
            serre_of_combinatorial(t_star, (1, 1, 1, 1, 1, 1, 1))

    def test_alternate_conventions_miss_goldens(self, t_star, t_star_common):
        """Test that neither alternate convention reproduces the common weights."""
        golden = {w for _, w in t_star_common}
        for alt in (
            CalibrationConfig(c_sign=CSign.GAMMA_PRIME_MINUS_GAMMA),
            CalibrationConfig(table_variant=TableVariant.RECONCILED),
        ):
            try:
                found = set(common_weights_oracle(t_star, alt))
            except ConventionError:
                continue
            assert found != golden

    @pytest.mark.parametrize("h,gamma,gamma_prime", [(2, 20, 0), (1, 23, 20)])
    def test_wrapping_fragment(self, h, gamma, gamma_prime):
        """Test triples whose last fragment runs past column f-1."""
        t = make_triple(5, 2, h, gamma, gamma_prime)
        oracle = common_weights_oracle(t)
        assert len(oracle) == 2
        assert common_weights_fast(t) == oracle
        assert count_weights(gene_of_triple(t)) == 2
        assert count_common_weights(t) == 2

    def test_degenerate_drops_top_weight(self):
        """Test that (1, ..., 1) on a degenerate gene is counted in W(X) but not in D(t, rhobar)."""
        t = make_triple(5, 2, 4, 23, 23)
        g = gene_of_triple(t)
        assert gene_text(g) == "A,B/B,A"
        assert count_weights(g) == 2
        assert outside_serre_weights(recipe_context(t), (1, 1))
        fast = common_weights_fast(t)
        assert fast == common_weights_oracle(t)
        assert len(fast) == 1
        assert count_common_weights(t) == 1

    @given(
        st.sampled_from([5, 7]),
        st.sampled_from([2, 3]),
        st.integers(min_value=0, max_value=7 ** 6),
        st.integers(min_value=0, max_value=7 ** 3),
    )
    @settings(max_examples=40, deadline=None)
    def test_fast_matches_oracle_random(self, p, f, h, gamma_prime):
        q = p ** f
        h %= q * q - 1
        assume(h % (q + 1) != 0)
        gamma_prime %= q - 1
        gamma = (h - gamma_prime - (q - 1) // (p - 1)) % (q - 1)
        t = make_triple(p, f, h, gamma, gamma_prime)
        oracle = common_weights_oracle(t)
        assert common_weights_fast(t) == oracle
        assert count_common_weights(t) == len(oracle)

    @pytest.mark.slow
    def test_exhaustive_p5_f2(self):
        """Test fast == oracle and the count on every triple for p = 5, f = 2."""
        for h in range(624):
            if h % 26 == 0:
                continue
            for gp in range(24):
                t = make_triple(5, 2, h, (h - gp - 6) % 24, gp)
                fast = common_weights_fast(t)
                assert fast == common_weights_oracle(t)
                assert len(fast) == count_common_weights(t)


class TestSignRecovery:
    """Test sign vectors and the sequences built from them."""

    def test_recover_signs(self, t_star, t_star_common):
        for _, weight in t_star_common:
            eps = recover_epsilon(t_star, weight)
            eps_prime = recover_epsilon_prime(t_star, weight)
            sigma = sigma_of_serre_weight(t_star, weight, eps, eps_prime)
            assert serre_of_sigma(t_star, sigma) == weight
            assert sigma_of_serre_weight(t_star, weight) == sigma

    def test_recover_outside_sets(self, t_star, t_star_data):
        only_rep = as_weights(t_star_data["rep_members"][:1]).pop()
        only_type = make_serre_weight(5, 7, 62274, [3, 1, 0, 3, 3, 3, 0])
        with pytest.raises(NotAWeight):
            recover_epsilon_prime(t_star, only_rep)
        with pytest.raises(NotAWeight):
            recover_epsilon(t_star, only_type)

    def test_sequences_of_enriched_weights(self, t_star, t_star_common):
        """Test that every active enriched weight lands on a common weight."""
        golden = {w for _, w in t_star_common}
        for w_hat in enumerate_enriched(t_star):
            sigma = sigma_of(t_star, w_hat)
            weight = serre_of_sigma(t_star, sigma)
            assert weight in golden
            assert len(epsilon_prime_of_sigma(sigma, 5)) == 7

    def test_inactive_sequence(self, t_star):
        with pytest.raises(NonIntegralS):
            serre_of_sigma(t_star, [2] * 14)
