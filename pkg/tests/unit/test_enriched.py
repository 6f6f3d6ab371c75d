"""
Unit tests for mutations and enriched weights.
"""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arithmetic import make_triple, v_sequence
from src.core.exceptions import InvalidParameters, NotAWeight, SamplerFailure
from src.enriched import (
    EnrichedWeight,
    brute_force_enriched,
    chi_of,
    delta,
    enriched_of_chi,
    enriched_weights,
    enumerate_enriched,
    fragment_enriched_weights,
    is_active,
    is_active_pair,
    is_compatible,
    is_fragmentary_enriched_weight,
    lift,
    mutate,
    pack,
    sigma_of,
)
from src.genes import LetterClass, all_fragments, gene_of_triple, parse_gene, random_gene, sample_triple
from src.weights import gene_weights

a, b = LetterClass.a, LetterClass.b


class TestMutation:
    """Test mutations and activity."""

    def test_mutation_formula(self):
        assert tuple(mutate([1, 2, 3, 4], [1, 0, 0, 1], 5)) == (5, 7, 3, 3)

    def test_mask_length(self):
        with pytest.raises(InvalidParameters):
            mutate([1, 2, 3, 4], [1, 0], 5)

    @given(
        st.sampled_from([3, 5, 7]),
        st.integers(min_value=2, max_value=5).flatmap(
            lambda f: st.tuples(
                st.lists(st.integers(min_value=0, max_value=6), min_size=2 * f, max_size=2 * f),
                st.lists(st.integers(min_value=-2, max_value=2), min_size=2 * f, max_size=2 * f),
            )
        ),
    )
    def test_mutation_keeps_packed_value(self, p, data):
        """Property: a mutation does not move the packed value modulo p^(2f) - 1."""
        sigma, chi = data
        modulus = p ** len(sigma) - 1
        assert pack(mutate(sigma, chi, p), p) % modulus == pack(sigma, p) % modulus

    @pytest.mark.parametrize("x,y,active", [
        (0, 3, True), (5, 0, True), (3, 5, True), (0, 5, True),
        (3, 3, False), (2, 3, False), (0, 0, False), (6, 0, False), (-1, 0, False),
    ])
    def test_active_pairs(self, x, y, active):
        assert is_active_pair(x, y, 5) is active

    def test_worked_sequences_are_active(self, t_star):
        """Test every lifted enriched weight of the worked triple."""
        for w_hat in enumerate_enriched(t_star):
            sigma = sigma_of(t_star, w_hat)
            assert is_active(sigma, 5)
            assert is_compatible(sigma, t_star)

    def test_v_itself(self, t_star):
        assert is_compatible(v_sequence(t_star), t_star)
        assert not is_compatible([0, 1], t_star)


class TestEnrichedWeight:
    """Test the enriched weight type and the mask maps."""

    def test_text_round_trip(self):
        w = EnrichedWeight.of_text("abb/bba")
        assert w.f == 3
        assert str(w) == "abb/bba"
        assert w.column(0) == (a, b)
        assert delta(w) == (0, 1, 0)

    def test_odd_length(self):
        with pytest.raises(InvalidParameters):
            EnrichedWeight.of_text("abb")

    def test_mask_round_trip(self, t_star_gene):
        for chi in [(0,) * 14, (1,) * 14, (1, 0) * 7]:
            assert tuple(chi_of(t_star_gene, enriched_of_chi(t_star_gene, chi))) == chi


class TestEnumeration:
    """Test the recursive enumeration against brute force."""

    def test_worked_triple(self, t_star, t_star_gene):
        found = enumerate_enriched(t_star)
        assert found == brute_force_enriched(t_star)
        assert {delta(w) for w in found} == set(gene_weights(t_star_gene))

    @given(st.integers(min_value=2, max_value=4), st.integers(min_value=0, max_value=2 ** 32))
    @settings(max_examples=30, deadline=None)
    def test_random_triples(self, f, seed):
        """Property: recursion and brute force agree on sampled triples."""
        rng = random.Random(seed)
        g = random_gene(f, rng)
        try:
            t = sample_triple(g, 5, rng=rng)
        except SamplerFailure:
            return
        assert enumerate_enriched(t) == brute_force_enriched(t)

    @pytest.mark.parametrize("h,gamma,gamma_prime", [(492, 13, 17), (2, 20, 0)])
    def test_wrapped_fragment_states(self, h, gamma, gamma_prime):
        """Test that states past column f-1 are stored with their rows swapped."""
        t = make_triple(5, 2, h, gamma, gamma_prime)
        found = enumerate_enriched(t)
        assert found == brute_force_enriched(t)
        assert {delta(w) for w in found} == set(gene_weights(gene_of_triple(t)))

    def test_not_viable(self):
        assert enriched_weights(parse_gene("O,AB/O,AB")) == []

    def test_degenerate(self):
        g = parse_gene("B,B,B,A/A,B,A,A")
        assert {delta(w) for w in enriched_weights(g)} == set(gene_weights(g))


class TestLift:
    """Test lifting combinatorial weights."""

    def test_lift_worked_weights(self, t_star_gene):
        for w in gene_weights(t_star_gene):
            w_hat = lift(t_star_gene, w)
            assert delta(w_hat) == w
            assert w_hat in enriched_weights(t_star_gene)

    def test_lift_degenerate(self):
        g = parse_gene("B,A/A,A")
        for w in gene_weights(g):
            assert delta(lift(g, w)) == w

    def test_not_a_weight(self, t_star_gene):
        with pytest.raises(NotAWeight):
            lift(t_star_gene, (1, 1, 1, 1, 1, 1, 1))
        with pytest.raises(NotAWeight):
            lift(t_star_gene, (0, 0))


class TestFragmentary:
    """Test fragmentary enriched weights against their defining clauses."""

    @pytest.mark.parametrize("ell", [1, 2, 3, 4])
    def test_clauses_match_recursion(self, ell):
        pairs = [(a, a), (a, b), (b, a), (b, b)]
        for F in all_fragments(ell):
            direct = {
                cand for cand in itertools.product(pairs, repeat=ell)
                if is_fragmentary_enriched_weight(F, cand)
            }
            assert direct == set(fragment_enriched_weights(F))

    def test_length_one(self):
        F = all_fragments(1)
        counts = {x.text(): len(fragment_enriched_weights(x)) for x in F}
        assert counts["O/A"] == 1
        assert counts["AB/O"] == 2
