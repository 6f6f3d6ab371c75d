"""
Unit tests for combinatorial weights.

Covers fragment tables, gene assembly, counting without enumeration,
degenerate genes and the Fibonacci bounds.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.exceptions import InvalidFragment
from src.genes import all_fragments, enumerate_genes, is_degenerate, is_viable, parse_fragment, parse_gene, random_gene
from src.weights import (
    PairState,
    count_weights,
    degenerate_count,
    degenerate_tables,
    degenerate_weights,
    extremal_fragment,
    fib_bound,
    fibonacci,
    fragment_count,
    fragment_counts,
    fragment_tables,
    fragment_weights,
    gene_weights,
    is_weight,
    iter_fragment_weights,
    iter_gene_weights,
    near_extremal_fragment,
)

BB, AB, BA = PairState.BB, PairState.AB, PairState.BA

FIB_GENE = "O,A,B,A,B,A,B,A,B/B,A,B,A,B,A,B,A,AB"


class TestFragmentWeights:
    """Test the weights of single fragments."""

    @pytest.mark.parametrize("text,expected", [
        ("O,A,B/B,A,AB", {(0, 0, 1), (1, 0, 1), (0, 0, 0), (1, 0, 0), (0, 1, 0)}),
        ("A/O", {(0,)}),
        ("AB/O", {(0,), (1,)}),
        ("O,A/B,AB", {(0, 1), (1, 0)}),
    ])
    def test_worked_fragments(self, text, expected):
        F = parse_fragment(text)
        assert set(fragment_weights(F)) == expected
        assert fragment_count(F) == len(expected)

    @pytest.mark.parametrize("text,count", [
        ("A/O", 1), ("O/A", 1), ("B/O", 1), ("O/B", 1), ("AB/O", 2), ("O/AB", 2),
    ])
    def test_length_one(self, text, count):
        assert fragment_count(parse_fragment(text)) == count

    def test_tables(self):
        """Test every table of [O A B / B A AB]."""
        tables = fragment_tables(parse_fragment("O,A,B/B,A,AB"))
        assert tables[0] == {BB: frozenset({(1,)}), AB: frozenset({(0,)}), BA: frozenset()}
        assert tables[1] == {
            BB: frozenset({(0, 1)}),
            AB: frozenset({(1, 0)}),
            BA: frozenset({(0, 0), (1, 0)}),
        }
        assert tables[2] == {
            BB: frozenset({(1, 0, 1), (0, 0, 1)}),
            AB: frozenset({(0, 0, 0), (1, 0, 0), (0, 1, 0)}),
            BA: frozenset({(0, 0, 0), (1, 0, 0)}),
        }

    def test_counts_follow_tables(self):
        F = parse_fragment("O,A,B/B,A,AB")
        for sizes, tables in zip(fragment_counts(F), fragment_tables(F)):
            assert sizes == {s: len(tables[s]) for s in (BB, AB, BA)}

    @pytest.mark.parametrize("ell", [1, 2, 3, 4, 5])
    def test_count_matches_enumeration(self, ell):
        """Test counting and streaming against each other on every fragment."""
        for F in all_fragments(ell):
            streamed = list(iter_fragment_weights(F))
            assert len(streamed) == len(set(streamed))
            assert len(streamed) == fragment_count(F)

    @pytest.mark.parametrize("ell", [2, 3, 4])
    def test_table_invariants(self, ell, monkeypatch):
        """Test nesting, disjointness and triangle inequalities on every fragment."""
        monkeypatch.setenv("SERRE_ENUMERATION__CHECK_INVARIANTS", "true")
        for F in all_fragments(ell):
            tables = fragment_tables(F)
            assert len(tables) == ell


class TestGeneWeights:
    """Test W(X) for genes."""

    def test_worked_gene(self, t_star_gene, t_star_data):
        expected = sorted(tuple(e["w"]) for e in t_star_data["common"])
        assert gene_weights(t_star_gene) == expected
        assert count_weights(t_star_gene) == 20
        assert sorted(iter_gene_weights(t_star_gene)) == expected

    def test_membership(self, t_star_gene, t_star_data):
        for e in t_star_data["common"]:
            assert is_weight(t_star_gene, e["w"])
        assert not is_weight(t_star_gene, (1, 1, 1, 1, 1, 1, 1))
        assert not is_weight(t_star_gene, (0, 0, 1))

    def test_weights_vanish_at_a_o_column(self, t_star_gene):
        """Test that bit 3 of every weight is 0 ([A / O] has only weight 0)."""
        assert all(w[3] == 0 for w in gene_weights(t_star_gene))

    def test_not_viable(self):
        g = parse_gene("O,AB/O,AB")
        assert gene_weights(g) == []
        assert count_weights(g) == 0
        assert list(iter_gene_weights(g)) == []

    @pytest.mark.parametrize("text", ["A,A/AB,O", "AB,O/B,A"])
    def test_wrapping_gene(self, text):
        """Test genes whose only fragment wraps past column f-1."""
        g = parse_gene(text)
        assert count_weights(g) == 2
        assert len(gene_weights(g)) == 2
        assert all(is_weight(g, w) for w in iter_gene_weights(g))

    def test_fibonacci_gene(self):
        """Test that the alternating gene with nine columns has 89 weights."""
        g = parse_gene(FIB_GENE)
        assert count_weights(g) == 89
        assert len(set(iter_gene_weights(g))) == 89

    @pytest.mark.parametrize("f", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
    def test_viable_iff_nonempty(self, f):
        for g in enumerate_genes(f):
            assert (count_weights(g) > 0) == is_viable(g)

    @given(st.integers(min_value=2, max_value=7), st.integers(min_value=0, max_value=2 ** 32))
    @settings(max_examples=60, deadline=None)
    def test_random_genes(self, f, seed):
        """Property: counting, streaming and materializing agree."""
        g = random_gene(f, random.Random(seed))
        streamed = list(iter_gene_weights(g))
        assert len(streamed) == len(set(streamed)) == count_weights(g)
        assert sorted(streamed) == gene_weights(g)
        for w in streamed[:8]:
            assert is_weight(g, w)


class TestDegenerate:
    """Test genes without O."""

    def test_two_columns(self):
        g = parse_gene("B,A/A,A")
        assert degenerate_weights(g) == [(0, 0), (1, 0)]
        assert degenerate_count(g) == 2
        assert count_weights(g) == 2

    def test_two_column_tables(self):
        """Test the nine tables at columns 0 and 1."""
        tables = degenerate_tables(parse_gene("B,A/A,A"))
        layer0 = {
            (BB, AB): {(0,)},
            (AB, BB): {(1,)},
            (BA, BB): {(1,)},
            (BA, AB): {(0,)},
            (BA, BA): {(0,)},
        }
        layer1 = {
            (AB, BB): {(1, 1)},
            (AB, AB): {(1, 0)},
            (BA, BB): {(1, 1)},
            (BA, AB): {(0, 0), (1, 0)},
            (BA, BA): {(0, 0)},
        }
        for i, expected in ((0, layer0), (1, layer1)):
            for start in (BB, AB, BA):
                for end in (BB, AB, BA):
                    assert tables.at(i, start, end) == frozenset(expected.get((start, end), set()))

    def test_initial_layer(self):
        tables = degenerate_tables(parse_gene("B,A/A,A"))
        assert tables.at(-1, AB, AB) == frozenset({()})
        assert tables.at(-1, AB, BA) == frozenset()

    def test_four_columns(self):
        g = parse_gene("B,B,B,A/A,B,A,A")
        assert set(degenerate_weights(g)) == {
            (0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 1, 1), (1, 0, 1, 0), (1, 1, 0, 0),
        }
        assert degenerate_count(g) == 5

    @pytest.mark.parametrize("f", [2, 3, 4, 5])
    def test_count_matches_enumeration(self, f):
        """Test the size recursion against enumeration on every degenerate gene."""
        for g in enumerate_genes(f):
            if not is_degenerate(g):
                continue
            weights = degenerate_weights(g)
            streamed = list(iter_gene_weights(g))
            assert len(streamed) == len(set(streamed))
            assert degenerate_count(g) == len(weights) == len(streamed)
            assert all(is_weight(g, w) for w in weights)


class TestFibonacci:
    """Test the Fibonacci bounds."""

    def test_values(self):
        assert [fibonacci(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
        assert fib_bound(10) == 144
        assert fib_bound(1) == 2

    def test_bad_length(self):
        with pytest.raises(InvalidFragment):
            fib_bound(0)
        with pytest.raises(InvalidFragment):
            extremal_fragment(1)

    @pytest.mark.parametrize("ell", range(2, 11))
    def test_extremal_shapes(self, ell):
        for flipped in (False, True):
            assert fragment_count(extremal_fragment(ell, flipped)) == fib_bound(ell)
            assert fragment_count(near_extremal_fragment(ell, flipped)) == fib_bound(ell) - 1

    def test_nine_column_shape(self):
        assert extremal_fragment(9).text() == FIB_GENE

    @pytest.mark.slow
    @pytest.mark.parametrize("ell", [1, 2, 3, 4, 5, 6, 7])
    def test_bound_is_sharp(self, ell):
        """Test over every fragment that Fib_{l+2} is the maximum."""
        counts = [fragment_count(F) for F in all_fragments(ell)]
        assert max(counts) == fib_bound(ell)
