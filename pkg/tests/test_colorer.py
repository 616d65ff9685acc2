#!/usr/bin/env python3
"""Tests for the certifying colorer and its building blocks."""

import sys
import pytest
from hypothesis import given, settings
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from vertex_ramsey.core.graph import Graph, VertexColoring, disjoint_union, named_graph
from vertex_ramsey.errors import (
    EnumerationTruncated,
    NotDegenerate,
    ParamOutOfRange,
    SearchBudgetExceeded,
    UnsupportedPattern,
)
from vertex_ramsey.ramsey.colorer import (
    CertificateStatus,
    degeneracy,
    degeneracy_coloring,
    find_B_or_color,
    greedy_disjoint_family,
    greedy_star_petals,
    ramsey_bound,
    star_family_at_least,
    verify_coloring,
)
from vertex_ramsey.ramsey.exact import is_r_ramsey

from tests.helpers import brute_contains, graphs, has_monochromatic_copy

K2, K3 = Graph.complete(2), Graph.complete(3)
BOWTIE = named_graph("bowtie")
TWO_TRIANGLES = disjoint_union(K3, K3)


class TestRamseyBound:

    def test_bowtie_in_triangles(self):
        assert ramsey_bound(2, 3, 5) == 26

    def test_cherry_in_edges(self):
        assert ramsey_bound(2, 2, 3) == 6

    def test_never_below_one(self):
        assert ramsey_bound(0, 3, 5) == 1


class TestStarFamilies:
    """Tests for star_family_at_least() and greedy_star_petals()."""

    def test_friendship_center(self):
        g = named_graph("friendship3")
        check = star_family_at_least(g, K3, 0, 0, 3)
        assert check.holds
        assert check.family.size == 3
        petals = [c.vertices - {0} for c in check.family.copies]
        assert all(not (p & q) for i, p in enumerate(petals) for q in petals[i + 1:])
        assert not star_family_at_least(g, K3, 0, 0, 4)

    def test_complete_graph_packs_pairs(self):
        g = Graph.complete(5)
        assert star_family_at_least(g, K3, 0, 0, 2)
        assert not star_family_at_least(g, K3, 0, 0, 3)

    def test_role_matters(self):
        # Centre of P3 at the middle vertex of a star: many petals.
        g = Graph.star(4)
        assert star_family_at_least(g, Graph.path(3), 1, 0, 2)
        # A leaf of the star cannot play the middle role.
        assert not star_family_at_least(g, Graph.path(3), 1, 1, 1)

    def test_embeddings_put_role_on_center(self):
        check = star_family_at_least(named_graph("friendship2"), K3, 2, 0, 2)
        assert all(e.mapping[2] == 0 for e in check.family.embeddings)

    def test_target_must_be_positive(self):
        with pytest.raises(ParamOutOfRange):
            star_family_at_least(K3, K3, 0, 0, 0)

    def test_copy_limit(self):
        with pytest.raises(EnumerationTruncated):
            star_family_at_least(Graph.complete(5), K3, 0, 0, 2, limit=1)

    def test_copy_limit_after_family_found(self):
        # One pinned copy already decides s_0(0) >= 1.
        check = star_family_at_least(Graph.complete(5), K3, 0, 0, 1, limit=1)
        assert check.holds
        assert check.family.size == 1
        assert 0 in check.family.copies[0].vertices

    def test_copy_limit_packs_enumerated_petals(self):
        # Any two of the three triangles through the centre are disjoint away from it.
        check = star_family_at_least(named_graph("friendship3"), K3, 0, 0, 2, limit=2)
        assert check.holds
        assert check.family.size == 2

    def test_packing_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            star_family_at_least(Graph.complete(5), K3, 0, 0, 2, budget=0)

    def test_greedy_petals_are_disjoint_and_maximal(self):
        g = named_graph("friendship3")
        petals = greedy_star_petals(g, K3, 0, 0)
        assert len(petals) == 3
        assert sorted(sorted(p) for p in petals) == [[1, 2], [3, 4], [5, 6]]

    def test_greedy_petals_none(self):
        assert greedy_star_petals(Graph.path(3), K3, 0, 1) == []


class TestDisjointFamily:

    def test_two_triangles_in_k6(self):
        family = greedy_disjoint_family(Graph.complete(6), K3)
        assert len(family) == 2
        assert not (family[0].vertices & family[1].vertices)

    def test_leftover_spans_no_copy(self):
        g = Graph.cycle(5)
        family = greedy_disjoint_family(g, K2)
        assert len(family) == 2

    def test_empty_pattern(self):
        with pytest.raises(UnsupportedPattern):
            greedy_disjoint_family(K3, Graph(0))


class TestDegeneracy:
    """Tests for degeneracy() and degeneracy_coloring()."""

    @pytest.mark.parametrize("g,expected", [
        (Graph.complete(4), 3),
        (Graph.path(6), 1),
        (Graph.cycle(5), 2),
        (Graph(3), 0),
        (named_graph("bowtie"), 2),
    ])
    def test_degeneracy_value(self, g, expected):
        result = degeneracy(g)
        assert result.degeneracy == expected
        assert sorted(result.order) == list(range(g.n))

    @given(graphs(max_n=9))
    @settings(max_examples=100, deadline=None)
    def test_coloring_is_proper_and_small(self, g):
        coloring = degeneracy_coloring(g)
        assert all(coloring.colors[u] != coloring.colors[v] for u, v in g.edges)
        assert coloring.palette_size <= degeneracy(g).degeneracy + 1


class TestVerifyColoring:

    def test_monochromatic_triangle(self):
        check = verify_coloring(Graph.complete(4), K3, VertexColoring((0, 0, 0, 0)))
        assert not check.valid
        assert check.color == 0
        assert len(check.witness.vertices) == 3

    def test_valid_coloring(self):
        check = verify_coloring(Graph.complete(4), K3, VertexColoring((0, 0, 1, 1)))
        assert check.valid
        assert check.to_dict() == {"valid": True, "witness": None, "color": None}

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            verify_coloring(Graph.complete(4), K3, VertexColoring((0, 0)))


class TestFindBOrColor:
    """Tests for find_B_or_color()."""

    def test_k4_bowtie_coloring(self):
        cert = find_B_or_color(Graph.complete(4), K3, BOWTIE)
        assert cert.status is CertificateStatus.COLORING
        assert cert.bound == 26
        assert cert.coloring.palette_size <= 26
        assert verify_coloring(Graph.complete(4), K3, cert.coloring)
        assert cert.verified

    def test_direct_embedding(self):
        g = named_graph("friendship3")
        cert = find_B_or_color(g, K3, BOWTIE)
        assert cert.status is CertificateStatus.EMBEDDING
        assert cert.method == "direct"
        assert cert.embedding.is_valid(BOWTIE, g)

    def test_recursive_embedding_in_k7(self):
        g = Graph.complete(7)
        cert = find_B_or_color(g, K2, Graph.path(3), direct_search=False)
        assert cert.status is CertificateStatus.EMBEDDING
        assert cert.method == "recursive"
        assert cert.embedding.is_valid(Graph.path(3), g)

    def test_recursive_embedding_in_k7_with_pendant_tree(self):
        g = Graph.from_edges(10, list(Graph.complete(7).edges) + [(6, 7), (7, 8), (7, 9)])
        cert = find_B_or_color(g, K2, Graph.path(3), direct_search=False)
        assert cert.status is CertificateStatus.EMBEDDING
        assert cert.embedding.is_valid(Graph.path(3), g)

    def test_recursive_coloring_levels(self):
        cert = find_B_or_color(Graph.complete(4), K3, BOWTIE, direct_search=False)
        assert cert.status is CertificateStatus.COLORING
        assert [lvl.kind for lvl in cert.levels] == ["glued", "base"]
        assert sum(lvl.colors for lvl in cert.levels) >= cert.coloring.palette_size

    def test_disjoint_pieces(self):
        g = Graph.complete(5)
        cert = find_B_or_color(g, K3, TWO_TRIANGLES, direct_search=False)
        assert cert.status is CertificateStatus.COLORING
        assert cert.levels[0].kind == "disjoint"
        assert verify_coloring(g, K3, cert.coloring)

    def test_disjoint_pieces_embedding(self):
        g = Graph.complete(6)
        cert = find_B_or_color(g, K3, TWO_TRIANGLES, direct_search=False)
        assert cert.status is CertificateStatus.EMBEDDING
        assert cert.embedding.is_valid(TWO_TRIANGLES, g)

    def test_small_forest_graph_is_trivial(self):
        cert = find_B_or_color(Graph(3), K3, K2)
        assert cert.status is CertificateStatus.COLORING
        assert cert.method == "trivial"
        assert cert.coloring.palette_size == 1

    def test_single_vertex_pattern(self):
        with pytest.raises(UnsupportedPattern):
            find_B_or_color(Graph(1), Graph(1), Graph(2))

    def test_not_degenerate(self):
        with pytest.raises(NotDegenerate):
            find_B_or_color(Graph.complete(5), K3, Graph.complete(4))

    def test_budget_gives_unknown(self):
        cert = find_B_or_color(Graph.complete(5), K3, BOWTIE, direct_search=False, packing_budget=0)
        assert cert.status is CertificateStatus.UNKNOWN
        assert not cert.decided
        assert "exceeded" in cert.reason
        assert cert.to_dict()["branch"] == "unknown"

    @pytest.mark.parametrize("a,b", [(K3, BOWTIE), (K2, Graph.path(3)), (K3, TWO_TRIANGLES)])
    @given(g=graphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_dichotomy_soundness(self, a, b, g):
        cert = find_B_or_color(g, a, b)
        assert (cert.status is CertificateStatus.EMBEDDING) == brute_contains(b, g)
        if cert.status is CertificateStatus.EMBEDDING:
            assert cert.embedding.is_valid(b, g)
        else:
            assert cert.status is CertificateStatus.COLORING
            assert cert.coloring.palette_size <= cert.bound
            assert not has_monochromatic_copy(g, a, cert.coloring.colors)

    @pytest.mark.parametrize("a,b", [(K3, BOWTIE), (K2, Graph.path(3)), (K3, TWO_TRIANGLES)])
    @given(g=graphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_recursion_alone_is_sound(self, a, b, g):
        cert = find_B_or_color(g, a, b, direct_search=False)
        if cert.status is CertificateStatus.EMBEDDING:
            assert cert.embedding.is_valid(b, g)
        else:
            assert cert.status is CertificateStatus.COLORING
            assert cert.coloring.palette_size <= cert.bound
            assert not has_monochromatic_copy(g, a, cert.coloring.colors)


CHROMATIC_ABOVE_SIX = [
    Graph.complete(7),
    Graph.complete(8),
    Graph.from_edges(10, list(Graph.complete(7).edges) + [(6, 7), (7, 8), (7, 9)]),
    Graph.from_edges(11, list(Graph.complete(7).edges) + [(0, 7), (7, 8), (8, 9), (3, 10)]),
]


class TestRamseyForcesEmbedding:
    """A 6-Ramsey host for K2 always yields the cherry, with or without direct search."""

    @pytest.mark.parametrize("g", CHROMATIC_ABOVE_SIX)
    @pytest.mark.parametrize("direct", [True, False])
    def test_embedding_branch(self, g, direct):
        cherry = Graph.path(3)
        assert ramsey_bound(2, 2, 3) == 6
        assert is_r_ramsey(g, K2, 6).ramsey is True
        cert = find_B_or_color(g, K2, cherry, direct_search=direct)
        assert cert.status is CertificateStatus.EMBEDDING
        assert cert.embedding.is_valid(cherry, g)

