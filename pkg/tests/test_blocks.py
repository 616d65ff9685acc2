#!/usr/bin/env python3
"""Tests for block decomposition and articulation points."""

import sys
import pytest
import networkx as nx
from hypothesis import given, settings
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from vertex_ramsey.core.blocks import articulation_points, block_decomposition
from vertex_ramsey.core.graph import Graph, named_graph

from tests.helpers import all_graphs, brute_articulation_points, graphs, to_networkx


class TestBlockDecomposition:
    """Tests for block_decomposition()."""

    def test_bowtie_has_two_triangles(self):
        dec = block_decomposition(named_graph("bowtie"))
        assert [sorted(b.vertices) for b in dec.blocks] == [[0, 1, 2], [2, 3, 4]]
        assert dec.cut_vertices == frozenset({2})

    def test_path_blocks_are_edges(self):
        dec = block_decomposition(Graph.path(4))
        assert [sorted(b.edges) for b in dec.blocks] == [[(0, 1)], [(1, 2)], [(2, 3)]]
        assert dec.cut_vertices == frozenset({1, 2})

    def test_two_connected_graph_is_one_block(self):
        dec = block_decomposition(Graph.complete(4))
        assert len(dec.blocks) == 1
        assert dec.blocks[0].edges == Graph.complete(4).edges
        assert not dec.cut_vertices

    def test_isolated_vertices_listed_without_blocks(self):
        dec = block_decomposition(Graph.from_edges(4, [(1, 2)]))
        assert dec.isolated_vertices == (0, 3)
        assert len(dec.blocks) == 1

    def test_empty_graph(self):
        dec = block_decomposition(Graph(0))
        assert dec.blocks == ()
        assert not dec.cut_vertices

    def test_block_cut_tree(self):
        dec = block_decomposition(named_graph("bowtie"))
        assert dec.tree_edges() == [(0, 2), (1, 2)]
        assert dec.cut_blocks(2) == (0, 1)
        assert dec.block_cuts(0) == (2,)

    def test_block_as_graph(self):
        dec = block_decomposition(named_graph("bowtie"))
        g, labels = dec.blocks[1].as_graph()
        assert g == Graph.complete(3)
        assert labels == (2, 3, 4)

    def test_to_dict(self):
        data = block_decomposition(Graph.path(3)).to_dict()
        assert data["cut_vertices"] == [1]
        assert data["blocks"] == [
            {"vertices": [0, 1], "edges": [[0, 1]]},
            {"vertices": [1, 2], "edges": [[1, 2]]},
        ]
        assert data["tree"] == [[0, 1], [1, 1]]

    def test_blocks_partition_edges(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)])
        dec = block_decomposition(g)
        covered = [e for b in dec.blocks for e in b.edges]
        assert len(covered) == len(set(covered)) == g.num_edges


class TestArticulationOracles:
    """Exhaustive and randomized comparison against independent oracles."""

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_removal_oracle_exhaustively(self, n):
        for g in all_graphs(n):
            assert articulation_points(g) == brute_articulation_points(g)

    @given(graphs(min_n=6, max_n=7))
    @settings(max_examples=150, deadline=None)
    def test_matches_removal_oracle_on_larger_graphs(self, g):
        assert articulation_points(g) == brute_articulation_points(g)

    @given(graphs(max_n=9))
    @settings(max_examples=150, deadline=None)
    def test_matches_networkx(self, g):
        nx_graph = to_networkx(g)
        assert articulation_points(g) == frozenset(nx.articulation_points(nx_graph))
        expected = sorted(sorted(map(tuple, map(sorted, c))) for c in nx.biconnected_component_edges(nx_graph))
        assert sorted(sorted(b.edges) for b in block_decomposition(g).blocks) == expected
