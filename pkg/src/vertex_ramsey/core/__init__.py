"""Graphs, text formats, blocks and subgraph embeddings."""

from vertex_ramsey.core.graph import (
    Graph,
    VertexColoring,
    connected_components,
    disjoint_union,
    induced_subgraph,
    named_graph,
)
from vertex_ramsey.core.formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from vertex_ramsey.core.blocks import BlockDecomposition, articulation_points, block_decomposition
from vertex_ramsey.core.embed import (
    Copy,
    Embedding,
    automorphism_count,
    contains_copy,
    enumerate_copies,
    find_embedding,
)

__all__ = [
    "Graph",
    "VertexColoring",
    "connected_components",
    "disjoint_union",
    "induced_subgraph",
    "named_graph",
    "parse_edge_list",
    "parse_graph6",
    "write_edge_list",
    "write_graph6",
    "BlockDecomposition",
    "articulation_points",
    "block_decomposition",
    "Copy",
    "Embedding",
    "automorphism_count",
    "contains_copy",
    "enumerate_copies",
    "find_embedding",
]
