"""
Vertex Ramsey toolkit - executable forms of the A-degeneracy dichotomy.

Decides A-degeneracy and A-forest structure, produces certified
"copy of B or colouring" answers, checks vertex Ramseyness exactly on
small graphs, and runs the random F-free dense construction.
"""

__version__ = "0.1.0"

from vertex_ramsey.core.graph import Graph, VertexColoring, induced_subgraph
from vertex_ramsey.ramsey.colorer import find_B_or_color, verify_coloring
from vertex_ramsey.ramsey.degeneracy import extract_core, forest_decomposition, is_A_degenerate
from vertex_ramsey.ramsey.exact import is_eps_dense, is_r_ramsey
from vertex_ramsey.construction.construct import construct_f_free_dense

__all__ = [
    "Graph",
    "VertexColoring",
    "induced_subgraph",
    "find_B_or_color",
    "verify_coloring",
    "extract_core",
    "forest_decomposition",
    "is_A_degenerate",
    "is_eps_dense",
    "is_r_ramsey",
    "construct_f_free_dense",
]
