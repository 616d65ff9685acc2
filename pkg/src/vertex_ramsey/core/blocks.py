#!/usr/bin/env python3
"""
Articulation points and block decomposition (block-cut tree).

One depth-first pass with an explicit stack computes discovery times and
lowpoints; whenever a child's lowpoint does not reach above its parent, the
edges pushed since that tree edge form one block. Single edges count as
blocks; isolated vertices are leaves of the block-cut tree without edges.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Set, Tuple

from vertex_ramsey.core.graph import Edge, Graph, edge_subgraph, normalize_edge


@dataclass(frozen=True)
class Block:
    """Maximal 2-vertex-connected subgraph (or bridge) of a graph."""

    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sort_key(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def as_graph(self) -> Tuple[Graph, Tuple[int, ...]]:
        """The block as a standalone graph; labels[i] is the original vertex."""
        return edge_subgraph(self.edges)

    def to_dict(self) -> Dict[str, object]:
        return {
            "vertices": sorted(self.vertices),
            "edges": [list(e) for e in sorted(self.edges)],
        }


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and the bipartite block-cut tree of a graph."""

    n: int
    blocks: Tuple[Block, ...]
    cut_vertices: FrozenSet[int]
    isolated_vertices: Tuple[int, ...]

    def block_cuts(self, index: int) -> Tuple[int, ...]:
        """Cut vertices contained in block `index` (its tree neighbours)."""
        return tuple(sorted(self.blocks[index].vertices & self.cut_vertices))

    def cut_blocks(self, v: int) -> Tuple[int, ...]:
        """Indices of the blocks containing cut vertex v."""
        return tuple(i for i, b in enumerate(self.blocks) if v in b.vertices)

    def tree_edges(self) -> List[Tuple[int, int]]:
        """Block-cut tree as (block index, cut vertex) pairs."""
        return [(i, v) for i in range(len(self.blocks)) for v in self.block_cuts(i)]

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "blocks": [b.to_dict() for b in self.blocks],
            "cut_vertices": sorted(self.cut_vertices),
            "isolated_vertices": list(self.isolated_vertices),
            "tree": [[i, v] for i, v in self.tree_edges()],
        }


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Compute blocks and cut vertices of g in linear time."""
    disc = [-1] * g.n
    low = [0] * g.n
    clock = 0
    blocks: List[Block] = []
    cuts: Set[int] = set()
    isolated: List[int] = []

    for root in range(g.n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            isolated.append(root)
            disc[root] = clock
            clock += 1
            continue

        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        edge_stack: List[Edge] = []
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]

        while stack:
            v, parent, neighbours = stack[-1]
            descended = False
            for w in neighbours:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue

            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block_edges = set()
                while True:
                    e = edge_stack.pop()
                    block_edges.add(normalize_edge(*e))
                    if e == (u, v):
                        break
                blocks.append(
                    Block(
                        vertices=frozenset(x for e in block_edges for x in e),
                        edges=frozenset(block_edges),
                    )
                )
                if u == root:
                    root_children += 1
                else:
                    cuts.add(u)

        if root_children > 1:
            cuts.add(root)

    blocks.sort(key=Block.sort_key)
    return BlockDecomposition(
        n=g.n,
        blocks=tuple(blocks),
        cut_vertices=frozenset(cuts),
        isolated_vertices=tuple(isolated),
    )


def articulation_points(g: Graph) -> FrozenSet[int]:
    """Vertices whose removal increases the number of connected components."""
    return block_decomposition(g).cut_vertices
