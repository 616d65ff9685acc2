#!/usr/bin/env python3
"""
A-degeneracy, minimum A-forest decompositions and core extraction.

B is A-degenerate when every block of B embeds into A. An A-forest is an
ordered sequence of pieces B_1..B_l, each embeddable into A, where each
piece meets the union of the earlier ones in at most one vertex. A block
can never be split across pieces (the later half would meet the earlier
half in two vertices), so pieces are unions of whole blocks, and the
isolated vertices of B are single-vertex items of their own.

An unordered grouping of items can be ordered validly iff its
piece/vertex incidence graph is a forest; the search keeps that invariant
and orders the final grouping by growing one subtree per component.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from vertex_ramsey.core.blocks import Block, block_decomposition
from vertex_ramsey.core.embed import contains_copy, find_embedding
from vertex_ramsey.core.graph import Edge, Graph
from vertex_ramsey.errors import IsDegenerate, SearchBudgetExceeded, UnsupportedPattern
from vertex_ramsey.utils.config import DEFAULT_FOREST_NODES
from vertex_ramsey.utils.logging import LoggingMixin

logger = logging.getLogger(__name__)


def piece_graph(vertices, edges) -> Tuple[Graph, Tuple[int, ...]]:
    """Subgraph (V, E) relabelled 0..|V|-1 in increasing order; keeps vertices without edges."""
    labels = tuple(sorted(vertices))
    index = {v: i for i, v in enumerate(labels)}
    return Graph(len(labels), frozenset((index[u], index[v]) for u, v in edges)), labels


@dataclass(frozen=True)
class DegeneracyCheck:
    """Answer of is_A_degenerate; `witness` is a block that does not embed into A."""

    degenerate: bool
    witness: Optional[Block] = None

    def __bool__(self) -> bool:
        return self.degenerate

    def to_dict(self) -> Dict[str, object]:
        return {
            "degenerate": self.degenerate,
            "witness": self.witness.to_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class ForestPiece:
    """One piece of an A-forest with its attachment and a witness embedding into A."""

    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]
    attachment: Optional[int]
    embedding: Tuple[Tuple[int, int], ...]  # (vertex of B, vertex of A), sorted

    def as_graph(self) -> Tuple[Graph, Tuple[int, ...]]:
        return piece_graph(self.vertices, self.edges)

    def role_map(self) -> Dict[int, int]:
        return dict(self.embedding)

    def to_dict(self) -> Dict[str, object]:
        return {
            "vertices": sorted(self.vertices),
            "edges": [list(e) for e in sorted(self.edges)],
            "attachment": self.attachment,
            "embedding": [list(pair) for pair in self.embedding],
        }


@dataclass(frozen=True)
class ForestDecomposition:
    """
    Ordered pieces of an A-forest.

    `minimal` is False when the search ran out of nodes; the pieces are
    then valid but the size may not be the minimum.
    """

    pieces: Tuple[ForestPiece, ...]
    minimal: bool = True
    nodes: int = 0

    @property
    def size(self) -> int:
        return len(self.pieces)

    @property
    def attachments(self) -> Tuple[Optional[int], ...]:
        return tuple(p.attachment for p in self.pieces[1:])

    def is_disjoint(self) -> bool:
        return all(x is None for x in self.attachments)

    def verify(self, b_graph: Graph, a_graph: Graph) -> bool:
        """Re-check cover, edge-disjointness, the attachment bound and every witness embedding."""
        covered: Set[Edge] = set()
        vertices: Set[int] = set()
        for piece in self.pieces:
            if not piece.edges <= b_graph.edges:
                return False
            if any(u not in piece.vertices or v not in piece.vertices for u, v in piece.edges):
                return False
            if covered & piece.edges:
                return False
            meet = piece.vertices & vertices
            if len(meet) > 1:
                return False
            expected = next(iter(meet)) if meet else None
            if piece.attachment != expected:
                return False

            roles = piece.role_map()
            if set(roles) != set(piece.vertices) or len(roles) != len(piece.embedding):
                return False
            images = list(roles.values())
            if len(set(images)) != len(images) or any(not 0 <= x < a_graph.n for x in images):
                return False
            if any(not a_graph.has_edge(roles[u], roles[v]) for u, v in piece.edges):
                return False

            covered |= piece.edges
            vertices |= piece.vertices
        return covered == set(b_graph.edges) and vertices == set(range(b_graph.n))

    def to_dict(self) -> Dict[str, object]:
        return {
            "size": self.size,
            "minimal": self.minimal,
            "nodes": self.nodes,
            "pieces": [p.to_dict() for p in self.pieces],
        }


def offending_blocks(b_graph: Graph, a_graph: Graph) -> List[Block]:
    """Blocks of b_graph that do not embed into a_graph, in block order."""
    result = []
    for block in block_decomposition(b_graph).blocks:
        graph, _ = block.as_graph()
        if not contains_copy(graph, a_graph):
            result.append(block)
    return result


def is_A_degenerate(b_graph: Graph, a_graph: Graph) -> DegeneracyCheck:
    """True iff every block of b_graph embeds into a_graph; otherwise the first offending block."""
    for block in block_decomposition(b_graph).blocks:
        graph, _ = block.as_graph()
        if not contains_copy(graph, a_graph):
            return DegeneracyCheck(False, block)
    return DegeneracyCheck(True)


class _NodesSpent(Exception):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ForestSearch(LoggingMixin):
    """
    Branch and bound for a minimum A-forest.

    Items are the blocks and isolated vertices of B; a group is a set of
    items (bitmask) whose union embeds into A. Every group chosen at a node
    contains the smallest unassigned item, so each grouping is generated
    once. The incumbent starts as the all-singletons grouping.
    """

    def __init__(self, b_graph: Graph, a_graph: Graph, budget: int = DEFAULT_FOREST_NODES):
        self.b_graph = b_graph
        self.a_graph = a_graph
        self.budget = budget
        decomposition = block_decomposition(b_graph)
        self.items: List[Tuple[FrozenSet[int], FrozenSet[Edge]]] = [
            (blk.vertices, blk.edges) for blk in decomposition.blocks
        ] + [(frozenset([v]), frozenset()) for v in decomposition.isolated_vertices]
        self.nodes = 0
        self._unions: Dict[int, Tuple[FrozenSet[int], FrozenSet[Edge]]] = {}
        self._embeds: Dict[int, bool] = {}
        self._best: List[int] = []
        self._best_key: Tuple[Tuple[int, ...], ...] = ()

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _NodesSpent()

    def _union(self, mask: int) -> Tuple[FrozenSet[int], FrozenSet[Edge]]:
        cached = self._unions.get(mask)
        if cached is None:
            vertices: Set[int] = set()
            edges: Set[Edge] = set()
            for i in _bits(mask):
                vertices |= self.items[i][0]
                edges |= self.items[i][1]
            cached = (frozenset(vertices), frozenset(edges))
            self._unions[mask] = cached
        return cached

    def _group_embeds(self, mask: int) -> bool:
        cached = self._embeds.get(mask)
        if cached is not None:
            return cached
        self._tick()
        vertices, edges = self._union(mask)
        if len(vertices) > self.a_graph.n or len(edges) > self.a_graph.num_edges:
            result = False
        else:
            graph, _ = piece_graph(vertices, edges)
            result = contains_copy(graph, self.a_graph)
        self._embeds[mask] = result
        return result

    def _groups(self, first: int, remaining: int) -> List[int]:
        """Embeddable groups containing `first`, largest first."""
        found: List[int] = []
        others = [i for i in _bits(remaining) if i != first]

        def grow(mask: int, start: int) -> None:
            self._tick()
            found.append(mask)
            for j in range(start, len(others)):
                extended = mask | (1 << others[j])
                if self._group_embeds(extended):
                    grow(extended, j + 1)

        if self._group_embeds(1 << first):
            grow(1 << first, 0)
        found.sort(key=lambda m: (-bin(m).count("1"), m))
        return found

    def _incidence_forest(self, groups: List[int]) -> Optional[Dict[int, object]]:
        """Component root per group if the piece/vertex incidence graph is a forest, else None."""
        parent: Dict[object, object] = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, group in enumerate(groups):
            for v in self._union(group)[0]:
                root_g, root_v = find(("g", i)), find(("v", v))
                if root_g == root_v:
                    return None
                parent[root_g] = root_v
            find(("g", i))
        return {group: find(("g", i)) for i, group in enumerate(groups)}

    def _key(self, order: List[int]) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(self._union(g)[0])) for g in order)

    def _order(self, groups: List[int]) -> Optional[List[int]]:
        """Lexicographically smallest valid order of the groups, or None if none exists."""
        components = self._incidence_forest(groups)
        if components is None:
            return None
        left = sorted(groups, key=lambda g: tuple(sorted(self._union(g)[0])))
        placed: List[int] = []
        union: Set[int] = set()
        started = set()
        while left:
            for group in left:
                meet = len(self._union(group)[0] & union)
                if meet == 1 or (meet == 0 and components[group] not in started):
                    break
            else:
                return None
            left.remove(group)
            placed.append(group)
            union |= self._union(group)[0]
            started.add(components[group])
        return placed

    def _lower_bound(self, remaining: int, covered: FrozenSet[int]) -> int:
        vertices, edges = self._union(remaining)
        a_edges = self.a_graph.num_edges
        by_edges = math.ceil(len(edges) / a_edges) if a_edges else (math.inf if edges else 0)
        by_vertices = math.ceil(len(vertices - covered) / self.a_graph.n)
        return max(1, by_edges, by_vertices)

    def _search(self, partition: List[int], remaining: int, covered: FrozenSet[int]) -> None:
        self._tick()
        if not remaining:
            if len(partition) > len(self._best):
                return
            order = self._order(partition)
            if order is None:
                return
            key = self._key(order)
            if len(order) < len(self._best) or key < self._best_key:
                self._best, self._best_key = order, key
            return

        if len(partition) + self._lower_bound(remaining, covered) > len(self._best):
            return

        first = (remaining & -remaining).bit_length() - 1
        for group in self._groups(first, remaining):
            partition.append(group)
            if self._incidence_forest(partition) is not None:
                self._search(partition, remaining & ~group, covered | self._union(group)[0])
            partition.pop()

    def _build(self, order: List[int], minimal: bool) -> ForestDecomposition:
        pieces = []
        seen: Set[int] = set()
        for group in order:
            vertices, edges = self._union(group)
            meet = vertices & seen
            graph, labels = piece_graph(vertices, edges)
            embedding = find_embedding(graph, self.a_graph, lexicographic=True)
            pieces.append(
                ForestPiece(
                    vertices=vertices,
                    edges=edges,
                    attachment=next(iter(meet)) if meet else None,
                    embedding=tuple(zip(labels, embedding.mapping)),
                )
            )
            seen |= vertices
        return ForestDecomposition(pieces=tuple(pieces), minimal=minimal, nodes=self.nodes)

    def run(self) -> ForestDecomposition:
        """Minimum decomposition; flagged non-minimal when the node budget runs out."""
        if not self.items:
            return ForestDecomposition(pieces=(), minimal=True, nodes=0)

        self._best = self._order([1 << i for i in range(len(self.items))])
        self._best_key = self._key(self._best)
        minimal = True
        try:
            self._search([], (1 << len(self.items)) - 1, frozenset())
        except _NodesSpent:
            minimal = False
            self.log_warning(
                f"Forest search stopped after {self.budget} nodes; "
                f"returning a decomposition of size {len(self._best)} that may not be minimal"
            )
        self.log_debug(f"Forest search: {len(self.items)} items, {self.nodes} nodes, size {len(self._best)}")
        return self._build(self._best, minimal)


def forest_decomposition(
    b_graph: Graph,
    a_graph: Graph,
    budget: int = DEFAULT_FOREST_NODES,
    strict: bool = False,
) -> Optional[ForestDecomposition]:
    """
    Minimum-size A-forest decomposition of b_graph.

    Args:
        b_graph: Graph to decompose
        a_graph: Pattern every piece must embed into
        budget: Search node budget
        strict: Raise instead of returning a non-minimal decomposition

    Returns:
        The decomposition (ties broken by the lexicographically smallest
        sequence of piece vertex sets), or None if b_graph is not A-degenerate

    Raises:
        UnsupportedPattern: a_graph has no vertices but b_graph does
        SearchBudgetExceeded: Budget exhausted with strict=True; `partial`
            carries the valid non-minimal decomposition
    """
    if a_graph.n == 0 and b_graph.n > 0:
        raise UnsupportedPattern("The empty pattern has no A-forests")
    if not is_A_degenerate(b_graph, a_graph):
        return None

    result = ForestSearch(b_graph, a_graph, budget).run()
    if strict and not result.minimal:
        raise SearchBudgetExceeded(
            f"Forest minimisation exceeded {budget} nodes", budget=budget, partial=result
        )
    return result


def extract_core(b_graph: Graph, a_graph: Graph) -> Graph:
    """
    Smallest block of b_graph not embeddable into a_graph (earliest block on ties).

    A 2-connected core cannot straddle a one-vertex attachment, so any copy
    of it inside an A-forest would sit inside one piece, hence inside A.

    Raises:
        IsDegenerate: Every block embeds into a_graph
    """
    offending = offending_blocks(b_graph, a_graph)
    if not offending:
        raise IsDegenerate("Every block embeds into the pattern; there is no core to extract")
    core = min(offending, key=lambda blk: blk.size)
    graph, _ = core.as_graph()
    logger.debug(f"Core: block with {core.size} vertices and {len(core.edges)} edges")
    return graph
