#!/usr/bin/env python3
"""
Graph representation shared by every module.

Graphs are simple, undirected, immutable and labelled 0..n-1. Two graphs
are equal exactly when their vertex counts and edge sets are equal;
isomorphism is never implied.
"""

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from vertex_ramsey.errors import InvalidVertex, MalformedInput

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge {u, v} as an ordered pair (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: FrozenSet[Edge] = frozenset()
    _adj: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidVertex(f"Vertex count must be non-negative, got {self.n}")

        normalized = set()
        adjacency: List[set] = [set() for _ in range(self.n)]
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise MalformedInput(f"Loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidVertex(f"Edge {edge} has an endpoint outside 0..{self.n - 1}")
            normalized.add(normalize_edge(u, v))
            adjacency[u].add(v)
            adjacency[v].add(u)

        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adjacency))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        """Path on n vertices (n-1 edges)."""
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise MalformedInput(f"A cycle needs at least 3 vertices, got {n}")
        return cls(n, frozenset(normalize_edge(i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        """Star with centre 0 and the given number of leaves."""
        return cls(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def isolated_vertices(self) -> List[int]:
        return [v for v in range(self.n) if not self._adj[v]]

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges | {normalize_edge(u, v)})

    def to_dict(self) -> Dict[str, object]:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


@dataclass(frozen=True)
class VertexColoring:
    """Total colouring of a graph's vertices; colors[v] is the colour of v."""

    colors: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise ValueError("Colour ids must be non-negative")

    @classmethod
    def from_mapping(cls, n: int, mapping: Dict[int, int]) -> "VertexColoring":
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise ValueError(f"Colouring misses vertices {missing[:5]}")
        return cls(tuple(mapping[v] for v in range(n)))

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def color_classes(self) -> Dict[int, List[int]]:
        classes: Dict[int, List[int]] = {}
        for v, c in enumerate(self.colors):
            classes.setdefault(c, []).append(v)
        return classes

    def to_dict(self) -> Dict[str, object]:
        return {"colors": list(self.colors), "palette_size": self.palette_size}


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Induced subgraph on a vertex set, relabelled 0..|s|-1 in increasing order.

    Returns:
        (subgraph, labels) where labels[new_id] is the original vertex id
    """
    labels = tuple(sorted(set(vertices)))
    for v in labels:
        if not 0 <= v < g.n:
            raise InvalidVertex(f"Vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(labels)}
    edges = frozenset(
        (index[u], index[v]) for (u, v) in g.edges if u in index and v in index
    )
    return Graph(len(labels), edges), labels


def edge_subgraph(edges: Iterable[Edge]) -> Tuple[Graph, Tuple[int, ...]]:
    """Graph formed by an edge set (vertices = endpoints), relabelled like induced_subgraph."""
    edge_list = [normalize_edge(u, v) for u, v in edges]
    labels = tuple(sorted({x for e in edge_list for x in e}))
    index = {v: i for i, v in enumerate(labels)}
    return Graph(len(labels), frozenset((index[u], index[v]) for u, v in edge_list)), labels


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; the i-th graph's vertices follow those of graphs 0..i-1."""
    offset = 0
    edges = set()
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def connected_components(g: Graph) -> List[List[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        component = []
        while queue:
            v = queue.popleft()
            component.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        components.append(sorted(component))
    return components


_NAMED = re.compile(r"^(K|C|P|E|S|friendship)(\d+)$")


def named_graph(name: str) -> Graph:
    """
    Build a graph from a catalogue name.

    Recognised: K<n>, C<n>, P<n> (n vertices), E<n> (edgeless), S<n> (star
    with n leaves), friendship<k> (k triangles sharing vertex 0), bowtie,
    diamond.

    Raises:
        MalformedInput: If the name is not in the catalogue.
    """
    if name == "bowtie":
        return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    if name == "diamond":
        return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])

    match = _NAMED.match(name)
    if not match:
        raise MalformedInput(f"Unknown graph name '{name}'")
    kind, size = match.group(1), int(match.group(2))
    if kind == "K":
        return Graph.complete(size)
    if kind == "C":
        return Graph.cycle(size)
    if kind == "P":
        return Graph.path(size)
    if kind == "E":
        return Graph.empty(size)
    if kind == "S":
        return Graph.star(size)
    edges = []
    for i in range(size):
        a, b = 2 * i + 1, 2 * i + 2
        edges.extend([(0, a), (0, b), (a, b)])
    return Graph.from_edges(2 * size + 1, edges)


def is_named_graph(name: str) -> bool:
    return name in ("bowtie", "diamond") or bool(_NAMED.match(name))
