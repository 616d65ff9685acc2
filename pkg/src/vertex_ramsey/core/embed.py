#!/usr/bin/env python3
"""
Subgraph isomorphism: enumerate, count and pin copies of a pattern in a host.

Backtracking over a connected pattern-vertex order that maximises edges
back to already-placed vertices; candidates come from the intersection of
the neighbourhoods of placed neighbours and are filtered by degree. An
embedding is an injective edge-preserving map; a copy is its image
subgraph, so embeddings differing by a pattern automorphism give one copy.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from vertex_ramsey.core.graph import Edge, Graph, normalize_edge
from vertex_ramsey.errors import InvalidVertex
from vertex_ramsey.utils.config import DEFAULT_COPY_LIMIT

logger = logging.getLogger(__name__)

Pin = Tuple[int, int]


@dataclass(frozen=True)
class Copy:
    """Image subgraph of a pattern inside a host."""

    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]

    def sort_key(self) -> Tuple[Tuple[int, ...], Tuple[Edge, ...]]:
        return tuple(sorted(self.vertices)), tuple(sorted(self.edges))

    def to_dict(self) -> Dict[str, object]:
        return {
            "vertices": sorted(self.vertices),
            "edges": [list(e) for e in sorted(self.edges)],
        }


@dataclass(frozen=True)
class Embedding:
    """Injective edge-preserving map; mapping[i] is the host image of pattern vertex i."""

    mapping: Tuple[int, ...]
    image_edges: FrozenSet[Edge]

    @classmethod
    def from_mapping(cls, pattern: Graph, mapping) -> "Embedding":
        mapping = tuple(mapping)
        return cls(
            mapping=mapping,
            image_edges=frozenset(normalize_edge(mapping[u], mapping[v]) for u, v in pattern.edges),
        )

    @property
    def pattern_n(self) -> int:
        return len(self.mapping)

    @property
    def image_vertices(self) -> FrozenSet[int]:
        return frozenset(self.mapping)

    def role_of(self, host_vertex: int) -> int:
        return self.mapping.index(host_vertex)

    def copy(self) -> Copy:
        return Copy(vertices=self.image_vertices, edges=self.image_edges)

    def is_valid(self, pattern: Graph, host: Graph) -> bool:
        """Re-check injectivity and edge preservation against the graphs."""
        if len(self.mapping) != pattern.n or len(set(self.mapping)) != pattern.n:
            return False
        if any(not 0 <= x < host.n for x in self.mapping):
            return False
        return all(host.has_edge(self.mapping[u], self.mapping[v]) for u, v in pattern.edges)

    def to_dict(self) -> Dict[str, object]:
        return {
            "map": list(self.mapping),
            "image_vertices": sorted(self.image_vertices),
            "image_edges": [list(e) for e in sorted(self.image_edges)],
        }


@dataclass(frozen=True)
class CopyEnumeration:
    """Distinct copies found, with an explicit truncation flag."""

    copies: Tuple[Copy, ...]
    truncated: bool
    limit: Optional[int]

    def __len__(self) -> int:
        return len(self.copies)

    def to_dict(self) -> Dict[str, object]:
        return {
            "count": len(self.copies),
            "truncated": self.truncated,
            "limit": self.limit,
            "copies": [c.to_dict() for c in self.copies],
        }


class SubgraphMatcher:
    """Backtracking matcher for one (pattern, host) pair."""

    def __init__(self, pattern: Graph, host: Graph, lexicographic: bool = False):
        """
        Args:
            pattern: Pattern graph
            host: Host graph
            lexicographic: Place pattern vertices in natural order so that
                embeddings come out in lexicographic order of their mapping
        """
        self.pattern = pattern
        self.host = host
        self.lexicographic = lexicographic

    def _order(self, first: Optional[int]) -> List[int]:
        p = self.pattern
        if p.n == 0:
            return []
        if self.lexicographic:
            return list(range(p.n))
        placed: List[int] = []
        remaining = set(range(p.n))
        links = [0] * p.n
        while remaining:
            if not placed and first is not None:
                u = first
            else:
                u = max(remaining, key=lambda x: (links[x], p.degree(x), -x))
            placed.append(u)
            remaining.discard(u)
            for w in p.neighbors(u):
                links[w] += 1
        return placed

    def iter_embeddings(self, pin: Optional[Pin] = None) -> Iterator[Tuple[int, ...]]:
        """Yield every embedding as a mapping tuple, in deterministic order."""
        p, h = self.pattern, self.host
        if pin is not None:
            k, v = pin
            if not 0 <= k < p.n:
                raise InvalidVertex(f"Pin role {k} outside pattern vertices 0..{p.n - 1}")
            if not 0 <= v < h.n:
                raise InvalidVertex(f"Pin vertex {v} outside host vertices 0..{h.n - 1}")
        if p.n > h.n or p.num_edges > h.num_edges:
            return

        order = self._order(pin[0] if pin is not None else None)
        position = {u: i for i, u in enumerate(order)}
        back = [
            sorted((w for w in p.neighbors(u) if position[w] < i), key=position.get)
            for i, u in enumerate(order)
        ]
        mapping = [-1] * p.n
        used = set()
        all_host = list(range(h.n))

        reserved = pin[1] if pin is not None else None

        def candidates(i: int) -> List[int]:
            u = order[i]
            if pin is not None and u == pin[0]:
                v = pin[1]
                pool = [v] if all(h.has_edge(mapping[w], v) for w in back[i]) else []
                return [c for c in pool if c not in used and h.degree(c) >= p.degree(u)]
            if back[i]:
                anchors = [h.neighbors(mapping[w]) for w in back[i]]
                anchors.sort(key=len)
                pool = sorted(anchors[0].intersection(*anchors[1:]))
            else:
                pool = all_host
            need = p.degree(u)
            return [c for c in pool if c not in used and c != reserved and h.degree(c) >= need]

        def extend(i: int) -> Iterator[Tuple[int, ...]]:
            if i == len(order):
                yield tuple(mapping)
                return
            u = order[i]
            for c in candidates(i):
                mapping[u] = c
                used.add(c)
                yield from extend(i + 1)
                used.discard(c)
                mapping[u] = -1

        yield from extend(0)


def iter_embeddings(
    pattern: Graph, host: Graph, pin: Optional[Pin] = None
) -> Iterator[Embedding]:
    for mapping in SubgraphMatcher(pattern, host).iter_embeddings(pin):
        yield Embedding.from_mapping(pattern, mapping)


def find_embedding(
    pattern: Graph,
    host: Graph,
    pin: Optional[Pin] = None,
    lexicographic: bool = False,
) -> Optional[Embedding]:
    """First embedding in search order (the lexicographically smallest one if requested), or None."""
    for mapping in SubgraphMatcher(pattern, host, lexicographic).iter_embeddings(pin):
        return Embedding.from_mapping(pattern, mapping)
    return None


def contains_copy(pattern: Graph, host: Graph) -> bool:
    """True iff the host has a (not necessarily induced) copy of the pattern."""
    return find_embedding(pattern, host) is not None


def count_embeddings(pattern: Graph, host: Graph, pin: Optional[Pin] = None) -> int:
    return sum(1 for _ in SubgraphMatcher(pattern, host).iter_embeddings(pin))


def automorphism_count(g: Graph) -> int:
    """Number of edge-preserving bijections of g onto itself."""
    return count_embeddings(g, g)


def enumerate_copies(
    pattern: Graph,
    host: Graph,
    pin: Optional[Pin] = None,
    limit: Optional[int] = DEFAULT_COPY_LIMIT,
) -> CopyEnumeration:
    """
    Distinct copies of pattern in host, sorted by (vertices, edges).

    Args:
        pattern: Pattern graph
        host: Host graph
        pin: Optional (role k, host vertex v); keeps copies admitting an
            embedding with k mapped to v
        limit: Stop once more than `limit` distinct copies exist
            (None for no limit); the result is then flagged truncated

    Returns:
        CopyEnumeration with the copies and the truncation flag
    """
    seen = set()
    found: List[Copy] = []
    truncated = False
    for mapping in SubgraphMatcher(pattern, host).iter_embeddings(pin):
        image = Embedding.from_mapping(pattern, mapping).copy()
        if image in seen:
            continue
        if limit is not None and len(found) >= limit:
            truncated = True
            break
        seen.add(image)
        found.append(image)

    if truncated:
        logger.warning(
            f"Copy enumeration truncated at {limit} copies "
            f"(pattern n={pattern.n}, host n={host.n})"
        )
    found.sort(key=Copy.sort_key)
    return CopyEnumeration(copies=tuple(found), truncated=truncated, limit=limit)
