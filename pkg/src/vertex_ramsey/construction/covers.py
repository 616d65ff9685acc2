#!/usr/bin/env python3
"""
Inclusion-minimal trace covers of a core B' and the cover inequality.

A trace is a non-empty edge subset of B' whose edge subgraph embeds into
A (the part of an ambient copy of A that lies inside B'). A cover is a set
of traces whose union is E(B'); it is inclusion-minimal when every trace
owns an edge no other trace covers. For covers with at least two traces
that each share at least two vertices with the others, the vertex counts
satisfy sum(v_i) >= b + l.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from vertex_ramsey.core.embed import contains_copy
from vertex_ramsey.core.graph import Edge, Graph, edge_subgraph
from vertex_ramsey.errors import EnumerationTruncated, TooLarge
from vertex_ramsey.utils.config import DEFAULT_COVER_EDGE_CAP, DEFAULT_COVER_LIMIT

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trace:
    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]

    def sort_key(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def to_dict(self) -> Dict[str, object]:
        return {"vertices": sorted(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}


@dataclass(frozen=True)
class TraceCover:
    traces: Tuple[Trace, ...]

    @property
    def size(self) -> int:
        return len(self.traces)

    @property
    def v_sizes(self) -> Tuple[int, ...]:
        return tuple(len(t.vertices) for t in self.traces)

    @property
    def overlap_sizes(self) -> Tuple[int, ...]:
        sizes = []
        for i, trace in enumerate(self.traces):
            others: Set[int] = set()
            for j, other in enumerate(self.traces):
                if j != i:
                    others |= other.vertices
            sizes.append(len(trace.vertices & others))
        return tuple(sizes)

    @property
    def sum_v(self) -> int:
        return sum(self.v_sizes)

    def in_scope(self) -> bool:
        """At least two traces, each sharing at least two vertices with the rest."""
        return self.size >= 2 and min(self.overlap_sizes) >= 2

    def slack(self, b: int) -> int:
        return self.sum_v - b - self.size

    def to_dict(self) -> Dict[str, object]:
        return {
            "size": self.size,
            "v_sizes": list(self.v_sizes),
            "overlap_sizes": list(self.overlap_sizes),
            "sum_v": self.sum_v,
            "traces": [t.to_dict() for t in self.traces],
        }


def _traces(b_prime: Graph, a_graph: Graph) -> List[Trace]:
    edges = b_prime.sorted_edges()
    found = []
    for size in range(1, len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            graph, labels = edge_subgraph(subset)
            if len(labels) > a_graph.n or size > a_graph.num_edges:
                continue
            if contains_copy(graph, a_graph):
                found.append(Trace(vertices=frozenset(labels), edges=frozenset(subset)))
    return found


def enumerate_min_trace_covers(
    b_prime: Graph,
    a_graph: Graph,
    max_ell: Optional[int] = None,
    edge_cap: int = DEFAULT_COVER_EDGE_CAP,
    limit: int = DEFAULT_COVER_LIMIT,
) -> List[TraceCover]:
    """
    All inclusion-minimal covers of E(B') by A-embeddable traces.

    Args:
        b_prime: Graph whose edges are covered
        a_graph: Pattern each trace must embed into
        max_ell: Largest number of traces per cover (None for no bound)
        edge_cap: Largest |E(B')| handled
        limit: Largest number of covers returned

    Raises:
        TooLarge: |E(B')| over edge_cap
        EnumerationTruncated: More than `limit` covers
    """
    if b_prime.num_edges > edge_cap:
        raise TooLarge(f"|E(B')| = {b_prime.num_edges} exceeds the cover cap of {edge_cap}")
    if b_prime.num_edges == 0:
        return [TraceCover(traces=())]

    traces = _traces(b_prime, a_graph)
    by_edge: Dict[Edge, List[int]] = {e: [] for e in b_prime.sorted_edges()}
    for i, trace in enumerate(traces):
        for e in trace.edges:
            by_edge[e].append(i)
    order = b_prime.sorted_edges()

    covers: Set[FrozenSet[int]] = set()
    chosen: List[int] = []
    multiplicity: Dict[Edge, int] = {e: 0 for e in order}

    def minimal() -> bool:
        return all(any(multiplicity[e] == 1 for e in traces[i].edges) for i in chosen)

    def extend() -> None:
        uncovered = next((e for e in order if multiplicity[e] == 0), None)
        if uncovered is None:
            covers.add(frozenset(chosen))
            if len(covers) > limit:
                raise EnumerationTruncated(f"More than {limit} minimal covers", limit=limit)
            return
        if max_ell is not None and len(chosen) >= max_ell:
            return
        for i in by_edge[uncovered]:
            if i in chosen:
                continue
            chosen.append(i)
            for e in traces[i].edges:
                multiplicity[e] += 1
            if minimal():
                extend()
            for e in traces[i].edges:
                multiplicity[e] -= 1
            chosen.pop()

    extend()
    result = [
        TraceCover(traces=tuple(sorted((traces[i] for i in cover), key=Trace.sort_key)))
        for cover in covers
    ]
    result.sort(key=lambda c: (c.size, [t.sort_key() for t in c.traces]))
    logger.debug(f"{len(traces)} traces, {len(result)} minimal covers")
    return result


@dataclass(frozen=True)
class CoverInequalityReport:
    b: int
    covers: int
    in_scope: int
    violations: Tuple[TraceCover, ...]
    min_slack: Optional[int]
    minimizer: Optional[TraceCover]
    equality_cases: int
    cover_property_holds: bool
    ell_min: Optional[int]
    ell_max: Optional[int]

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, object]:
        return {
            "b": self.b,
            "covers": self.covers,
            "in_scope": self.in_scope,
            "holds": self.holds,
            "violations": [c.to_dict() for c in self.violations],
            "min_slack": self.min_slack,
            "minimizer": self.minimizer.to_dict() if self.minimizer else None,
            "equality_cases": self.equality_cases,
            "cover_property_holds": self.cover_property_holds,
            "ell_min": self.ell_min,
            "ell_max": self.ell_max,
        }


def verify_cover_inequality(
    b_prime: Graph,
    a_graph: Graph,
    covers: Optional[List[TraceCover]] = None,
    edge_cap: int = DEFAULT_COVER_EDGE_CAP,
    limit: int = DEFAULT_COVER_LIMIT,
) -> CoverInequalityReport:
    """
    Check sum(v_i) >= b + l over every in-scope minimal cover of B'.

    Also reports whether every minimal cover with l >= 2 has all overlaps
    >= 2, the property a core must have for the count bound.
    """
    if covers is None:
        covers = enumerate_min_trace_covers(b_prime, a_graph, edge_cap=edge_cap, limit=limit)
    b = b_prime.n
    multi = [c for c in covers if c.size >= 2]
    scoped = [c for c in multi if c.in_scope()]
    violations = tuple(c for c in scoped if c.slack(b) < 0)
    minimizer = min(scoped, key=lambda c: c.slack(b)) if scoped else None

    report = CoverInequalityReport(
        b=b,
        covers=len(covers),
        in_scope=len(scoped),
        violations=violations,
        min_slack=minimizer.slack(b) if minimizer else None,
        minimizer=minimizer,
        equality_cases=sum(1 for c in scoped if c.slack(b) == 0),
        cover_property_holds=all(min(c.overlap_sizes) >= 2 for c in multi),
        ell_min=min((c.size for c in multi), default=None),
        ell_max=max((c.size for c in multi), default=None),
    )
    if violations:
        logger.warning(f"{len(violations)} covers violate sum(v_i) >= b + l")
    return report


def expectation_exponent(b: int, covers: List[TraceCover], eps: float) -> Optional[float]:
    """max over minimal covers of b + l(1 + eps) - sum(v_i): the exponent of n in the expected core count."""
    values = [b + c.size * (1 + eps) - c.sum_v for c in covers if c.size >= 1]
    return max(values) if values else None
