#!/usr/bin/env python3
"""
Binomial copy hypergraph H_A(n, p) and its union graph G_A(n, p).

The number of kept copies is drawn first, K ~ Binomial(T, p), then K
distinct copies uniformly: by rejection over random injections when K is
at most half of T, otherwise by choosing indices into the full list of
copies. Both give the same law as keeping each copy independently.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Set, Tuple

import numpy as np

from vertex_ramsey.construction.params import MAX_TOTAL_COPIES, ConstructionParams
from vertex_ramsey.core.embed import Copy, Embedding, enumerate_copies
from vertex_ramsey.core.graph import Graph
from vertex_ramsey.errors import ParamOutOfRange

logger = logging.getLogger(__name__)

# Second seed word of the hypergraph sample generators.
SAMPLE_STREAM = 0


@dataclass(frozen=True)
class CopyHypergraphSample:
    """Kept copies of A on [n], sorted by (vertices, edges)."""

    params: ConstructionParams
    copies: Tuple[Copy, ...]
    trial: int = 0

    def __len__(self) -> int:
        return len(self.copies)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trial": self.trial,
            "count": len(self.copies),
            "expected": self.params.total_copies * self.params.p,
            "params": self.params.to_dict(),
        }


def sample_generator(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng((seed ^ trial, SAMPLE_STREAM))


def sample_copy_hypergraph(
    params: ConstructionParams, a_graph: Graph, trial: int = 0
) -> CopyHypergraphSample:
    """
    Draw H_A(n, p) for one trial index.

    Raises:
        ParamOutOfRange: a_graph does not match params, or T is not representable
    """
    if a_graph.n != params.a:
        raise ParamOutOfRange(f"Pattern has {a_graph.n} vertices, parameters say a={params.a}")
    total = params.total_copies
    if total > MAX_TOTAL_COPIES:
        raise ParamOutOfRange(f"T = {total} copies is too large to sample")

    rng = sample_generator(params.seed, trial)
    if params.p <= 0 or total == 0:
        count = 0
    elif params.p >= 1:
        count = total
    else:
        count = int(rng.binomial(total, params.p))

    if count == 0:
        chosen: List[Copy] = []
    elif 2 * count > total:
        everything = enumerate_copies(a_graph, Graph.complete(params.n), limit=None).copies
        if len(everything) != total:
            raise ParamOutOfRange(
                f"Found {len(everything)} copies of A in K_{params.n}, expected {total}; is aut(A) right?"
            )
        picks = rng.choice(total, size=count, replace=False)
        chosen = [everything[int(i)] for i in picks]
    else:
        seen: Set[Copy] = set()
        chosen = []
        while len(chosen) < count:
            mapping = rng.choice(params.n, size=params.a, replace=False)
            image = Embedding.from_mapping(a_graph, (int(x) for x in mapping)).copy()
            if image not in seen:
                seen.add(image)
                chosen.append(image)

    logger.debug(f"Trial {trial}: kept {count} of {total} copies (p={params.p:.6g})")
    return CopyHypergraphSample(
        params=params,
        copies=tuple(sorted(chosen, key=Copy.sort_key)),
        trial=trial,
    )


def union_graph(sample: CopyHypergraphSample) -> Graph:
    """G_A(n, p): every edge of every kept copy."""
    edges = set()
    for c in sample.copies:
        edges |= c.edges
    return Graph(sample.params.n, frozenset(edges))
