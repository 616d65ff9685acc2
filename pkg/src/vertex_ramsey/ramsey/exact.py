#!/usr/bin/env python3
"""
Exact desk-scale decisions: vertex r-Ramseyness and epsilon-density.

G is r-Ramsey for A iff the hypergraph of copy vertex sets has no r-colouring
without a monochromatic hyperedge. The search colours vertices in id order,
checks each hyperedge when its largest vertex is coloured, fixes vertex 0
to colour 0 and only opens colour c+1 after colour c is in use.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

import numpy as np

from vertex_ramsey.core.embed import Copy, contains_copy, enumerate_copies
from vertex_ramsey.core.graph import Graph, VertexColoring, induced_subgraph
from vertex_ramsey.errors import (
    CertificateError,
    EnumerationTruncated,
    ParamOutOfRange,
    SubsetSpaceTooLarge,
    UnsupportedPattern,
)
from vertex_ramsey.ramsey.colorer import verify_coloring
from vertex_ramsey.utils.config import (
    DEFAULT_COPY_LIMIT,
    DEFAULT_DENSITY_TRIALS,
    DEFAULT_RAMSEY_NODES,
    DEFAULT_SEED,
    DEFAULT_SUBSET_CAP,
)
from vertex_ramsey.utils.logging import LoggingMixin

logger = logging.getLogger(__name__)

Rational = Union[int, float, str, Fraction]

# Second seed word of the density trial generators.
DENSITY_STREAM = 1


def as_fraction(value: Rational) -> Fraction:
    """Exact rational from the decimal text of a float, or from int/str/Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class CopyHypergraph:
    """Distinct vertex sets of copies of A, each with one witness copy."""

    n: int
    hyperedges: Tuple[FrozenSet[int], ...]
    witnesses: Tuple[Copy, ...]

    def __len__(self) -> int:
        return len(self.hyperedges)

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "count": len(self.hyperedges),
            "hyperedges": [sorted(h) for h in self.hyperedges],
        }


def copy_hypergraph(g: Graph, a_graph: Graph, limit: Optional[int] = DEFAULT_COPY_LIMIT) -> CopyHypergraph:
    """
    Hypergraph of copy vertex sets of A in g.

    Raises:
        EnumerationTruncated: More than `limit` copies
    """
    enumeration = enumerate_copies(a_graph, g, limit=limit)
    if enumeration.truncated:
        raise EnumerationTruncated(
            f"Copy hypergraph needs more than {limit} copies", limit=limit
        )
    witnesses: Dict[FrozenSet[int], Copy] = {}
    for c in enumeration.copies:
        witnesses.setdefault(c.vertices, c)
    keys = sorted(witnesses, key=lambda h: tuple(sorted(h)))
    return CopyHypergraph(
        n=g.n,
        hyperedges=tuple(keys),
        witnesses=tuple(witnesses[h] for h in keys),
    )


@dataclass(frozen=True)
class RamseyDecision:
    """`ramsey` is None when the search budget ran out."""

    ramsey: Optional[bool]
    r: int
    witness: Optional[VertexColoring] = None
    nodes: int = 0
    hyperedges: int = 0
    reason: Optional[str] = None

    @property
    def decided(self) -> bool:
        return self.ramsey is not None

    def to_dict(self) -> Dict[str, object]:
        return {
            "ramsey": self.ramsey,
            "r": self.r,
            "witness": self.witness.to_dict() if self.witness else None,
            "nodes": self.nodes,
            "hyperedges": self.hyperedges,
            "reason": self.reason,
        }


class _NodesSpent(Exception):
    pass


class ColoringSearch(LoggingMixin):
    """Backtracking search for an r-colouring with no monochromatic hyperedge."""

    def __init__(self, hypergraph: CopyHypergraph, r: int, budget: int = DEFAULT_RAMSEY_NODES):
        self.n = hypergraph.n
        self.r = r
        self.budget = budget
        self.nodes = 0
        self.by_max: List[List[int]] = [[] for _ in range(self.n)]
        for h in hypergraph.hyperedges:
            if h:
                self.by_max[max(h)].append(sum(1 << v for v in h))

    def _assign(self, v: int, top: int, colors: List[int], classes: List[int]) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _NodesSpent()
        if v == self.n:
            return True
        bit = 1 << v
        for c in range(min(self.r - 1, top + 1) + 1):
            mask = classes[c] | bit
            if any(h & mask == h for h in self.by_max[v]):
                continue
            classes[c] = mask
            colors[v] = c
            if self._assign(v + 1, max(top, c), colors, classes):
                return True
            classes[c] ^= bit
        colors[v] = -1
        return False

    def run(self) -> Optional[List[int]]:
        """
        Returns:
            A valid colouring, or None if none exists

        Raises:
            _NodesSpent: Budget exhausted
        """
        colors = [-1] * self.n
        classes = [0] * self.r
        if self._assign(0, -1, colors, classes):
            return colors
        return None


def is_r_ramsey(
    g: Graph,
    a_graph: Graph,
    r: int,
    budget: int = DEFAULT_RAMSEY_NODES,
    copy_limit: Optional[int] = DEFAULT_COPY_LIMIT,
) -> RamseyDecision:
    """
    Decide whether every r-colouring of g has a monochromatic copy of A.

    Raises:
        ParamOutOfRange: r < 1
        UnsupportedPattern: A is empty or has isolated vertices
        EnumerationTruncated: The copy hypergraph is over `copy_limit`
        CertificateError: The witness colouring failed verification
    """
    if r < 1:
        raise ParamOutOfRange(f"r must be >= 1, got {r}")
    if a_graph.n == 0 or a_graph.isolated_vertices():
        raise UnsupportedPattern("Patterns with isolated vertices are not supported here")

    hypergraph = copy_hypergraph(g, a_graph, copy_limit)
    search = ColoringSearch(hypergraph, r, budget)
    try:
        colors = search.run()
    except _NodesSpent:
        search.log_warning(f"Ramsey search stopped after {budget} nodes (n={g.n}, r={r})")
        return RamseyDecision(
            ramsey=None, r=r, nodes=search.nodes, hyperedges=len(hypergraph),
            reason=f"search budget of {budget} nodes exhausted",
        )

    if colors is None:
        return RamseyDecision(ramsey=True, r=r, nodes=search.nodes, hyperedges=len(hypergraph))

    witness = VertexColoring(tuple(colors))
    if not verify_coloring(g, a_graph, witness):
        raise CertificateError("Ramsey search produced a colouring with a monochromatic copy")
    return RamseyDecision(
        ramsey=False, r=r, witness=witness, nodes=search.nodes, hyperedges=len(hypergraph)
    )


# ----------------------------------------------------------------------
# Density
# ----------------------------------------------------------------------


def subset_size(n: int, eps: Rational) -> int:
    """floor(eps * n), computed exactly."""
    return math.floor(as_fraction(eps) * n)


def trial_generator(seed: int, trial: int, stream: int = DENSITY_STREAM) -> np.random.Generator:
    """Generator of one Monte Carlo trial; independent of every other trial index."""
    return np.random.default_rng((seed ^ trial, stream))


def subset_trial(g: Graph, a_graph: Graph, size: int, seed: int, trial: int) -> bool:
    """Does a uniformly random `size`-subset of g (trial `trial`) span a copy of A?"""
    rng = trial_generator(seed, trial)
    chosen = rng.choice(g.n, size=size, replace=False)
    sub, _ = induced_subgraph(g, (int(v) for v in chosen))
    return contains_copy(a_graph, sub)


@dataclass(frozen=True)
class DensityResult:
    """Exact mode fills `dense`/`witness`; sampled mode fills `hits`/`fraction`."""

    mode: str
    eps: str
    subset_size: int
    dense: Optional[bool] = None
    witness: Optional[Tuple[int, ...]] = None
    subsets_checked: int = 0
    trials: int = 0
    hits: int = 0
    seed: Optional[int] = None

    @property
    def fraction(self) -> Optional[float]:
        return self.hits / self.trials if self.trials else None

    def to_dict(self) -> Dict[str, object]:
        return {
            "mode": self.mode,
            "eps": self.eps,
            "subset_size": self.subset_size,
            "dense": self.dense,
            "witness": list(self.witness) if self.witness is not None else None,
            "subsets_checked": self.subsets_checked,
            "trials": self.trials,
            "hits": self.hits,
            "fraction": self.fraction,
            "seed": self.seed,
        }


def is_eps_dense(
    g: Graph,
    a_graph: Graph,
    eps: Rational,
    mode: str = "exact",
    trials: int = DEFAULT_DENSITY_TRIALS,
    seed: int = DEFAULT_SEED,
    cap: int = DEFAULT_SUBSET_CAP,
) -> DensityResult:
    """
    Does every induced subgraph on floor(eps*n) vertices contain a copy of A?

    Args:
        g: Host graph
        a_graph: Pattern
        eps: Density in (0, 1]; floats are read through their decimal text
        mode: "exact" (all subsets) or "sampled" (`trials` uniform subsets)
        trials: Sampled mode trial count
        seed: Sampled mode master seed
        cap: Largest subset count exact mode will enumerate

    Raises:
        ParamOutOfRange: eps outside (0, 1], floor(eps*n) < 1, or unknown mode
        SubsetSpaceTooLarge: Exact mode over `cap` subsets
    """
    frac = as_fraction(eps)
    if not 0 < frac <= 1:
        raise ParamOutOfRange(f"eps must lie in (0, 1], got {eps}")
    size = subset_size(g.n, frac)
    if size < 1:
        raise ParamOutOfRange(f"floor(eps*n) = 0 for eps={eps}, n={g.n}")
    label = str(frac)

    if mode == "exact":
        total = math.comb(g.n, size)
        if total > cap:
            raise SubsetSpaceTooLarge(
                f"C({g.n}, {size}) = {total} subsets exceeds the cap of {cap}"
            )
        checked = 0
        for subset in itertools.combinations(range(g.n), size):
            checked += 1
            sub, _ = induced_subgraph(g, subset)
            if not contains_copy(a_graph, sub):
                return DensityResult(
                    mode=mode, eps=label, subset_size=size, dense=False,
                    witness=tuple(subset), subsets_checked=checked,
                )
        return DensityResult(mode=mode, eps=label, subset_size=size, dense=True, subsets_checked=checked)

    if mode == "sampled":
        if trials < 1:
            raise ParamOutOfRange(f"trials must be >= 1, got {trials}")
        hits = sum(1 for t in range(trials) if subset_trial(g, a_graph, size, seed, t))
        return DensityResult(
            mode=mode, eps=label, subset_size=size, trials=trials, hits=hits, seed=seed
        )

    raise ParamOutOfRange(f"Unknown density mode '{mode}'. Available: ['exact', 'sampled']")


@dataclass(frozen=True)
class DensityRamseyCheck:
    r: int
    density: DensityResult

    @property
    def ramsey_implied(self) -> bool:
        return bool(self.density.dense)

    def to_dict(self) -> Dict[str, object]:
        return {
            "r": self.r,
            "ramsey_implied": self.ramsey_implied,
            "density": self.density.to_dict(),
        }


def density_implies_ramsey(
    g: Graph, a_graph: Graph, r: int, cap: int = DEFAULT_SUBSET_CAP
) -> DensityRamseyCheck:
    """
    1/r-density settles r-Ramseyness: the largest class of an r-colouring has
    at least floor(n/r) vertices, so it spans a copy of A.
    """
    if r < 1:
        raise ParamOutOfRange(f"r must be >= 1, got {r}")
    return DensityRamseyCheck(r=r, density=is_eps_dense(g, a_graph, Fraction(1, r), cap=cap))
