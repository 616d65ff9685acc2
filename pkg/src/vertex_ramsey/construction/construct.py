#!/usr/bin/env python3
"""
End-to-end F-free dense construction and its Monte Carlo estimators.

construct_f_free_dense samples G_A(n, p), extracts a core B' from every
member of the family, deletes the smallest vertex of every core copy not
already hit, and checks the survivors directly: they must contain no
member of the family, and random N-subsets should still span copies of A.
"""

import logging
import math
import multiprocessing as mp
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from vertex_ramsey.construction.covers import (
    enumerate_min_trace_covers,
    expectation_exponent,
    verify_cover_inequality,
)
from vertex_ramsey.construction.params import ConstructionParams
from vertex_ramsey.construction.sampling import sample_copy_hypergraph, union_graph
from vertex_ramsey.core.embed import contains_copy, enumerate_copies
from vertex_ramsey.core.formats import write_graph6
from vertex_ramsey.core.graph import Graph, induced_subgraph
from vertex_ramsey.errors import (
    CertificateError,
    EnumerationTruncated,
    NotApplicable,
    ParamOutOfRange,
    TooLarge,
)
from vertex_ramsey.ramsey.degeneracy import extract_core, is_A_degenerate
from vertex_ramsey.ramsey.exact import subset_trial
from vertex_ramsey.utils.config import (
    DEFAULT_COPY_LIMIT,
    DEFAULT_COVER_EDGE_CAP,
    DEFAULT_DELETION_MULTIPLIER,
    DEFAULT_DENSITY_TRIALS,
    DEFAULT_SEED,
)
from vertex_ramsey.utils.logging import LoggingMixin

logger = logging.getLogger(__name__)


def _starmap(func, args: List[tuple], jobs: int) -> list:
    """Ordered map over argument tuples, in worker processes when jobs > 1."""
    if jobs <= 1 or len(args) <= 1:
        return [func(*a) for a in args]
    with mp.Pool(processes=jobs) as pool:
        return pool.starmap(func, args)


# ----------------------------------------------------------------------
# Density estimate
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DensityEstimate:
    subset_size: int
    trials: int
    hits: int
    seed: int

    @property
    def fraction(self) -> float:
        return self.hits / self.trials if self.trials else 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subset_size": self.subset_size,
            "trials": self.trials,
            "hits": self.hits,
            "fraction": self.fraction,
            "seed": self.seed,
        }


def estimate_density(
    g: Graph,
    a_graph: Graph,
    subset_size: int,
    trials: int = DEFAULT_DENSITY_TRIALS,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
) -> DensityEstimate:
    """
    Fraction of `trials` uniform subsets of the given size that span a copy of A.

    Raises:
        ParamOutOfRange: subset_size outside 0..n, or trials < 1
    """
    if not 0 <= subset_size <= g.n:
        raise ParamOutOfRange(f"Subset size {subset_size} outside 0..{g.n}")
    if trials < 1:
        raise ParamOutOfRange(f"trials must be >= 1, got {trials}")
    outcomes = _starmap(
        subset_trial, [(g, a_graph, subset_size, seed, t) for t in range(trials)], jobs
    )
    return DensityEstimate(subset_size=subset_size, trials=trials, hits=sum(outcomes), seed=seed)


# ----------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------


@dataclass
class CoreReport:
    member: int
    core_graph6: str
    core_vertices: int
    core_edges: int
    copies: int
    deletions: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "member": self.member,
            "core": self.core_graph6,
            "core_vertices": self.core_vertices,
            "core_edges": self.core_edges,
            "copies": self.copies,
            "deletions": self.deletions,
        }


@dataclass
class ConstructionReport:
    """Everything one run of the construction measured."""

    params: ConstructionParams
    copies_sampled: int
    edges: int
    cores: List[CoreReport]
    deletions: List[int]
    survivors: int
    f_free: List[bool]
    density: Optional[DensityEstimate] = None
    shrunk_density: Optional[DensityEstimate] = None
    graph6: str = ""

    @property
    def deletion_count(self) -> int:
        return len(self.deletions)

    @property
    def within_budget(self) -> bool:
        return self.deletion_count <= self.params.deletion_budget

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "copies_sampled": self.copies_sampled,
            "edges": self.edges,
            "cores": [c.to_dict() for c in self.cores],
            "deletions": list(self.deletions),
            "deletion_count": self.deletion_count,
            "deletion_budget": self.params.deletion_budget,
            "within_budget": self.within_budget,
            "deletions_over_sqrt_n": self.deletion_count / math.sqrt(self.params.n),
            "survivors": self.survivors,
            "f_free": list(self.f_free),
            "density": self.density.to_dict() if self.density else None,
            "shrunk_density": self.shrunk_density.to_dict() if self.shrunk_density else None,
            "graph6": self.graph6,
        }


class FFreeConstruction(LoggingMixin):
    """One seeded run of the construction for a pattern and a family."""

    def __init__(
        self,
        n: int,
        a_graph: Graph,
        family: Sequence[Graph],
        eps: float,
        seed: int = DEFAULT_SEED,
        deletion_multiplier: float = DEFAULT_DELETION_MULTIPLIER,
        density_trials: int = DEFAULT_DENSITY_TRIALS,
        copy_limit: Optional[int] = DEFAULT_COPY_LIMIT,
        p: Optional[float] = None,
        clamp: bool = True,
        jobs: int = 1,
    ):
        if not family:
            raise ParamOutOfRange("The forbidden family is empty")
        if density_trials < 1:
            raise ParamOutOfRange(f"density_trials must be >= 1, got {density_trials}")
        for i, member in enumerate(family):
            check = is_A_degenerate(member, a_graph)
            if check.degenerate:
                raise NotApplicable(
                    f"Family member {i} is A-degenerate; every A-dense graph contains it"
                )

        self.a_graph = a_graph
        self.family = list(family)
        self.cores = [extract_core(member, a_graph) for member in self.family]
        self.density_trials = density_trials
        self.copy_limit = copy_limit
        self.jobs = jobs
        self.params = ConstructionParams.for_pattern(
            n,
            a_graph,
            eps,
            k_edges=max(core.num_edges for core in self.cores),
            deletion_multiplier=deletion_multiplier,
            seed=seed,
            p=p,
            clamp=clamp,
        )

    def _delete_core_copies(self, g: Graph) -> Tuple[List[int], List[CoreReport]]:
        deleted = set()
        reports = []
        for i, core in enumerate(self.cores):
            enumeration = enumerate_copies(core, g, limit=self.copy_limit)
            if enumeration.truncated:
                raise EnumerationTruncated(
                    f"More than {self.copy_limit} copies of the core of member {i}",
                    limit=self.copy_limit,
                )
            report = CoreReport(
                member=i,
                core_graph6=write_graph6(core),
                core_vertices=core.n,
                core_edges=core.num_edges,
                copies=len(enumeration),
            )
            for c in enumeration.copies:
                if c.vertices & deleted:
                    continue
                deleted.add(min(c.vertices))
                report.deletions += 1
            reports.append(report)
            self.log_debug(f"Core {i}: {report.copies} copies, {report.deletions} deletions")
        return sorted(deleted), reports

    def run(self) -> Tuple[Graph, ConstructionReport]:
        params = self.params
        sample = sample_copy_hypergraph(params, self.a_graph)
        g = union_graph(sample)
        self.log_info(f"Sampled {len(sample)} copies, {g.num_edges} edges on n={params.n}")

        deletions, core_reports = self._delete_core_copies(g)
        survivors = [v for v in range(params.n) if v not in set(deletions)]
        result, _ = induced_subgraph(g, survivors)

        f_free = [not contains_copy(member, result) for member in self.family]
        if not all(f_free):
            raise CertificateError("A family member survived the deletion of every core copy")

        report = ConstructionReport(
            params=params,
            copies_sampled=len(sample),
            edges=g.num_edges,
            cores=core_reports,
            deletions=deletions,
            survivors=result.n,
            f_free=f_free,
            graph6=write_graph6(result),
        )
        if not report.within_budget:
            self.log_warning(
                f"{report.deletion_count} deletions exceed C*sqrt(n) = {params.deletion_budget:.2f}"
            )

        if params.N <= result.n:
            report.density = estimate_density(
                result, self.a_graph, params.N, self.density_trials, params.seed, self.jobs
            )
        shrunk = math.floor(result.n ** (1 - params.delta)) if result.n else 0
        if 0 < shrunk <= result.n:
            report.shrunk_density = estimate_density(
                result, self.a_graph, shrunk, self.density_trials, params.seed, self.jobs
            )
        return result, report


def construct_f_free_dense(
    n: int,
    a_graph: Graph,
    family: Sequence[Graph],
    eps: float,
    seed: int = DEFAULT_SEED,
    deletion_multiplier: float = DEFAULT_DELETION_MULTIPLIER,
    density_trials: int = DEFAULT_DENSITY_TRIALS,
    copy_limit: Optional[int] = DEFAULT_COPY_LIMIT,
    p: Optional[float] = None,
    clamp: bool = True,
    jobs: int = 1,
) -> Tuple[Graph, ConstructionReport]:
    """
    Sample G_A(n, p) and delete one vertex from every core copy.

    Returns:
        (survivor graph relabelled 0..n~-1, report)

    Raises:
        NotApplicable: A family member is A-degenerate
        EnumerationTruncated: Too many core copies to enumerate
        ParamOutOfRange: Invalid parameters (see ConstructionParams)
    """
    construction = FFreeConstruction(
        n, a_graph, family, eps,
        seed=seed,
        deletion_multiplier=deletion_multiplier,
        density_trials=density_trials,
        copy_limit=copy_limit,
        p=p,
        clamp=clamp,
        jobs=jobs,
    )
    return construction.run()


# ----------------------------------------------------------------------
# Copy count estimate
# ----------------------------------------------------------------------


def _core_count_trial(
    params: ConstructionParams, b_prime: Graph, a_graph: Graph, trial: int, limit: Optional[int]
) -> int:
    g = union_graph(sample_copy_hypergraph(params, a_graph, trial))
    enumeration = enumerate_copies(b_prime, g, limit=limit)
    if enumeration.truncated:
        raise EnumerationTruncated(f"Trial {trial}: more than {limit} copies of B'", limit=limit)
    return len(enumeration)


@dataclass
class CopyCountEstimate:
    params: ConstructionParams
    counts: List[int]
    sqrt_n: float
    ell_min: Optional[int] = None
    exponent_bound: Optional[float] = None
    exact_exponent: Optional[float] = None
    cover_property_holds: Optional[bool] = None

    @property
    def mean(self) -> float:
        return float(np.mean(self.counts)) if self.counts else 0.0

    @property
    def maximum(self) -> int:
        return max(self.counts, default=0)

    @property
    def within_sqrt_n(self) -> float:
        """Fraction of trials with X <= sqrt(n)."""
        if not self.counts:
            return 0.0
        return sum(1 for x in self.counts if x <= self.sqrt_n) / len(self.counts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "trials": len(self.counts),
            "counts": list(self.counts),
            "mean": self.mean,
            "max": self.maximum,
            "sqrt_n": self.sqrt_n,
            "within_sqrt_n": self.within_sqrt_n,
            "exceedance": 1.0 - self.within_sqrt_n if self.counts else 0.0,
            "ell_min": self.ell_min,
            "exponent_bound": self.exponent_bound,
            "exact_exponent": self.exact_exponent,
            "cover_property_holds": self.cover_property_holds,
        }


def estimate_copy_count(
    b_prime: Graph,
    a_graph: Graph,
    n: int,
    eps: float,
    trials: int = 100,
    seed: int = DEFAULT_SEED,
    p: Optional[float] = None,
    clamp: bool = True,
    jobs: int = 1,
    copy_limit: Optional[int] = DEFAULT_COPY_LIMIT,
    cover_edge_cap: int = DEFAULT_COVER_EDGE_CAP,
) -> CopyCountEstimate:
    """
    Copies of B' in independent samples of G_A(n, p), with the theoretical
    exponent l_min * eps alongside the exact exponent of the expectation.

    Covers are skipped (exponents left empty) when |E(B')| is over the cap.
    """
    if trials < 1:
        raise ParamOutOfRange(f"trials must be >= 1, got {trials}")
    params = ConstructionParams.for_pattern(
        n, a_graph, eps, k_edges=max(1, b_prime.num_edges), seed=seed, p=p, clamp=clamp
    )
    counts = _starmap(
        _core_count_trial,
        [(params, b_prime, a_graph, t, copy_limit) for t in range(trials)],
        jobs,
    )
    estimate = CopyCountEstimate(params=params, counts=list(counts), sqrt_n=math.sqrt(n))

    try:
        covers = enumerate_min_trace_covers(b_prime, a_graph, edge_cap=cover_edge_cap)
    except TooLarge:
        logger.info(f"Skipping cover exponents: |E(B')| = {b_prime.num_edges} > {cover_edge_cap}")
        return estimate
    report = verify_cover_inequality(b_prime, a_graph, covers=covers)
    estimate.ell_min = report.ell_min
    estimate.exponent_bound = report.ell_min * eps if report.ell_min is not None else None
    estimate.exact_exponent = expectation_exponent(b_prime.n, covers, eps)
    estimate.cover_property_holds = report.cover_property_holds
    return estimate
