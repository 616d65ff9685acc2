#!/usr/bin/env python3
"""
Parameters of the random F-free dense construction.

Copies of A on [n] are kept with probability p = n^(1-a+eps). The union
graph is expected to be n^(-delta0)-dense at subset size
N = floor(n^(1-delta0)) with delta0 = eps / (2(a-1)); after deleting up to
C*sqrt(n) vertices it stays dense with delta = delta0 / 2.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from vertex_ramsey.core.embed import automorphism_count
from vertex_ramsey.core.graph import Graph
from vertex_ramsey.errors import ParamOutOfRange
from vertex_ramsey.utils.config import DEFAULT_DELETION_MULTIPLIER, DEFAULT_SEED

logger = logging.getLogger(__name__)

# numpy's binomial sampler takes int64 trial counts.
MAX_TOTAL_COPIES = 2 ** 62


@dataclass(frozen=True)
class ConstructionParams:
    """Inputs of one construction run plus every derived quantity."""

    n: int
    a: int
    aut: int
    eps: float
    k_edges: int
    deletion_multiplier: float = DEFAULT_DELETION_MULTIPLIER
    seed: int = DEFAULT_SEED
    p_override: Optional[float] = None
    clamp: bool = True

    raw_p: float = field(init=False)
    p: float = field(init=False)
    clamped: bool = field(init=False)
    delta0: float = field(init=False)
    delta: float = field(init=False)
    N: int = field(init=False)
    total_copies: int = field(init=False)
    deletion_budget: float = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise ParamOutOfRange(f"n must be >= 1, got {self.n}")
        if self.a < 2:
            raise ParamOutOfRange(f"The pattern needs at least 2 vertices, got a={self.a}")
        if self.aut < 1:
            raise ParamOutOfRange(f"aut(A) must be >= 1, got {self.aut}")
        if not self.eps > 0:
            raise ParamOutOfRange(f"eps must be positive, got {self.eps}")
        if self.k_edges < 1:
            raise ParamOutOfRange(f"k_edges must be >= 1, got {self.k_edges}")
        if self.deletion_multiplier <= 0:
            raise ParamOutOfRange(f"Deletion multiplier must be positive, got {self.deletion_multiplier}")
        if self.seed < 0:
            raise ParamOutOfRange(f"Seed must be non-negative, got {self.seed}")

        if self.p_override is not None:
            if not 0 <= self.p_override <= 1:
                raise ParamOutOfRange(f"Probability must lie in [0, 1], got {self.p_override}")
            raw_p = float(self.p_override)
        else:
            raw_p = float(self.n) ** (1 - self.a + self.eps)

        clamped = raw_p > 1
        if clamped and not self.clamp:
            raise ParamOutOfRange(
                f"p = n^(1-a+eps) = {raw_p:.6g} > 1 at n={self.n}; enable clamping or raise n"
            )
        if clamped:
            logger.warning(f"p = {raw_p:.6g} > 1 at n={self.n}; clamped to 1")

        delta0 = self.eps / (2 * (self.a - 1))
        subset = math.floor(float(self.n) ** (1 - delta0))
        if subset < self.a:
            raise ParamOutOfRange(
                f"N = floor(n^(1-delta0)) = {subset} is smaller than a={self.a}"
            )
        total = math.perm(self.n, self.a) // self.aut

        object.__setattr__(self, "raw_p", raw_p)
        object.__setattr__(self, "p", 1.0 if clamped else raw_p)
        object.__setattr__(self, "clamped", clamped)
        object.__setattr__(self, "delta0", delta0)
        object.__setattr__(self, "delta", delta0 / 2)
        object.__setattr__(self, "N", subset)
        object.__setattr__(self, "total_copies", total)
        object.__setattr__(self, "deletion_budget", self.deletion_multiplier * math.sqrt(self.n))

        if not self.eps_within_constraint:
            logger.warning(
                f"eps={self.eps} is not below 1/(2k) = {1 / (2 * self.k_edges):.4g}; "
                f"the expected core count bound does not apply"
            )

    @classmethod
    def for_pattern(
        cls,
        n: int,
        a_graph: Graph,
        eps: float,
        k_edges: int,
        deletion_multiplier: float = DEFAULT_DELETION_MULTIPLIER,
        seed: int = DEFAULT_SEED,
        p: Optional[float] = None,
        clamp: bool = True,
    ) -> "ConstructionParams":
        """Parameters with a and aut(A) taken from the pattern graph."""
        return cls(
            n=n,
            a=a_graph.n,
            aut=automorphism_count(a_graph) if a_graph.n >= 1 else 1,
            eps=eps,
            k_edges=k_edges,
            deletion_multiplier=deletion_multiplier,
            seed=seed,
            p_override=p,
            clamp=clamp,
        )

    @property
    def eps_within_constraint(self) -> bool:
        return self.eps < 1 / (2 * self.k_edges)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "a": self.a,
            "aut": self.aut,
            "eps": self.eps,
            "k_edges": self.k_edges,
            "p": self.p,
            "raw_p": self.raw_p,
            "clamped": self.clamped,
            "delta0": self.delta0,
            "delta": self.delta,
            "N": self.N,
            "total_copies": self.total_copies,
            "deletion_multiplier": self.deletion_multiplier,
            "deletion_budget": self.deletion_budget,
            "eps_within_constraint": self.eps_within_constraint,
            "seed": self.seed,
        }
