#!/usr/bin/env python3
"""
Certifying colorer: find a copy of B in G, or colour G so that no colour
class contains a copy of A, using at most l(2(a-1)(b-2)+1) colours where
l is the size of a minimum A-forest of B.

The solver walks the forest decomposition from the last piece down:

- a glued piece B_m attached at x (role k in A) splits the active vertex
  set into U = {v : s_k(v) <= b_m - 2} and the rest. G[U] is coloured
  through the auxiliary digraph of greedy star families; the rest is
  handled recursively for B_1..B_{m-1}; an embedding found there extends
  through a star petal avoiding its image;
- a prefix of pairwise disjoint pieces is handled by a maximal family of
  vertex-disjoint copies of A;
- the first piece alone embeds into A, so one colour suffices when G has
  no copy of it.

Whatever branch comes out is re-verified before it is returned.
"""

import heapq
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from vertex_ramsey.core.embed import Copy, Embedding, SubgraphMatcher, find_embedding
from vertex_ramsey.core.graph import Graph, VertexColoring, induced_subgraph, normalize_edge
from vertex_ramsey.errors import (
    CertificateError,
    EnumerationTruncated,
    NotDegenerate,
    ParamOutOfRange,
    SearchBudgetExceeded,
    UnsupportedPattern,
)
from vertex_ramsey.ramsey.degeneracy import ForestDecomposition, ForestPiece, forest_decomposition
from vertex_ramsey.utils.config import DEFAULT_COPY_LIMIT, DEFAULT_FOREST_NODES, DEFAULT_PACKING_NODES
from vertex_ramsey.utils.logging import LoggingMixin

logger = logging.getLogger(__name__)


def ramsey_bound(ell: int, a: int, b: int) -> int:
    """Colour budget l(2(a-1)(b-2)+1) of the dichotomy (at least 1)."""
    return max(1, ell * (2 * (a - 1) * (b - 2) + 1))


# ----------------------------------------------------------------------
# Star families
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class StarFamily:
    """Copies of A through `center` at role `role`, pairwise meeting only at the center."""

    center: int
    role: int
    copies: Tuple[Copy, ...]
    embeddings: Tuple[Embedding, ...] = field(default=(), compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.copies)

    def to_dict(self) -> Dict[str, object]:
        return {
            "center": self.center,
            "role": self.role,
            "size": self.size,
            "copies": [c.to_dict() for c in self.copies],
        }


@dataclass(frozen=True)
class StarFamilyCheck:
    holds: bool
    family: Optional[StarFamily] = None

    def __bool__(self) -> bool:
        return self.holds


def _pack_petals(
    by_petal: Dict[FrozenSet[int], Embedding], t: int, k: int, v: int, budget: int
) -> Optional[StarFamily]:
    """Branch and bound search for t pairwise disjoint petals."""
    if len(by_petal) < t:
        return None

    petals = sorted(by_petal, key=lambda p: tuple(sorted(p)))
    masks = [sum(1 << x for x in p) for p in petals]
    conflicts = [sum(1 for other in masks if other & m) for m in masks]
    order = sorted(range(len(petals)), key=lambda i: (conflicts[i], i))
    masks = [masks[i] for i in order]
    petals = [petals[i] for i in order]

    nodes = 0
    chosen: List[int] = []

    def pack(start: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(
                f"Star packing at vertex {v} exceeded {budget} nodes", budget=budget
            )
        if len(chosen) >= t:
            return True
        for j in range(start, len(masks)):
            if len(chosen) + (len(masks) - j) < t:
                return False
            if masks[j] & used:
                continue
            chosen.append(j)
            if pack(j + 1, used | masks[j]):
                return True
            chosen.pop()
        return False

    if not pack(0, 0):
        return None

    embeddings = tuple(by_petal[petals[j]] for j in sorted(chosen, key=lambda j: tuple(sorted(petals[j]))))
    return StarFamily(
        center=v,
        role=k,
        copies=tuple(e.copy() for e in embeddings),
        embeddings=embeddings,
    )


def star_family_at_least(
    g: Graph,
    a_graph: Graph,
    k: int,
    v: int,
    t: int,
    limit: Optional[int] = DEFAULT_COPY_LIMIT,
    budget: int = DEFAULT_PACKING_NODES,
) -> StarFamilyCheck:
    """
    Decide s_k(v) >= t exactly.

    Pinned copies are reduced to their petals (vertex set minus v); a
    branch and bound packing then looks for t pairwise disjoint petals.
    When the enumeration hits `limit`, the petals found so far are packed
    first and a family found among them still decides the question.

    Raises:
        ParamOutOfRange: t < 1
        EnumerationTruncated: More than `limit` pinned copies and no
            family among the ones enumerated
        SearchBudgetExceeded: Packing search exceeded `budget` nodes
    """
    if t < 1:
        raise ParamOutOfRange(f"Star family target must be >= 1, got {t}")

    seen: Set[Copy] = set()
    by_petal: Dict[FrozenSet[int], Embedding] = {}
    for mapping in SubgraphMatcher(a_graph, g).iter_embeddings((k, v)):
        embedding = Embedding.from_mapping(a_graph, mapping)
        image = embedding.copy()
        if image in seen:
            continue
        if limit is not None and len(seen) >= limit:
            family = _pack_petals(by_petal, t, k, v, budget)
            if family is not None:
                return StarFamilyCheck(True, family)
            raise EnumerationTruncated(
                f"More than {limit} copies pinned at vertex {v} (role {k})", limit=limit
            )
        seen.add(image)
        by_petal.setdefault(image.vertices - {v}, embedding)

    family = _pack_petals(by_petal, t, k, v, budget)
    if family is None:
        return StarFamilyCheck(False)
    return StarFamilyCheck(True, family)


def greedy_star_petals(g: Graph, a_graph: Graph, k: int, v: int) -> List[FrozenSet[int]]:
    """Petals of a maximal (by inclusion) star family at v, role k."""
    used: Set[int] = set()
    petals: List[FrozenSet[int]] = []
    while True:
        keep = [w for w in range(g.n) if w == v or w not in used]
        sub, labels = induced_subgraph(g, keep)
        embedding = find_embedding(a_graph, sub, pin=(k, labels.index(v)))
        if embedding is None:
            return petals
        petal = frozenset(labels[z] for z in embedding.mapping) - {v}
        if not petal:
            return petals
        petals.append(petal)
        used |= petal


# ----------------------------------------------------------------------
# Disjoint families
# ----------------------------------------------------------------------


def _greedy_disjoint_embeddings(g: Graph, a_graph: Graph) -> List[Embedding]:
    if a_graph.n == 0:
        raise UnsupportedPattern("Disjoint families of the empty pattern are unbounded")
    remaining = list(range(g.n))
    family: List[Embedding] = []
    while True:
        sub, labels = induced_subgraph(g, remaining)
        embedding = find_embedding(a_graph, sub)
        if embedding is None:
            return family
        mapped = Embedding.from_mapping(a_graph, [labels[x] for x in embedding.mapping])
        family.append(mapped)
        remaining = [w for w in remaining if w not in mapped.image_vertices]


def greedy_disjoint_family(g: Graph, a_graph: Graph) -> List[Copy]:
    """Maximal family of vertex-disjoint copies of A; the leftover vertices span no copy."""
    return [e.copy() for e in _greedy_disjoint_embeddings(g, a_graph)]


# ----------------------------------------------------------------------
# Degeneracy colouring
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DegeneracyOrder:
    order: Tuple[int, ...]  # removal order, smallest degree first
    degeneracy: int


def degeneracy(g: Graph) -> DegeneracyOrder:
    """Smallest-last order: repeatedly remove a minimum-degree vertex (smallest id on ties)."""
    degree = [g.degree(v) for v in range(g.n)]
    heap = [(degree[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: List[int] = []
    value = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        order.append(v)
        value = max(value, d)
        for w in g.neighbors(v):
            if not removed[w]:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))
    return DegeneracyOrder(order=tuple(order), degeneracy=value)


def degeneracy_coloring(gamma: Graph) -> VertexColoring:
    """Proper colouring with at most degeneracy + 1 colours (greedy in reverse removal order)."""
    colors: Dict[int, int] = {}
    for v in reversed(degeneracy(gamma).order):
        taken = {colors[w] for w in gamma.neighbors(v) if w in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return VertexColoring.from_mapping(gamma.n, colors)


# ----------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ColoringCheck:
    valid: bool
    witness: Optional[Copy] = None
    color: Optional[int] = None

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> Dict[str, object]:
        return {
            "valid": self.valid,
            "witness": self.witness.to_dict() if self.witness else None,
            "color": self.color,
        }


def verify_coloring(g: Graph, a_graph: Graph, c: VertexColoring) -> ColoringCheck:
    """True iff no colour class of c contains a copy of A; otherwise one monochromatic copy."""
    if len(c.colors) != g.n:
        raise ValueError(f"Colouring has {len(c.colors)} entries for {g.n} vertices")
    classes = c.color_classes()
    for color in sorted(classes):
        sub, labels = induced_subgraph(g, classes[color])
        embedding = find_embedding(a_graph, sub)
        if embedding is not None:
            mapped = Embedding.from_mapping(a_graph, [labels[x] for x in embedding.mapping])
            return ColoringCheck(False, mapped.copy(), color)
    return ColoringCheck(True)


# ----------------------------------------------------------------------
# Certificates
# ----------------------------------------------------------------------


class CertificateStatus(Enum):
    EMBEDDING = "embedding"
    COLORING = "coloring"
    UNKNOWN = "unknown"


@dataclass
class LevelStats:
    """One level of the recursion."""

    depth: int
    kind: str  # glued, disjoint, base
    pieces: int
    b: int
    active: int
    low_star: int = 0
    family: int = 0
    colors: int = 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "depth": self.depth,
            "kind": self.kind,
            "pieces": self.pieces,
            "b": self.b,
            "active": self.active,
            "low_star": self.low_star,
            "family": self.family,
            "colors": self.colors,
        }


@dataclass(frozen=True)
class RamseyCertificate:
    """Either an embedding of B into G or a colouring of G without monochromatic A."""

    status: CertificateStatus
    bound: int
    ell: int
    a: int
    b: int
    method: str
    embedding: Optional[Embedding] = None
    coloring: Optional[VertexColoring] = None
    levels: Tuple[LevelStats, ...] = ()
    verified: bool = False
    forest_minimal: bool = True
    reason: Optional[str] = None

    @property
    def decided(self) -> bool:
        return self.status is not CertificateStatus.UNKNOWN

    def to_dict(self) -> Dict[str, object]:
        return {
            "branch": self.status.value,
            "bound": self.bound,
            "ell": self.ell,
            "a": self.a,
            "b": self.b,
            "method": self.method,
            "embedding": self.embedding.to_dict() if self.embedding else None,
            "coloring": self.coloring.to_dict() if self.coloring else None,
            "levels": [lvl.to_dict() for lvl in self.levels],
            "verified": self.verified,
            "forest_minimal": self.forest_minimal,
            "reason": self.reason,
        }


# ----------------------------------------------------------------------
# Solver
# ----------------------------------------------------------------------

_EMBED = "embedding"
_COLOR = "coloring"


def _front_load(pieces: Tuple[ForestPiece, ...]) -> Tuple[ForestPiece, ...]:
    """Move pieces without an attachment to the front, keeping relative order."""
    if not pieces:
        return pieces
    free = [pieces[0]] + [p for p in pieces[1:] if p.attachment is None]
    glued = [p for p in pieces[1:] if p.attachment is not None]
    return tuple(free + glued)


class BOrColorSolver(LoggingMixin):
    """Runs the dichotomy for one (G, A, B) triple and a fixed forest decomposition."""

    def __init__(
        self,
        g: Graph,
        a_graph: Graph,
        b_graph: Graph,
        decomposition: ForestDecomposition,
        direct_search: bool = True,
        copy_limit: Optional[int] = DEFAULT_COPY_LIMIT,
        packing_budget: int = DEFAULT_PACKING_NODES,
    ):
        self.g = g
        self.a_graph = a_graph
        self.b_graph = b_graph
        self.decomposition = decomposition
        self.direct_search = direct_search
        self.copy_limit = copy_limit
        self.packing_budget = packing_budget

        self.pieces = _front_load(decomposition.pieces)
        self.ell = len(self.pieces)
        self.bound = ramsey_bound(self.ell, a_graph.n, b_graph.n)
        prefix: List[FrozenSet[int]] = []
        seen: FrozenSet[int] = frozenset()
        for piece in self.pieces:
            seen = seen | piece.vertices
            prefix.append(seen)
        self.prefix_vertices = prefix
        self.levels: List[LevelStats] = []

    # -- certificate assembly -------------------------------------------

    def _certificate(self, status: CertificateStatus, method: str, **kwargs) -> RamseyCertificate:
        return RamseyCertificate(
            status=status,
            bound=self.bound,
            ell=self.ell,
            a=self.a_graph.n,
            b=self.b_graph.n,
            method=method,
            levels=tuple(self.levels),
            forest_minimal=self.decomposition.minimal,
            **kwargs,
        )

    def _embedding_certificate(self, embedding: Embedding, method: str) -> RamseyCertificate:
        if not embedding.is_valid(self.b_graph, self.g):
            raise CertificateError(f"Embedding produced by the {method} branch is invalid")
        return self._certificate(CertificateStatus.EMBEDDING, method, embedding=embedding, verified=True)

    def _coloring_certificate(self, colors: Dict[int, int], method: str) -> RamseyCertificate:
        palette = {c: i for i, c in enumerate(sorted(set(colors.values())))}
        coloring = VertexColoring.from_mapping(self.g.n, {v: palette[c] for v, c in colors.items()})
        check = verify_coloring(self.g, self.a_graph, coloring)
        if not check.valid:
            raise CertificateError(
                f"Colouring has a monochromatic copy on {sorted(check.witness.vertices)}"
            )
        if coloring.palette_size > self.bound:
            raise CertificateError(
                f"Colouring uses {coloring.palette_size} colours, above the bound {self.bound}"
            )
        return self._certificate(CertificateStatus.COLORING, method, coloring=coloring, verified=True)

    # -- recursion ------------------------------------------------------

    def _base(self, active: FrozenSet[int], offset: int):
        host, labels = induced_subgraph(self.g, active)
        graph, piece_labels = self.pieces[0].as_graph()
        embedding = find_embedding(graph, host)
        stats = LevelStats(
            depth=self.ell - 1, kind="base", pieces=1,
            b=len(self.prefix_vertices[0]), active=len(active),
        )
        self.levels.append(stats)
        if embedding is not None:
            return _EMBED, {piece_labels[i]: labels[x] for i, x in enumerate(embedding.mapping)}
        stats.colors = 1 if active else 0
        return _COLOR, {v: offset for v in active}

    def _disjoint(self, active: FrozenSet[int], m: int, offset: int):
        host, labels = induced_subgraph(self.g, active)
        family = _greedy_disjoint_embeddings(host, self.a_graph)
        stats = LevelStats(
            depth=self.ell - m, kind="disjoint", pieces=m,
            b=len(self.prefix_vertices[m - 1]), active=len(active), family=len(family),
        )
        self.levels.append(stats)

        if len(family) >= m:
            phi: Dict[int, int] = {}
            for piece, psi in zip(self.pieces[:m], family):
                for y, role in piece.embedding:
                    phi[y] = labels[psi.mapping[role]]
            return _EMBED, phi

        colors: Dict[int, int] = {}
        for i, psi in enumerate(family):
            first, *rest = sorted(labels[x] for x in psi.mapping)
            colors[first] = offset + 2 * i
            for w in rest:
                colors[w] = offset + 2 * i + 1
        for w in active:
            colors.setdefault(w, offset + 2 * len(family))
        stats.colors = len(set(colors.values()))
        return _COLOR, colors

    def _color_low_star(self, host: Graph, low: List[int], k: int, b_m: int) -> Dict[int, int]:
        """Colour host[low] through the auxiliary digraph; returns host-local colours."""
        if not low:
            return {}
        sub, labels = induced_subgraph(host, low)
        out_limit = (self.a_graph.n - 1) * (b_m - 2)
        arcs = set()
        for v in range(sub.n):
            petals = greedy_star_petals(sub, self.a_graph, k, v)
            out = frozenset().union(*petals)
            if len(out) > out_limit:
                raise CertificateError(
                    f"Auxiliary out-degree {len(out)} exceeds {out_limit} at vertex {labels[v]}"
                )
            arcs.update(normalize_edge(v, u) for u in out)
        coloring = degeneracy_coloring(Graph(sub.n, frozenset(arcs)))
        return {labels[v]: c for v, c in enumerate(coloring.colors)}

    def _glued(self, active: FrozenSet[int], m: int, offset: int):
        piece = self.pieces[m - 1]
        x = piece.attachment
        k = piece.role_map()[x]
        b_m = len(self.prefix_vertices[m - 1])

        host, labels = induced_subgraph(self.g, active)
        families: Dict[int, StarFamily] = {}
        low: List[int] = []
        for v in range(host.n):
            check = star_family_at_least(
                host, self.a_graph, k, v, b_m - 1, self.copy_limit, self.packing_budget
            )
            if check:
                families[labels[v]] = check.family
            else:
                low.append(v)

        local = self._color_low_star(host, low, k, b_m)
        colors = {labels[v]: offset + c for v, c in local.items()}
        used = len(set(local.values()))
        self.levels.append(
            LevelStats(
                depth=self.ell - m, kind="glued", pieces=m, b=b_m,
                active=len(active), low_star=len(low), colors=used,
            )
        )
        self.log_debug(f"Level {self.ell - m}: |active|={len(active)}, |U|={len(low)}, colours={used}")

        rest = active - frozenset(labels[v] for v in low)
        kind, result = self._level(rest, m - 1, offset + used)
        if kind == _COLOR:
            colors.update(result)
            return _COLOR, colors

        center = result[x]
        family = families[center]
        image = set(result.values()) - {center}
        for psi in family.embeddings:
            petal = {labels[z] for z in psi.mapping} - {center}
            if not petal & image:
                for y, role in piece.embedding:
                    result[y] = labels[psi.mapping[role]]
                return _EMBED, result
        raise CertificateError(f"No petal at vertex {center} avoids the partial embedding")

    def _level(self, active: FrozenSet[int], m: int, offset: int):
        if m == 1:
            return self._base(active, offset)
        if self.pieces[m - 1].attachment is None:
            return self._disjoint(active, m, offset)
        return self._glued(active, m, offset)

    # -- entry point ----------------------------------------------------

    def run(self) -> RamseyCertificate:
        a, b = self.a_graph.n, self.b_graph.n

        if a < 2 or b < 3:
            embedding = find_embedding(self.b_graph, self.g)
            if embedding is not None:
                return self._embedding_certificate(embedding, "trivial")
            if a < 2 and self.g.n > 0:
                raise UnsupportedPattern(
                    f"Patterns with fewer than 2 vertices cannot be avoided (a={a})"
                )
            return self._coloring_certificate({v: 0 for v in range(self.g.n)}, "trivial")

        if self.direct_search:
            embedding = find_embedding(self.b_graph, self.g)
            if embedding is not None:
                return self._embedding_certificate(embedding, "direct")

        try:
            kind, result = self._level(frozenset(range(self.g.n)), self.ell, 0)
        except (EnumerationTruncated, SearchBudgetExceeded) as e:
            self.log_warning(f"Certificate undecided: {e}")
            return self._certificate(CertificateStatus.UNKNOWN, "recursive", reason=str(e))

        if kind == _EMBED:
            mapping = [result[y] for y in range(b)]
            return self._embedding_certificate(
                Embedding.from_mapping(self.b_graph, mapping), "recursive"
            )
        return self._coloring_certificate(result, "recursive")


def find_B_or_color(
    g: Graph,
    a_graph: Graph,
    b_graph: Graph,
    direct_search: bool = True,
    copy_limit: Optional[int] = DEFAULT_COPY_LIMIT,
    packing_budget: int = DEFAULT_PACKING_NODES,
    forest_budget: int = DEFAULT_FOREST_NODES,
) -> RamseyCertificate:
    """
    Embedding of B into G, or a colouring of G with at most
    l(2(a-1)(b-2)+1) colours and no monochromatic copy of A.

    Args:
        g: Host graph
        a_graph: Pattern A
        b_graph: A-degenerate graph B
        direct_search: Look for B directly before running the recursion
        copy_limit: Limit on pinned copies per star query
        packing_budget: Node budget per star packing
        forest_budget: Node budget of the forest minimisation

    Returns:
        A verified certificate, or one with status UNKNOWN when a budget
        stopped a star query

    Raises:
        NotDegenerate: b_graph is not A-degenerate
        CertificateError: A produced certificate failed verification
    """
    decomposition = forest_decomposition(b_graph, a_graph, forest_budget)
    if decomposition is None:
        raise NotDegenerate("The forest graph is not A-degenerate")
    solver = BOrColorSolver(
        g, a_graph, b_graph, decomposition,
        direct_search=direct_search,
        copy_limit=copy_limit,
        packing_budget=packing_budget,
    )
    return solver.run()
