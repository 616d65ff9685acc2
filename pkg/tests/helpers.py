"""Brute-force oracles and graph generators shared by the tests."""

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import networkx as nx
from hypothesis import strategies as st

from vertex_ramsey.core.graph import Graph, connected_components, induced_subgraph


def all_pairs(n):
    return list(itertools.combinations(range(n), 2))


def all_graphs(n):
    """Every labelled graph on n vertices (2^(n choose 2) of them)."""
    pairs = all_pairs(n)
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


@st.composite
def graphs(draw, min_n=0, max_n=7):
    """Hypothesis strategy: small labelled graphs."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = all_pairs(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def to_networkx(g):
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges)
    return nx_graph


def brute_contains(pattern, host):
    """Try every injective map."""
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pattern.edges):
            return True
    return False


def brute_copy_count(pattern, host):
    """Distinct image subgraphs over every injective map."""
    images = set()
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pattern.edges):
            images.add((
                frozenset(image),
                frozenset(tuple(sorted((image[u], image[v]))) for u, v in pattern.edges),
            ))
    return len(images)


def brute_articulation_points(g):
    """Vertices whose removal increases the number of components."""
    base = len(connected_components(g))
    cuts = set()
    for v in range(g.n):
        rest, _ = induced_subgraph(g, [u for u in range(g.n) if u != v])
        # Removing an isolated vertex drops one component.
        if len(connected_components(rest)) > base - (1 if g.degree(v) == 0 else 0):
            cuts.add(v)
    return frozenset(cuts)


def _two_connected(g):
    """Connected, at least one edge, and no cut vertex (K2 counts)."""
    if g.num_edges == 0 or len(connected_components(g)) != 1:
        return False
    return not brute_articulation_points(g)


def brute_is_degenerate(b, a):
    """Every 2-connected subgraph of b (over all edge subsets) embeds into a."""
    edges = sorted(b.edges)
    for size in range(1, len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            vertices = sorted({x for e in subset for x in e})
            index = {v: i for i, v in enumerate(vertices)}
            sub = Graph.from_edges(len(vertices), [(index[u], index[v]) for u, v in subset])
            if _two_connected(sub) and not brute_contains(sub, a):
                return False
    return True


def brute_is_ramsey(g, a, r):
    """Every r-colouring of g has a monochromatic copy of a."""
    for colors in itertools.product(range(r), repeat=g.n):
        if not any(
            brute_contains(a, induced_subgraph(g, [v for v in range(g.n) if colors[v] == c])[0])
            for c in range(r)
        ):
            return False
    return True


def has_monochromatic_copy(g, a, colors):
    for c in set(colors):
        sub, _ = induced_subgraph(g, [v for v in range(g.n) if colors[v] == c])
        if brute_contains(a, sub):
            return True
    return False


@st.composite
def edge_graphs(draw, max_vertices=7, min_edges=1, max_edges=6):
    """Hypothesis strategy: graphs without isolated vertices, built from a few edges."""
    pairs = all_pairs(max_vertices)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min_edges, max_size=max_edges))
    vertices = sorted({x for e in chosen for x in e})
    index = {v: i for i, v in enumerate(vertices)}
    return Graph.from_edges(len(vertices), [(index[u], index[v]) for u, v in chosen])


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def _orderable(vertex_sets):
    """Some order has every set meeting the union of the earlier ones in <= 1 vertex."""
    k = len(vertex_sets)
    dead = set()

    def extend(mask, union):
        if mask == (1 << k) - 1:
            return True
        if mask in dead:
            return False
        for i in range(k):
            if not mask >> i & 1 and len(vertex_sets[i] & union) <= 1:
                if extend(mask | 1 << i, union | vertex_sets[i]):
                    return True
        dead.add(mask)
        return False

    return extend(0, frozenset())


def brute_min_forest(b, a):
    """Minimum A-forest size over every partition of E(b); None if there is none.

    b must have no isolated vertices.
    """
    best = None
    for partition in set_partitions(sorted(b.edges)):
        if best is not None and len(partition) >= best:
            continue
        ok = True
        for group in partition:
            vertices = sorted({x for e in group for x in e})
            index = {v: i for i, v in enumerate(vertices)}
            piece = Graph.from_edges(len(vertices), [(index[u], index[v]) for u, v in group])
            if not brute_contains(piece, a):
                ok = False
                break
        if ok and _orderable([frozenset(x for e in group for x in e) for group in partition]):
            best = len(partition)
    return best
