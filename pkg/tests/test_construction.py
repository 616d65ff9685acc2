#!/usr/bin/env python3
"""Tests for the random construction: parameters, sampling, covers, deletion and estimators."""

import math
import sys
import pytest
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from vertex_ramsey.construction.construct import (
    construct_f_free_dense,
    estimate_copy_count,
    estimate_density,
)
from vertex_ramsey.construction.covers import (
    enumerate_min_trace_covers,
    expectation_exponent,
    verify_cover_inequality,
)
from vertex_ramsey.construction.params import ConstructionParams
from vertex_ramsey.construction.sampling import (
    CopyHypergraphSample,
    sample_copy_hypergraph,
    union_graph,
)
from vertex_ramsey.core.embed import Copy, contains_copy
from vertex_ramsey.core.graph import Graph, disjoint_union, named_graph
from vertex_ramsey.errors import NotApplicable, ParamOutOfRange, TooLarge
from vertex_ramsey.ramsey.degeneracy import extract_core

K2, K3, K4 = Graph.complete(2), Graph.complete(3), Graph.complete(4)

# Non-degenerate family members and the pattern they are forbidden for.
FAMILY_CORPUS = [
    (Graph.from_edges(5, list(K4.edges) + [(3, 4)]), K3),
    (Graph.from_edges(6, list(named_graph("diamond").edges) + [(0, 4), (4, 5)]), K3),
    (Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]), K3),
    (Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]), K3),
    (disjoint_union(Graph.complete(5), K4), K3),
    (named_graph("C5"), K3),
    (Graph.from_edges(5, list(Graph.cycle(4).edges) + [(2, 4)]), named_graph("P3")),
    (K3, named_graph("P3")),
]


class TestConstructionParams:
    """Tests for ConstructionParams derived quantities and validation."""

    def test_derived_values(self):
        params = ConstructionParams.for_pattern(100, K3, 0.3, k_edges=6)
        assert params.a == 3
        assert params.aut == 6
        assert params.p == pytest.approx(100 ** -1.7)
        assert not params.clamped
        assert params.delta0 == pytest.approx(0.075)
        assert params.delta == pytest.approx(0.0375)
        assert params.N == 70
        assert params.total_copies == 161700
        assert params.deletion_budget == pytest.approx(10.0)

    def test_eps_constraint_reported(self):
        assert not ConstructionParams.for_pattern(100, K3, 0.3, k_edges=6).eps_within_constraint
        assert ConstructionParams.for_pattern(100, K3, 0.05, k_edges=6).eps_within_constraint

    def test_probability_clamped(self):
        params = ConstructionParams.for_pattern(100, K2, 1.5, k_edges=1)
        assert params.clamped
        assert params.p == 1.0
        assert params.raw_p == pytest.approx(10.0)

    def test_clamping_disabled(self):
        with pytest.raises(ParamOutOfRange, match="clamping"):
            ConstructionParams.for_pattern(100, K2, 1.5, k_edges=1, clamp=False)

    def test_probability_override(self):
        assert ConstructionParams.for_pattern(10, K3, 0.3, k_edges=6, p=1.0).p == 1.0
        with pytest.raises(ParamOutOfRange):
            ConstructionParams.for_pattern(10, K3, 0.3, k_edges=6, p=1.5)

    @pytest.mark.parametrize("kwargs", [
        {"n": 0}, {"eps": 0.0}, {"k_edges": 0}, {"deletion_multiplier": 0.0}, {"seed": -1},
    ])
    def test_invalid_inputs(self, kwargs):
        values = {"n": 100, "a_graph": K3, "eps": 0.3, "k_edges": 6}
        values.update(kwargs)
        with pytest.raises(ParamOutOfRange):
            ConstructionParams.for_pattern(**values)

    def test_pattern_needs_two_vertices(self):
        with pytest.raises(ParamOutOfRange):
            ConstructionParams.for_pattern(100, Graph(1), 0.3, k_edges=1)

    def test_subset_size_below_pattern(self):
        with pytest.raises(ParamOutOfRange, match="smaller than"):
            ConstructionParams.for_pattern(3, K3, 0.3, k_edges=6)


class TestSampling:
    """Tests for sample_copy_hypergraph() and union_graph()."""

    def test_zero_probability_is_empty(self):
        params = ConstructionParams.for_pattern(30, K3, 0.3, k_edges=1, p=0.0)
        sample = sample_copy_hypergraph(params, K3)
        assert len(sample) == 0
        assert union_graph(sample) == Graph(30)

    def test_unit_probability_is_exhaustive(self):
        params = ConstructionParams.for_pattern(30, K3, 0.3, k_edges=1, p=1.0)
        sample = sample_copy_hypergraph(params, K3)
        assert len(sample) == 4060
        assert union_graph(sample) == Graph.complete(30)

    def test_binomial_mean_within_five_sigma(self):
        counts = []
        for seed in range(20):
            params = ConstructionParams.for_pattern(100, K3, 0.3, k_edges=1, seed=seed)
            counts.append(len(sample_copy_hypergraph(params, K3)))
        expected = params.total_copies * params.p
        sigma = math.sqrt(params.total_copies * params.p * (1 - params.p))
        assert all(abs(c - expected) <= 5 * sigma for c in counts)

    def test_copies_are_distinct_triangles(self):
        params = ConstructionParams.for_pattern(60, K3, 0.3, k_edges=1, seed=4)
        sample = sample_copy_hypergraph(params, K3)
        assert len(set(sample.copies)) == len(sample.copies)
        assert all(len(c.vertices) == 3 and len(c.edges) == 3 for c in sample.copies)

    def test_deterministic_per_seed_and_trial(self):
        params = ConstructionParams.for_pattern(80, K3, 0.3, k_edges=1, seed=9)
        assert sample_copy_hypergraph(params, K3, trial=2) == sample_copy_hypergraph(params, K3, trial=2)

    def test_pattern_mismatch(self):
        params = ConstructionParams.for_pattern(30, K3, 0.3, k_edges=1)
        with pytest.raises(ParamOutOfRange):
            sample_copy_hypergraph(params, K4)

    def test_union_of_one_triangle(self):
        params = ConstructionParams.for_pattern(10, K3, 0.3, k_edges=1)
        triangle = Copy(frozenset({0, 1, 2}), frozenset({(0, 1), (0, 2), (1, 2)}))
        assert union_graph(CopyHypergraphSample(params, (triangle,))).num_edges == 3

    def test_union_of_triangles_sharing_an_edge(self):
        params = ConstructionParams.for_pattern(10, K3, 0.3, k_edges=1)
        first = Copy(frozenset({0, 1, 2}), frozenset({(0, 1), (0, 2), (1, 2)}))
        second = Copy(frozenset({0, 1, 3}), frozenset({(0, 1), (0, 3), (1, 3)}))
        assert union_graph(CopyHypergraphSample(params, (first, second))).num_edges == 5


class TestTraceCovers:
    """Tests for enumerate_min_trace_covers() and verify_cover_inequality()."""

    def test_c4_opposite_cherries(self):
        covers = enumerate_min_trace_covers(Graph.cycle(4), K3)
        two = [c for c in covers if c.size == 2]
        assert len(two) == 2
        assert all(c.v_sizes == (3, 3) and c.sum_v == 6 for c in two)
        assert all(c.overlap_sizes == (2, 2) for c in two)

    def test_c4_single_edges(self):
        covers = enumerate_min_trace_covers(Graph.cycle(4), K3)
        singles = [c for c in covers if c.size == 4]
        assert len(singles) == 1
        assert singles[0].sum_v == 8

    def test_covers_are_inclusion_minimal(self):
        for cover in enumerate_min_trace_covers(Graph.cycle(4), K3):
            for i, trace in enumerate(cover.traces):
                others = set().union(*(t.edges for j, t in enumerate(cover.traces) if j != i))
                assert not trace.edges <= others

    def test_triangle_single_trace(self):
        covers = enumerate_min_trace_covers(K3, K3)
        assert covers[0].size == 1
        assert covers[0].traces[0].edges == K3.edges
        assert len(enumerate_min_trace_covers(K3, K3, max_ell=1)) == 1

    def test_edge_cap(self):
        with pytest.raises(TooLarge):
            enumerate_min_trace_covers(Graph.complete(6), K3)

    def test_empty_core(self):
        covers = enumerate_min_trace_covers(Graph(2), K3)
        assert len(covers) == 1 and covers[0].size == 0

    def test_c4_equality_case(self):
        report = verify_cover_inequality(Graph.cycle(4), K3)
        assert report.holds
        assert report.min_slack == 0
        assert report.equality_cases >= 2
        assert report.ell_min == 2
        assert report.cover_property_holds

    @pytest.mark.parametrize("core,pattern", [
        ("C4", "K3"), ("K4", "K3"), ("diamond", "K3"), ("C5", "K3"), ("C4", "P3"),
    ])
    def test_inequality_holds(self, core, pattern):
        report = verify_cover_inequality(named_graph(core), named_graph(pattern))
        assert report.holds
        assert report.violations == ()
        assert report.in_scope >= 1

    def test_expectation_exponent(self):
        covers = enumerate_min_trace_covers(Graph.cycle(4), K3)
        # All four single edges: 4 + 4 * 1.3 - 8.
        assert expectation_exponent(4, covers, 0.3) == pytest.approx(1.2)

    @pytest.mark.parametrize("member,pattern", FAMILY_CORPUS)
    def test_cores_have_cover_property(self, member, pattern):
        core = extract_core(member, pattern)
        report = verify_cover_inequality(core, pattern)
        assert report.cover_property_holds


class TestEstimateDensity:

    def test_complete_graph(self):
        result = estimate_density(Graph.complete(20), K3, 3, trials=100)
        assert result.fraction == 1.0

    def test_edgeless_graph(self):
        assert estimate_density(Graph(10), K2, 4, trials=50).fraction == 0.0

    def test_subset_size_range(self):
        with pytest.raises(ParamOutOfRange):
            estimate_density(Graph(5), K2, 6)

    def test_trials_range(self):
        with pytest.raises(ParamOutOfRange):
            estimate_density(Graph(5), K2, 2, trials=0)

    def test_workers_match_serial(self):
        g = Graph.cycle(12)
        serial = estimate_density(g, K2, 4, trials=30, seed=5)
        parallel = estimate_density(g, K2, 4, trials=30, seed=5, jobs=2)
        assert serial == parallel


class TestConstruction:
    """Tests for construct_f_free_dense()."""

    def test_output_is_k4_free(self):
        graph, report = construct_f_free_dense(200, K3, [K4], 0.3, seed=0, density_trials=50)
        assert not contains_copy(K4, graph)
        assert report.f_free == [True]
        assert report.survivors == graph.n == 200 - report.deletion_count
        assert report.density is not None
        assert report.density.subset_size == report.params.N

    def test_degenerate_member_rejected(self):
        with pytest.raises(NotApplicable):
            construct_f_free_dense(100, K3, [named_graph("bowtie")], 0.3)

    def test_empty_family(self):
        with pytest.raises(ParamOutOfRange):
            construct_f_free_dense(100, K3, [], 0.3)

    def test_zero_density_trials(self):
        with pytest.raises(ParamOutOfRange):
            construct_f_free_dense(100, K3, [K4], 0.3, density_trials=0)

    def test_full_probability_small_n(self):
        graph, report = construct_f_free_dense(10, K3, [K4], 0.3, p=1.0, density_trials=20)
        assert report.edges == 45
        assert report.cores[0].copies == 210
        assert report.deletions == [0, 1, 2, 3, 4, 5, 6]
        assert graph == Graph.complete(3)
        assert not report.within_budget
        assert report.density is None

    def test_deterministic(self):
        first = construct_f_free_dense(100, K3, [K4], 0.3, seed=3, density_trials=20)[1]
        second = construct_f_free_dense(100, K3, [K4], 0.3, seed=3, density_trials=20)[1]
        assert first.to_dict() == second.to_dict()

    def test_report_fields(self):
        _, report = construct_f_free_dense(100, K3, [K4], 0.3, seed=1, density_trials=20)
        data = report.to_dict()
        assert data["params"]["eps_within_constraint"] is False
        assert data["deletion_count"] == len(data["deletions"])
        assert data["cores"][0]["core_vertices"] == 4


class TestEstimateCopyCount:
    """Tests for estimate_copy_count()."""

    def test_zero_probability(self):
        estimate = estimate_copy_count(Graph.cycle(4), K3, 60, 0.3, trials=5, p=0.0)
        assert estimate.counts == [0] * 5
        assert estimate.mean == 0.0
        assert estimate.within_sqrt_n == 1.0

    def test_cover_exponents(self):
        estimate = estimate_copy_count(Graph.cycle(4), K3, 60, 0.3, trials=5, seed=2)
        assert estimate.ell_min == 2
        assert estimate.exponent_bound == pytest.approx(0.6)
        assert estimate.exact_exponent == pytest.approx(1.2)
        assert estimate.cover_property_holds
        assert len(estimate.counts) == 5

    def test_deterministic(self):
        first = estimate_copy_count(Graph.cycle(4), K3, 60, 0.3, trials=8, seed=4)
        second = estimate_copy_count(Graph.cycle(4), K3, 60, 0.3, trials=8, seed=4)
        assert first.counts == second.counts

    def test_trials_range(self):
        with pytest.raises(ParamOutOfRange):
            estimate_copy_count(Graph.cycle(4), K3, 60, 0.3, trials=0)
