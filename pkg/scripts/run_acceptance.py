#!/usr/bin/env python3
"""
Run the statistical acceptance experiments of the random construction and
write a JSON + text report.

Experiments:
    construction  K4-free K3-dense graphs, n in {100, 200}, 5 seeds each
    copy-count    copies of C4 in G_K3(n, p), n in {60, 120}, 100 trials each
    sampling      |H_K3(100, p)| against the binomial mean over 20 seeds
    determinism   every experiment above repeated with the same seed

Pass thresholds are engineering tolerances at fixed n.

Usage:
    python scripts/run_acceptance.py
    python scripts/run_acceptance.py --only construction --seeds 3
    python scripts/run_acceptance.py --jobs 4 --output-dir output
"""

import argparse
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from vertex_ramsey.construction.construct import construct_f_free_dense, estimate_copy_count
from vertex_ramsey.construction.params import ConstructionParams
from vertex_ramsey.construction.sampling import sample_copy_hypergraph
from vertex_ramsey.core.graph import Graph, named_graph
from vertex_ramsey.utils.config import ConfigLoader
from vertex_ramsey.utils.io import ReportWriter, render_json
from vertex_ramsey.utils.logging import setup_logging

EXPERIMENTS = ["construction", "copy-count", "sampling", "determinism"]


def run_construction(seeds, trials, jobs):
    """Exact K4-freeness, deletions <= sqrt(n) and density >= 0.99 over n x seeds."""
    k3, k4 = Graph.complete(3), Graph.complete(4)
    runs = []
    print(f"\n{'n':>5} {'Seed':>5} {'Copies':>8} {'Edges':>7} {'Del':>5} {'sqrt(n)':>8} {'Density':>8} {'K4-free':>8}")
    print("-" * 62)
    for n in (100, 200):
        for seed in range(seeds):
            _, report = construct_f_free_dense(n, k3, [k4], 0.3, seed=seed, density_trials=trials, jobs=jobs)
            density = report.density.fraction if report.density else None
            runs.append({
                "n": n,
                "seed": seed,
                "copies_sampled": report.copies_sampled,
                "edges": report.edges,
                "deletions": report.deletion_count,
                "within_sqrt_n": report.deletion_count <= math.sqrt(n),
                "density": density,
                "f_free": all(report.f_free),
            })
            print(
                f"{n:>5} {seed:>5} {report.copies_sampled:>8} {report.edges:>7} "
                f"{report.deletion_count:>5} {math.sqrt(n):>8.2f} "
                f"{density if density is not None else float('nan'):>8.3f} {str(all(report.f_free)):>8}"
            )

    total = len(runs)
    passes = {
        "f_free": sum(r["f_free"] for r in runs) == total,
        "deletions": sum(r["within_sqrt_n"] for r in runs) >= math.ceil(0.8 * total),
        "density": sum(1 for r in runs if r["density"] is not None and r["density"] >= 0.99)
        >= math.ceil(0.8 * total),
    }
    return {"runs": runs, "checks": passes, "passed": all(passes.values())}


def run_copy_count(trials, seed, jobs):
    """X_{C4} <= sqrt(n) in >= 90% of trials at both sizes, and sub-linear growth."""
    c4, k3 = Graph.cycle(4), Graph.complete(3)
    estimates = {}
    print(f"\n{'n':>5} {'Mean':>8} {'Max':>5} {'<=sqrt(n)':>10} {'l_min*eps':>10} {'Exponent':>9}")
    print("-" * 52)
    for n in (60, 120):
        estimate = estimate_copy_count(c4, k3, n, 0.3, trials=trials, seed=seed, jobs=jobs)
        estimates[n] = estimate
        print(
            f"{n:>5} {estimate.mean:>8.3f} {estimate.maximum:>5} {estimate.within_sqrt_n:>10.2%} "
            f"{estimate.exponent_bound if estimate.exponent_bound is not None else float('nan'):>10.2f} "
            f"{estimate.exact_exponent if estimate.exact_exponent is not None else float('nan'):>9.2f}"
        )

    small, large = estimates[60], estimates[120]
    ratio = large.mean / small.mean if small.mean > 0 else None
    passes = {
        "within_sqrt_n": small.within_sqrt_n >= 0.9 and large.within_sqrt_n >= 0.9,
        # Both means zero is no growth at all.
        "growth": (large.mean == 0) if ratio is None else ratio <= 2,
    }
    return {
        "estimates": {str(n): e.to_dict() for n, e in estimates.items()},
        "growth_ratio": ratio,
        "checks": passes,
        "passed": all(passes.values()),
    }


def run_sampling(seeds):
    """Binomial mean within 5 sigma over seeds; p in {0, 1} endpoints exact."""
    k3 = Graph.complete(3)
    params = [ConstructionParams.for_pattern(100, k3, 0.3, k_edges=1, seed=s) for s in range(seeds)]
    counts = [len(sample_copy_hypergraph(p, k3)) for p in params]
    total, p = params[0].total_copies, params[0].p
    expected = total * p
    sigma = math.sqrt(total * p * (1 - p))
    mean = sum(counts) / len(counts)
    within = all(abs(c - expected) <= 5 * sigma for c in counts)

    empty = len(sample_copy_hypergraph(
        ConstructionParams.for_pattern(30, k3, 0.3, k_edges=1, p=0.0), k3
    ))
    full = len(sample_copy_hypergraph(
        ConstructionParams.for_pattern(30, k3, 0.3, k_edges=1, p=1.0), k3
    ))
    print(f"\nSampling: mean {mean:.2f} vs T*p {expected:.2f} (sigma {sigma:.2f}); p=0 -> {empty}, p=1 -> {full}")

    passes = {"binomial_mean": within, "p0_empty": empty == 0, "p1_exhaustive": full == math.comb(30, 3)}
    return {
        "counts": counts,
        "expected": expected,
        "sigma": sigma,
        "mean": mean,
        "checks": passes,
        "passed": all(passes.values()),
    }


def run_determinism(trials):
    """Same seed, same bytes."""
    k3, k4 = Graph.complete(3), Graph.complete(4)
    first = construct_f_free_dense(100, k3, [k4], 0.3, seed=7, density_trials=trials)[1].to_dict()
    second = construct_f_free_dense(100, k3, [k4], 0.3, seed=7, density_trials=trials)[1].to_dict()
    c4 = named_graph("C4")
    count_a = estimate_copy_count(c4, k3, 60, 0.3, trials=20, seed=7).to_dict()
    count_b = estimate_copy_count(c4, k3, 60, 0.3, trials=20, seed=7).to_dict()
    passes = {
        "construction": render_json(first) == render_json(second),
        "copy_count": render_json(count_a) == render_json(count_b),
    }
    print(f"\nDeterminism: {passes}")
    return {"checks": passes, "passed": all(passes.values())}


def main():
    parser = argparse.ArgumentParser(description="Run the statistical acceptance experiments")
    parser.add_argument("--only", choices=EXPERIMENTS, action="append", help="Run only these experiments")
    parser.add_argument("--seeds", type=int, default=5, help="Construction seeds per n (default: 5)")
    parser.add_argument("--trials", type=int, default=None, help="Density trials (default: from config)")
    parser.add_argument("--count-trials", type=int, default=100, help="Copy-count trials per n (default: 100)")
    parser.add_argument("--seed", type=int, default=None, help="Master seed for copy counts (default: from config)")
    parser.add_argument("--jobs", type=int, default=None, help="Worker processes (default: from config)")
    parser.add_argument("--output-dir", default="output", help="Report directory (default: output)")
    parser.add_argument("--config", "-c", default=None, help="Config file path")
    args = parser.parse_args()

    config_loader = ConfigLoader(args.config)
    setup_logging(level=config_loader.log_level)
    trials = args.trials or config_loader.construction["density_trials"]
    seed = args.seed if args.seed is not None else config_loader.seed
    jobs = args.jobs if args.jobs is not None else config_loader.jobs
    selected = args.only or EXPERIMENTS

    print("\n*** Vertex Ramsey acceptance ***")
    results = {}
    if "construction" in selected:
        results["construction"] = run_construction(args.seeds, trials, jobs)
    if "copy-count" in selected:
        results["copy_count"] = run_copy_count(args.count_trials, seed, jobs)
    if "sampling" in selected:
        results["sampling"] = run_sampling(20)
    if "determinism" in selected:
        results["determinism"] = run_determinism(trials)

    report = {
        "experiments": results,
        "passed": all(r["passed"] for r in results.values()),
    }
    paths = ReportWriter(args.output_dir).write_run_output(report)

    print(f"\n{'='*50}")
    print("ACCEPTANCE RESULTS")
    print(f"{'='*50}")
    for name, result in results.items():
        print(f"{name:<15} {'PASS' if result['passed'] else 'FAIL'}")
    print(f"\nSaved {paths['json_report']}")
    sys.exit(0 if report["passed"] else 1)


if __name__ == "__main__":
    main()
