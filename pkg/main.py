#!/usr/bin/env python3
"""
Vertex Ramsey toolkit - command-line front end.

Usage:
    python main.py blocks --graph bowtie
    python main.py degenerate --graph diamond --pattern K3
    python main.py forest --graph P5 --pattern P3
    python main.py color --graph K4 --pattern K3 --forest bowtie
    python main.py ramsey --graph K4 --pattern K3 -r 2
    python main.py dense --graph C10 --pattern K2 --eps 0.5
    python main.py construct -n 200 --pattern K3 --family K4 --eps 0.3 --seed 0
    python main.py covers --graph C4 --pattern K3
    python main.py count --graph C4 --pattern K3 -n 120 --eps 0.3 --trials 100
    python main.py estimate-density --graph @graph.txt --pattern K3 --subset-size 40

Graph arguments take a graph6 string, a catalogue name (K4, C5, P3, E2,
S3, bowtie, diamond, friendship2) or @path to a graph6/edge-list file.

Exit codes: 0 decided, 2 undecided (budget exhausted), 1 usage or input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

# Add src to path for package imports
sys.path.insert(0, str(Path(__file__).parent / "src"))

from vertex_ramsey.construction.construct import (
    construct_f_free_dense,
    estimate_copy_count,
    estimate_density,
)
from vertex_ramsey.construction.covers import enumerate_min_trace_covers, verify_cover_inequality
from vertex_ramsey.core.blocks import block_decomposition
from vertex_ramsey.core.formats import parse_graph6, parse_graph_text
from vertex_ramsey.core.graph import Graph, is_named_graph, named_graph
from vertex_ramsey.errors import (
    CertificateError,
    EnumerationTruncated,
    MalformedInput,
    SearchBudgetExceeded,
)
from vertex_ramsey.ramsey.colorer import find_B_or_color
from vertex_ramsey.ramsey.degeneracy import forest_decomposition, is_A_degenerate
from vertex_ramsey.ramsey.exact import density_implies_ramsey, is_eps_dense, is_r_ramsey
from vertex_ramsey.utils.config import ConfigLoader
from vertex_ramsey.utils.io import make_document, render, write_output
from vertex_ramsey.utils.logging import setup_logging

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2

Outcome = Tuple[str, Dict[str, Any]]


class CliUsageError(Exception):
    """Command line did not parse."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliUsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def load_graph(text: str) -> Graph:
    """Graph from a catalogue name, @file (graph6 or edge list) or inline graph6."""
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            content = path.read_text(encoding="ascii")
        except OSError as e:
            raise MalformedInput(f"Cannot read graph file {path}: {e}")
        return parse_graph_text(content)
    if is_named_graph(text):
        return named_graph(text)
    return parse_graph6(text)


def _budget(args, config: ConfigLoader, name: str) -> int:
    return args.budget if args.budget is not None else config.budget(name)


def _seed(args, config: ConfigLoader) -> int:
    return args.seed if args.seed is not None else config.seed


def _jobs(args, config: ConfigLoader) -> int:
    return args.jobs if args.jobs is not None else config.jobs


def _trials(args, default: int) -> int:
    return args.trials if args.trials is not None else default


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------


def cmd_blocks(args, config: ConfigLoader) -> Outcome:
    """Block decomposition and cut vertices."""
    return "ok", block_decomposition(load_graph(args.graph)).to_dict()


def cmd_degenerate(args, config: ConfigLoader) -> Outcome:
    """Is the graph A-degenerate?"""
    check = is_A_degenerate(load_graph(args.graph), load_graph(args.pattern))
    return ("degenerate" if check.degenerate else "not_degenerate"), check.to_dict()


def cmd_forest(args, config: ConfigLoader) -> Outcome:
    """Minimum A-forest decomposition."""
    decomposition = forest_decomposition(
        load_graph(args.graph), load_graph(args.pattern), _budget(args, config, "forest_nodes")
    )
    if decomposition is None:
        return "not_degenerate", {"decomposition": None}
    if not decomposition.minimal:
        return "unknown", {
            "decomposition": decomposition.to_dict(),
            "reason": "forest search budget exhausted before minimality was proven",
        }
    return "ok", {"decomposition": decomposition.to_dict()}


def cmd_color(args, config: ConfigLoader) -> Outcome:
    """Embedding of B or a colouring with no monochromatic A."""
    direct = config.colorer.get("direct_search", True) and not args.no_direct_search
    certificate = find_B_or_color(
        load_graph(args.graph),
        load_graph(args.pattern),
        load_graph(args.forest),
        direct_search=direct,
        copy_limit=config.budget("copy_limit"),
        packing_budget=_budget(args, config, "packing_nodes"),
        forest_budget=config.budget("forest_nodes"),
    )
    return certificate.status.value, certificate.to_dict()


def cmd_ramsey(args, config: ConfigLoader) -> Outcome:
    """Exact vertex r-Ramsey decision."""
    decision = is_r_ramsey(
        load_graph(args.graph),
        load_graph(args.pattern),
        args.r,
        budget=_budget(args, config, "ramsey_nodes"),
        copy_limit=config.budget("copy_limit"),
    )
    if decision.ramsey is None:
        return "unknown", decision.to_dict()
    return ("ramsey" if decision.ramsey else "not_ramsey"), decision.to_dict()


def cmd_dense(args, config: ConfigLoader) -> Outcome:
    """Epsilon-density, exact or sampled; with -r, whether 1/r-density settles Ramseyness."""
    g, a = load_graph(args.graph), load_graph(args.pattern)
    cap = _budget(args, config, "subset_cap")
    if args.r is not None:
        check = density_implies_ramsey(g, a, args.r, cap=cap)
        return ("dense" if check.ramsey_implied else "not_dense"), check.to_dict()
    if args.eps is None:
        raise CliUsageError("dense: one of --eps or -r is required")
    result = is_eps_dense(
        g, a, args.eps,
        mode=args.mode,
        trials=_trials(args, config.construction["density_trials"]),
        seed=_seed(args, config),
        cap=cap,
    )
    if args.mode == "exact":
        return ("dense" if result.dense else "not_dense"), result.to_dict()
    return "ok", result.to_dict()


def cmd_construct(args, config: ConfigLoader) -> Outcome:
    """Random F-free dense graph."""
    construction = config.construction
    graph, report = construct_f_free_dense(
        args.n,
        load_graph(args.pattern),
        [load_graph(member) for member in args.family],
        args.eps,
        seed=_seed(args, config),
        deletion_multiplier=(
            args.multiplier if args.multiplier is not None else construction["deletion_multiplier"]
        ),
        density_trials=_trials(args, construction["density_trials"]),
        copy_limit=config.budget("copy_limit"),
        p=args.p,
        clamp=construction.get("clamp_probability", True) and not args.no_clamp,
        jobs=_jobs(args, config),
    )
    return "ok", report.to_dict()


def cmd_covers(args, config: ConfigLoader) -> Outcome:
    """Minimal trace covers of a core and the cover inequality."""
    b_prime, a = load_graph(args.graph), load_graph(args.pattern)
    covers = enumerate_min_trace_covers(
        b_prime, a,
        max_ell=args.max_ell,
        edge_cap=config.budget("cover_edge_cap"),
        limit=config.budget("cover_limit"),
    )
    report = verify_cover_inequality(b_prime, a, covers=covers)
    return ("ok" if report.holds else "violated"), {
        "covers": [c.to_dict() for c in covers],
        "inequality": report.to_dict(),
    }


def cmd_count(args, config: ConfigLoader) -> Outcome:
    """Monte Carlo copy count of a core in G_A(n, p)."""
    estimate = estimate_copy_count(
        load_graph(args.graph),
        load_graph(args.pattern),
        args.n,
        args.eps,
        trials=_trials(args, 100),
        seed=_seed(args, config),
        p=args.p,
        jobs=_jobs(args, config),
        copy_limit=config.budget("copy_limit"),
        cover_edge_cap=config.budget("cover_edge_cap"),
    )
    return "ok", estimate.to_dict()


def cmd_estimate_density(args, config: ConfigLoader) -> Outcome:
    """Fraction of random subsets spanning a copy of A."""
    estimate = estimate_density(
        load_graph(args.graph),
        load_graph(args.pattern),
        args.subset_size,
        trials=_trials(args, config.construction["density_trials"]),
        seed=_seed(args, config),
        jobs=_jobs(args, config),
    )
    return "ok", estimate.to_dict()


COMMANDS = {
    "blocks": cmd_blocks,
    "degenerate": cmd_degenerate,
    "forest": cmd_forest,
    "color": cmd_color,
    "ramsey": cmd_ramsey,
    "dense": cmd_dense,
    "construct": cmd_construct,
    "covers": cmd_covers,
    "count": cmd_count,
    "estimate-density": cmd_estimate_density,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="vertex-ramsey",
        description="Vertex Ramsey toolkit - degeneracy, certified colourings, random constructions",
    )
    parser.add_argument("--config", "-c", default=None, help="Path to config file")
    parser.add_argument("--log-level", default=None, help="Logging level (default from config)")

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=None, help="Output format")
    common.add_argument("--out", "-o", default=None, help="Output file (default: stdout)")
    common.add_argument("--seed", type=int, default=None, help="Master seed (default 0)")
    common.add_argument("--budget", type=int, default=None, help="Search budget of the command")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes for Monte Carlo trials")

    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)

    def sub(name: str, help_text: str, *graphs: str) -> argparse.ArgumentParser:
        p = subparsers.add_parser(name, help=help_text, parents=[common])
        for flag in graphs:
            p.add_argument(f"--{flag}", required=True, help=f"{flag} graph (graph6, name or @file)")
        return p

    sub("blocks", "Block decomposition", "graph")
    sub("degenerate", "A-degeneracy check", "graph", "pattern")
    sub("forest", "Minimum A-forest decomposition", "graph", "pattern")

    color = sub("color", "Find B or colour G", "graph", "pattern", "forest")
    color.add_argument("--no-direct-search", action="store_true", help="Run the recursion only")

    ramsey = sub("ramsey", "Exact r-Ramsey decision", "graph", "pattern")
    ramsey.add_argument("-r", type=int, required=True, help="Number of colours")

    dense = sub("dense", "Epsilon-density", "graph", "pattern")
    dense.add_argument("--eps", type=str, default=None, help="Density in (0, 1]")
    dense.add_argument("-r", type=int, default=None, help="Check 1/r-density as a Ramsey certificate")
    dense.add_argument("--mode", choices=["exact", "sampled"], default="exact")
    dense.add_argument("--trials", type=int, default=None)

    construct = sub("construct", "Random F-free dense graph", "pattern")
    construct.add_argument("-n", type=int, required=True, help="Vertex count")
    construct.add_argument("--family", action="append", required=True, help="Forbidden graph (repeatable)")
    construct.add_argument("--eps", type=float, required=True)
    construct.add_argument("--trials", type=int, default=None, help="Density trials")
    construct.add_argument("--p", type=float, default=None, help="Override the copy probability")
    construct.add_argument("--multiplier", type=float, default=None, help="C in the C*sqrt(n) budget")
    construct.add_argument("--no-clamp", action="store_true", help="Reject p > 1 instead of clamping")

    covers = sub("covers", "Minimal trace covers and the cover inequality", "graph", "pattern")
    covers.add_argument("--max-ell", type=int, default=None)

    count = sub("count", "Monte Carlo core copy count", "graph", "pattern")
    count.add_argument("-n", type=int, required=True)
    count.add_argument("--eps", type=float, required=True)
    count.add_argument("--trials", type=int, default=None)
    count.add_argument("--p", type=float, default=None)

    density = sub("estimate-density", "Sampled subset density", "graph", "pattern")
    density.add_argument("--subset-size", "-N", type=int, required=True)
    density.add_argument("--trials", type=int, default=None)

    return parser


def execute(argv: Optional[List[str]] = None) -> Tuple[int, Dict[str, Any], ConfigLoader, argparse.Namespace]:
    """
    Parse argv and run one command.

    Returns:
        (exit code, output document, config, parsed args)

    Raises:
        CliUsageError: Bad command line
        ValueError: Invalid input (graphs, parameters)
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        raise CliUsageError(parser.format_help())

    config = ConfigLoader(args.config)
    setup_logging(level=args.log_level or config.log_level)

    try:
        status, result = COMMANDS[args.command](args, config)
    except (EnumerationTruncated, SearchBudgetExceeded) as e:
        logging.getLogger(__name__).warning(str(e))
        partial = getattr(e, "partial", None)
        status, result = "unknown", {
            "reason": str(e),
            "partial": partial.to_dict() if partial is not None else None,
        }

    code = EXIT_UNKNOWN if status == "unknown" else EXIT_OK
    return code, make_document(args.command, status, result), config, args


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return the exit code."""
    try:
        code, document, config, args = execute(argv)
    except CliUsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_ERROR
    except CertificateError as e:
        sys.stderr.write(f"internal error: {e}\n")
        return EXIT_ERROR
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR

    try:
        write_output(render(document, args.format or config.output_format), args.out)
    except OSError as e:
        sys.stderr.write(f"error: cannot write output: {e}\n")
        return EXIT_ERROR
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
