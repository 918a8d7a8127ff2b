"""Command-line entry point: ``cliquevalue analyze|verify|hunt|gen``.

Exit codes: 0 all checks pass, 1 at least one finding, 2 usage or input error.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .graph import (
    EXHAUSTIVE_MAX_N,
    Graph,
    GraphError,
    from_graph6,
    parse_generator_spec,
    read_edge_list,
    to_graph6,
    write_edge_list,
)
from .harness import SUITES, analyze, run_hunt, run_verify
from .packing import SolverBudget
from .report import emit_report

log = logging.getLogger("cliquevalue")


class UsageError(Exception):
    pass


def _k_values(args) -> list[int] | None:
    if args.k is not None and args.k_range is not None:
        raise UsageError("give --k or --k-range, not both")
    if args.k is not None:
        if args.k < 1:
            raise UsageError("--k must be >= 1")
        return [args.k]
    if args.k_range is not None:
        lo, sep, hi = args.k_range.partition("..")
        try:
            a, b = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"--k-range must look like A..B, got {args.k_range!r}") from None
        if not sep or a < 1 or b < a:
            raise UsageError(f"bad --k-range {args.k_range!r}")
        return list(range(a, b + 1))
    return None


def _load_graph(args) -> Graph:
    if (args.input is None) == (args.gen is None):
        raise UsageError("give exactly one of --input or --gen")
    if args.gen is not None:
        return parse_generator_spec(args.gen, seed=args.seed)
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    if not text.strip():
        raise GraphError("empty graph input")
    fmt = args.format
    if fmt is None:
        fmt = "edgelist" if len(text.strip().splitlines()[0].split()) == 2 else "graph6"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphError(f"expected one graph6 line, got {len(lines)}")
        return from_graph6(lines[0])
    return read_edge_list(text)


def _budget(args) -> SolverBudget:
    try:
        return SolverBudget(node_limit=args.budget_nodes, time_limit=args.budget_secs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(doc, fmt: str) -> None:
    sys.stdout.buffer.write(emit_report(doc, fmt))
    sys.stdout.flush()


def cmd_analyze(args) -> int:
    g = _load_graph(args)
    doc = analyze(g, _k_values(args), chain=args.chain, budget=_budget(args), one_based=args.one_based)
    _emit(doc, args.output)
    return 1 if doc["findings"] else 0


def cmd_verify(args) -> int:
    if (args.exhaustive is None) == (args.random is None):
        raise UsageError("give exactly one of --exhaustive N or --random N")
    if args.exhaustive is not None and not 0 <= args.exhaustive <= EXHAUSTIVE_MAX_N:
        raise UsageError(f"--exhaustive limited to 0..{EXHAUSTIVE_MAX_N}")
    if args.random is not None and args.seed is None:
        raise UsageError("--random requires --seed")
    chosen = [s for s in SUITES if getattr(args, s)]
    doc = run_verify(
        exhaustive=args.exhaustive,
        random_count=args.random,
        seed=args.seed,
        suites=chosen or SUITES,
        max_n=args.max_n,
        budget=_budget(args),
    )
    log.info("examined %d graphs, passed=%s", doc["graphs"], doc["passed"])
    _emit(doc, args.output)
    return 0 if doc["passed"] else 1


def _p_grid(args) -> list[float]:
    if args.p is not None and args.p_grid is not None:
        raise UsageError("give --p or --p-grid, not both")
    if args.p is not None:
        return [args.p]
    if args.p_grid is not None:
        try:
            grid = [float(x) for x in args.p_grid.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"bad --p-grid {args.p_grid!r}") from None
    else:
        grid = [0.2, 0.3, 0.4]
    if not grid or any(not 0.0 <= p <= 1.0 for p in grid):
        raise UsageError("p values must lie in [0, 1]")
    return grid


def cmd_hunt(args) -> int:
    if args.seed is None:
        raise UsageError("hunt requires --seed")
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    try:
        doc = run_hunt(
            k=args.k, seed=args.seed, samples=args.samples, n=args.n,
            p_grid=_p_grid(args), target=args.target, budget=_budget(args),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    log.info("%d eligible samples, %d findings", doc["eligible"], len(doc["findings"]))
    _emit(doc, args.output)
    return 1 if doc["findings"] else 0


def cmd_gen(args) -> int:
    g = parse_generator_spec(args.spec, seed=args.seed)
    text = write_edge_list(g) if args.format == "edgelist" else to_graph6(g) + "\n"
    sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquevalue", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flags(p):
        p.add_argument("--budget-nodes", type=int, default=10_000_000)
        p.add_argument("--budget-secs", type=float, default=60.0)

    p = sub.add_parser("analyze", help="census, clique values, bounds and proof chain for one graph")
    p.add_argument("--input", help="graph file path, or - for stdin")
    p.add_argument("--gen", help="generator spec, e.g. turan:6,2 or gnp:10,0.3")
    p.add_argument("--format", choices=["graph6", "edgelist"], help="input format (default: sniff)")
    p.add_argument("--k", type=int)
    p.add_argument("--k-range")
    p.add_argument("--chain", action="store_true", help="run the proof-chain verifier at the largest k")
    p.add_argument("--one-based", action="store_true", help="print vertex ids starting at 1")
    p.add_argument("--seed", type=int)
    p.add_argument("--output", choices=["json", "csv"], default="json")
    budget_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="exhaustive or random verification suites")
    p.add_argument("--exhaustive", type=int, metavar="N")
    p.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int)
    p.add_argument("--max-n", type=int, default=8, help="largest n in random mode")
    for suite in SUITES:
        p.add_argument(f"--{suite}", action="store_true", help=f"run the {suite} suite (default: all)")
    p.add_argument("--output", choices=["json", "csv"], default="json")
    budget_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", help="random counterexample search")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--target", default="all", help="bound | steps | step:S1..S5 | all")
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float)
    p.add_argument("--p-grid")
    p.add_argument("--output", choices=["json", "csv"], default="json")
    budget_flags(p)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("gen", help="print a generated graph")
    p.add_argument("spec", help="family:params, e.g. book:3, turan:9,3, gnp:10,0.3")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
