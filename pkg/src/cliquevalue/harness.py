"""Verification suites, counterexample hunts and single-graph analysis.

These build plain report documents (dicts) for :mod:`cliquevalue.report`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable

from .bounds import IneligibleGraph, check_clique_mantel, verify_proof_chain
from .cliques import (
    clique_census,
    clique_value,
    enumerate_cliques,
    subgraph_count,
    subgraph_count_by_embeddings,
    verify_handshaking,
    verify_kelly,
)
from .graph import Graph, enumerate_all_labeled_graphs, from_edge_list, from_graph6, generate, to_graph6
from .packing import SolverBudget, brute_force_packing_size, greedy_maximal_packing, max_clique_packing
from .report import bound_row, chain_doc, handshaking_row

__all__ = [
    "Finding",
    "KELLY_PATTERNS",
    "reverify",
    "analyze",
    "run_verify",
    "random_kelly_host",
    "run_hunt",
]

FINDING_KINDS = ("bound_violation", "step_violation", "identity_violation")

KELLY_PATTERNS: dict[str, Graph] = {
    "K2": from_edge_list(2, [(0, 1)]),
    "P3": from_edge_list(3, [(0, 1), (1, 2)]),
    "K3": from_edge_list(3, [(0, 1), (0, 2), (1, 2)]),
    "C4": from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
}


@dataclass(frozen=True)
class Finding:
    """A failed check together with a graph6 witness that reproduces it.

    ``step`` names the check: a proof step id (``S1``..``S5``) for step
    violations, or ``handshaking``, ``kelly:<pattern>``, ``packing`` for
    identity violations.
    """

    kind: str
    graph: str
    k: int
    step: str | None
    lhs: Fraction
    rhs: Fraction

    def __post_init__(self) -> None:
        if self.kind not in FINDING_KINDS:
            raise ValueError(f"unknown finding kind {self.kind!r}")

    def to_dict(self) -> dict[str, Any]:
        lhs, rhs = Fraction(self.lhs), Fraction(self.rhs)
        return {
            "kind": self.kind,
            "graph": self.graph,
            "k": self.k,
            "step": self.step,
            "lhs_num": lhs.numerator,
            "lhs_den": lhs.denominator,
            "rhs_num": rhs.numerator,
            "rhs_den": rhs.denominator,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Finding":
        return cls(
            d["kind"], d["graph"], d["k"], d["step"],
            Fraction(d["lhs_num"], d["lhs_den"]), Fraction(d["rhs_num"], d["rhs_den"]),
        )

    def sort_key(self) -> tuple:
        return (self.graph, self.kind, self.k, self.step or "")


def _sorted_findings(findings: Iterable[Finding]) -> list[dict[str, Any]]:
    return [f.to_dict() for f in sorted(findings, key=Finding.sort_key)]


def reverify(finding: Finding, budget: SolverBudget | None = None) -> bool:
    """Decode the witness and re-run the named check; True iff it fails again identically."""
    g = from_graph6(finding.graph)
    k = finding.k
    if finding.kind == "bound_violation":
        b = check_clique_mantel(g, k)
        return b.eligible and b.holds is False and (b.lhs, b.rhs) == (finding.lhs, finding.rhs)
    if finding.kind == "step_violation":
        s = verify_proof_chain(g, k, budget).step(finding.step)
        return s.holds is False and (s.lhs, s.rhs) == (finding.lhs, finding.rhs)
    if finding.kind == "identity_violation":
        if finding.step == "handshaking":
            h = verify_handshaking(g, k)
            return not h.equal
        if finding.step and finding.step.startswith("kelly:"):
            r = verify_kelly(KELLY_PATTERNS[finding.step.split(":", 1)[1]], g)
            return not r.equal
        if finding.step == "packing":
            return max_clique_packing(g, k, budget).size != brute_force_packing_size(g, k)
    raise ValueError(f"cannot re-verify finding {finding}")


# --- analyze -------------------------------------------------------------------

def analyze(
    g: Graph,
    ks: Iterable[int] | None = None,
    chain: bool = False,
    budget: SolverBudget | None = None,
    one_based: bool = False,
) -> dict[str, Any]:
    shift = 1 if one_based else 0
    census = clique_census(g)
    omega = census.clique_number
    ks = list(ks) if ks is not None else list(range(1, max(2, omega)))
    findings: list[Finding] = []
    w = to_graph6(g)

    values = []
    for k in range(1, omega + 1):
        values.append({
            "k": k,
            "cliques": [
                {"vertices": [v + shift for v in q.vertices], "value": clique_value(g, q)}
                for q in enumerate_cliques(g, k)
            ],
        })

    handshaking = []
    for k in range(1, omega):
        h = verify_handshaking(g, k)
        handshaking.append(handshaking_row(h))
        if not h.equal:
            findings.append(Finding("identity_violation", w, k, "handshaking", Fraction(h.value_sum), Fraction(h.rhs)))

    bounds = []
    for k in ks:
        b = check_clique_mantel(g, k)
        bounds.append(bound_row(b))
        if b.eligible and not b.holds:
            findings.append(Finding("bound_violation", w, k, None, Fraction(b.lhs), b.rhs))

    doc: dict[str, Any] = {
        "graph6": w,
        "n": g.n,
        "m": g.m,
        "census": list(census.counts),
        "clique_number": omega,
        "values": values,
        "handshaking": handshaking,
        "bounds": bounds,
    }
    if chain:
        k = max(ks)
        try:
            r = verify_proof_chain(g, k, budget)
        except IneligibleGraph:
            doc["chain"] = {"k": k, "eligible": False}
        else:
            doc["chain"] = chain_doc(r, shift)
            for s in r.steps:
                if s.holds is False:
                    findings.append(Finding("step_violation", w, k, s.id, s.lhs, s.rhs))
    doc["findings"] = _sorted_findings(findings)
    return doc


# --- verify --------------------------------------------------------------------

SUITES = ("handshaking", "kelly", "bounds", "packing", "chain")


class _Tally:
    def __init__(self, suites: Iterable[str]):
        self.counts = {s: {"checked": 0, "failed": 0} for s in suites}
        self.findings: list[Finding] = []
        self.notes: dict[str, int] = {}

    def record(self, suite: str, ok: bool, finding: Finding | None = None) -> None:
        self.counts[suite]["checked"] += 1
        if not ok:
            self.counts[suite]["failed"] += 1
            if finding is not None:
                self.findings.append(finding)

    def note(self, key: str, amount: int = 1) -> None:
        self.notes[key] = self.notes.get(key, 0) + amount


def _triangles_direct(g: Graph) -> int:
    return sum(
        1 for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    )


def _check_graph(g: Graph, suites: tuple[str, ...], tally: _Tally, budget: SolverBudget, kelly_patterns) -> None:
    w = None

    def witness() -> str:
        nonlocal w
        if w is None:
            w = to_graph6(g)
        return w

    if "handshaking" in suites:
        for k in range(1, max(2, g.n)):
            h = verify_handshaking(g, k)
            tally.record("handshaking", h.equal, None if h.equal else Finding(
                "identity_violation", witness(), k, "handshaking", Fraction(h.value_sum), Fraction(h.rhs)))

    if "kelly" in suites and not g.has_isolated_vertex():
        for name in kelly_patterns:
            h = KELLY_PATTERNS[name]
            if h.n > g.n:
                continue
            r = verify_kelly(h, g)
            routes_agree = subgraph_count(h, g) == subgraph_count_by_embeddings(h, g)
            ok = r.equal and routes_agree
            tally.record("kelly", ok, None if ok else Finding(
                "identity_violation", witness(), h.n, f"kelly:{name}", Fraction(r.lhs), Fraction(r.rhs)))

    if "bounds" in suites:
        for k in (1, 2, 3):
            b = check_clique_mantel(g, k)
            if not b.eligible:
                continue
            ok = bool(b.holds)
            # specialisations re-derived without the census
            if k == 1:
                ok = ok and 4 * g.m <= g.n * g.n
            elif k == 2:
                ok = ok and 8 * _triangles_direct(g) <= g.m * g.m
            tally.record("bounds", ok, None if ok else Finding(
                "bound_violation", witness(), k, None, Fraction(b.lhs), b.rhs))

    if "packing" in suites:
        for k in (1, 2, 3):
            exact = max_clique_packing(g, k, budget)
            oracle = brute_force_packing_size(g, k)
            greedy = greedy_maximal_packing(g, k)
            ok = exact.optimal and exact.size == oracle and greedy.size <= exact.size
            tally.record("packing", ok, None if ok else Finding(
                "identity_violation", witness(), k, "packing", Fraction(exact.size), Fraction(oracle)))

    if "chain" in suites:
        # S1 failures are expected evidence, not defects; only S3 and the
        # implication S1-S3 => S4, S5 are checked here.
        for k in (1, 2):
            try:
                r = verify_proof_chain(g, k, budget)
            except IneligibleGraph:
                continue
            except AssertionError:
                tally.record("chain", False, Finding(
                    "step_violation", witness(), k, "S3", Fraction(0), Fraction(0)))
                continue
            tally.record("chain", True)
            for s in r.steps:
                if s.holds is False:
                    tally.note(f"k{k}_{s.id}_fail")


def _summary(mode: str, tally: _Tally, graphs: int, **extra) -> dict[str, Any]:
    failed = sum(c["failed"] for c in tally.counts.values())
    doc: dict[str, Any] = {"command": "verify", "mode": mode}
    doc.update(extra)
    doc["graphs"] = graphs
    doc["suites"] = tally.counts
    doc["step_failure_counts"] = dict(sorted(tally.notes.items()))
    doc["passed"] = failed == 0
    doc["findings"] = _sorted_findings(tally.findings)
    return doc


def random_kelly_host(rng: random.Random, min_n: int, max_n: int) -> Graph:
    """Draw G(n, p) with no isolated vertex, n in [min_n, max_n]."""
    while True:
        n = rng.randint(min_n, max_n)
        p = rng.choice((0.3, 0.4, 0.5, 0.6, 0.7))
        g = generate("gnp", n, p, seed=rng.getrandbits(64))
        if not g.has_isolated_vertex():
            return g


def run_verify(
    exhaustive: int | None = None,
    random_count: int | None = None,
    seed: int | None = None,
    suites: Iterable[str] = SUITES,
    max_n: int = 8,
    budget: SolverBudget | None = None,
) -> dict[str, Any]:
    """Run the chosen suites over all labeled graphs on ``exhaustive`` vertices, or a random corpus.

    In random mode with only the Kelly suite selected, each sample is one
    (pattern, host) pair, patterns cycling K2, P3, K3, C4.
    """
    suites = tuple(s for s in SUITES if s in set(suites))
    budget = budget or SolverBudget()
    if (exhaustive is None) == (random_count is None):
        raise ValueError("choose exactly one of exhaustive or random mode")
    if exhaustive is not None:
        tally = _Tally(suites)
        graphs = 0
        patterns = tuple(p for p in ("K2", "P3", "K3") if KELLY_PATTERNS[p].n <= exhaustive)
        for g in enumerate_all_labeled_graphs(exhaustive):
            graphs += 1
            _check_graph(g, suites, tally, budget, patterns)
        return _summary("exhaustive", tally, graphs, n=exhaustive)

    if seed is None:
        raise ValueError("random mode requires a seed")
    rng = random.Random(seed)
    tally = _Tally(suites)
    names = list(KELLY_PATTERNS)
    if suites == ("kelly",):
        for i in range(random_count):
            name = names[i % len(names)]
            g = random_kelly_host(rng, max(4, KELLY_PATTERNS[name].n), max(max_n, 4))
            _check_graph(g, suites, tally, budget, (name,))
        return _summary("random", tally, random_count, seed=seed)
    for _ in range(random_count):
        n = rng.randint(1, max_n)
        p = rng.choice((0.2, 0.3, 0.4, 0.5, 0.6))
        g = generate("gnp", n, p, seed=rng.getrandbits(64))
        _check_graph(g, suites, tally, budget, tuple(names))
    return _summary("random", tally, random_count, seed=seed)


# --- hunt ----------------------------------------------------------------------

def run_hunt(
    k: int,
    seed: int,
    samples: int,
    n: int = 10,
    p_grid: Iterable[float] = (0.2, 0.3, 0.4),
    target: str = "all",
    budget: SolverBudget | None = None,
) -> dict[str, Any]:
    """Sample G(n, p) over the p grid and record every failed bound or proof step.

    ``target`` is ``bound``, ``step:S1``..``step:S5``, ``steps`` or ``all``.
    """
    p_grid = [float(p) for p in p_grid]
    if not p_grid:
        raise ValueError("p grid is empty")
    steps = ("S1", "S2", "S3", "S4", "S5")
    if target in ("all", "steps"):
        want_steps = set(steps)
    elif target == "bound":
        want_steps = set()
    elif target.startswith("step:") and target[5:] in steps:
        want_steps = {target[5:]}
    else:
        raise ValueError(f"unknown hunt target {target!r}")
    want_bound = target in ("bound", "all")
    rng = random.Random(seed)
    findings: list[Finding] = []
    eligible = 0
    for i in range(samples):
        p = p_grid[i % len(p_grid)]
        g = generate("gnp", n, p, seed=rng.getrandbits(64))
        b = check_clique_mantel(g, k)
        if not b.eligible:
            continue
        eligible += 1
        w = to_graph6(g)
        if want_bound and not b.holds:
            findings.append(Finding("bound_violation", w, k, None, Fraction(b.lhs), b.rhs))
        if want_steps:
            r = verify_proof_chain(g, k, budget)
            for s in r.steps:
                if s.id in want_steps and s.holds is False:
                    findings.append(Finding("step_violation", w, k, s.id, s.lhs, s.rhs))
    return {
        "command": "hunt",
        "k": k,
        "target": target,
        "seed": seed,
        "samples": samples,
        "n": n,
        "p_grid": p_grid,
        "eligible": eligible,
        "findings": _sorted_findings(findings),
    }
