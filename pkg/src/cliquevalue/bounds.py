"""Mantel-type bounds c_{k+1} <= c_k^2 / (4k) for K_{k+2}-free graphs.

k=1 is Mantel's edge bound m <= n^2/4, k=2 the triangle bound t <= m^2/8.
All arithmetic is exact (``fractions.Fraction``).

The proof-chain verifier evaluates each intermediate inequality of the
maximum-packing argument separately:

    S1  val(q) <= |A| for every k-clique q
    S2  sum of val over A <= c_{k+1}
    S3  sum over A + sum over B == (k+1) c_{k+1}
    S4  k c_{k+1} <= sum of val over B
    S5  c_{k+1} <= |A| |B| / k

where A is a maximum vertex-disjoint family of k-cliques and B the remaining
k-cliques. S5 followed by AM-GM gives the final bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cliques import Clique, clique_census, enumerate_cliques, _common_neighbours
from .graph import Graph, GraphError
from .packing import PackingSolution, SolverBudget, max_clique_packing

__all__ = [
    "BoundReport",
    "ChainStep",
    "ProofChainReport",
    "IneligibleGraph",
    "check_clique_mantel",
    "verify_proof_chain",
    "tightness_gap",
    "STEP_IDS",
]

STEP_IDS = ("S1", "S2", "S3", "S4", "S5")


class IneligibleGraph(GraphError):
    """The graph contains K_{k+2}, so the bound's hypothesis fails."""


@dataclass(frozen=True)
class BoundReport:
    k: int
    eligible: bool
    lhs: int
    rhs: Fraction
    holds: bool | None
    slack: Fraction | None


@dataclass(frozen=True)
class ChainStep:
    id: str
    lhs: Fraction
    rhs: Fraction
    holds: bool | None


@dataclass(frozen=True)
class ProofChainReport:
    k: int
    packing: PackingSolution
    a_size: int
    b_size: int
    steps: tuple[ChainStep, ...]
    final_bound: BoundReport
    warning: str | None = None

    def step(self, step_id: str) -> ChainStep:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"bound parameter k must be >= 1, got {k}")


def _bound_from_counts(k: int, ck: int, ck1: int, ck2: int) -> BoundReport:
    rhs = Fraction(ck * ck, 4 * k)
    if ck2 != 0:
        return BoundReport(k, False, ck1, rhs, None, None)
    return BoundReport(k, True, ck1, rhs, ck1 <= rhs, rhs - ck1)


def check_clique_mantel(g: Graph, k: int) -> BoundReport:
    """Check c_{k+1}(G) <= c_k(G)^2 / (4k); eligible iff G has no (k+2)-clique."""
    _check_k(k)
    census = clique_census(g)
    return _bound_from_counts(k, census.c(k), census.c(k + 1), census.c(k + 2))


def tightness_gap(g: Graph, k: int) -> Fraction:
    report = check_clique_mantel(g, k)
    if not report.eligible:
        raise IneligibleGraph(f"graph contains K_{k + 2}; gap undefined for k={k}")
    return report.slack


def verify_proof_chain(g: Graph, k: int, budget: SolverBudget | None = None) -> ProofChainReport:
    _check_k(k)
    final = check_clique_mantel(g, k)
    if not final.eligible:
        raise IneligibleGraph(f"graph contains K_{k + 2}; proof chain needs a K_{k + 2}-free graph")
    packing = max_clique_packing(g, k, budget)
    cliques = enumerate_cliques(g, k)
    values = {q: _common_neighbours(g, q.mask).bit_count() for q in cliques}
    in_a = set(packing.members)
    a_size = len(in_a)
    b_size = len(cliques) - a_size
    sum_a = sum(values[q] for q in in_a)
    sum_b = sum(v for q, v in values.items() if q not in in_a)
    c_next = final.lhs
    max_val = max(values.values(), default=0)

    s1 = max_val <= a_size if packing.optimal else None
    steps = (
        ChainStep("S1", Fraction(max_val), Fraction(a_size), s1),
        ChainStep("S2", Fraction(sum_a), Fraction(c_next), sum_a <= c_next),
        ChainStep("S3", Fraction(sum_a + sum_b), Fraction((k + 1) * c_next), sum_a + sum_b == (k + 1) * c_next),
        ChainStep("S4", Fraction(k * c_next), Fraction(sum_b), k * c_next <= sum_b),
        ChainStep("S5", Fraction(c_next), Fraction(a_size * b_size, k), c_next <= Fraction(a_size * b_size, k)),
    )
    if not steps[2].holds:
        raise AssertionError(f"handshaking split failed: {steps[2]}")
    if s1 and steps[1].holds and not (steps[3].holds and steps[4].holds):
        raise AssertionError("S4/S5 failed although S1-S3 hold")
    if Fraction(a_size * b_size, k) > final.rhs:
        raise AssertionError("AM-GM step failed")
    warning = None if packing.optimal else "packing solver budget exhausted; |A| may not be maximum"
    return ProofChainReport(k, packing, a_size, b_size, steps, final, warning)
