"""Maximum independent families of k-cliques.

Two distinct k-cliques conflict when they share a vertex. At k=1 distinct
vertices never share one, so there adjacency is the conflict instead: the
family is an ordinary independent set. At k=2 the family is a matching.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .cliques import Clique, enumerate_cliques
from .graph import Graph

__all__ = [
    "SolverBudget",
    "PackingSolution",
    "max_clique_packing",
    "greedy_maximal_packing",
    "is_vertex_disjoint",
    "brute_force_packing_size",
]


@dataclass(frozen=True)
class SolverBudget:
    node_limit: int = 10_000_000
    time_limit: float = 60.0

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("solver budget limits must be positive")


@dataclass(frozen=True)
class PackingSolution:
    k: int
    members: tuple[Clique, ...]
    optimal: bool
    nodes: int = 0

    @property
    def size(self) -> int:
        return len(self.members)


def is_vertex_disjoint(members) -> bool:
    seen: set[int] = set()
    for q in members:
        vs = q.vertices if isinstance(q, Clique) else tuple(q)
        for v in vs:
            if v in seen:
                return False
            seen.add(v)
    return True


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"clique order must be >= 1, got {k}")


def _blocked(g: Graph, k: int, mask: int) -> int:
    """Vertices a later member may not touch once ``mask`` is chosen."""
    if k == 1:
        return mask | g.rows[mask.bit_length() - 1]
    return mask


def _certify(g: Graph, k: int, members: tuple[Clique, ...]) -> None:
    for q in members:
        Clique.of(g, q.vertices)
        if q.order != k:
            raise AssertionError(f"packing member {q.vertices} is not a {k}-clique")
    if not is_vertex_disjoint(members):
        raise AssertionError("packing members overlap")
    if k == 1 and any(g.has_edge(a.vertices[0], b.vertices[0]) for a, b in combinations(members, 2)):
        raise AssertionError("vertex packing is not an independent set")


def _greedy_indices(g: Graph, k: int, masks: list[int]) -> list[int]:
    used = 0
    chosen = []
    for i, m in enumerate(masks):
        if not m & used:
            chosen.append(i)
            used |= _blocked(g, k, m)
    return chosen


def greedy_maximal_packing(g: Graph, k: int) -> PackingSolution:
    """Scan k-cliques lexicographically, keeping each one that conflicts with none kept so far."""
    _check_k(k)
    cliques = enumerate_cliques(g, k)
    chosen = _greedy_indices(g, k, [q.mask for q in cliques])
    members = tuple(cliques[i] for i in chosen)
    _certify(g, k, members)
    return PackingSolution(k, members, optimal=False)


def max_clique_packing(g: Graph, k: int, budget: SolverBudget | None = None) -> PackingSolution:
    """Exact maximum independent family of k-cliques by branch and bound.

    Branches on the lexicographically first remaining clique, include before
    exclude, starting from the greedy family. The incumbent is only replaced
    by strictly larger families, so the answer is the lexicographically least
    optimum. Pruning uses min(#remaining cliques, |covered vertices| // k).
    If the budget runs out the incumbent is returned with ``optimal=False``.
    """
    _check_k(k)
    budget = budget or SolverBudget()
    cliques = enumerate_cliques(g, k)
    masks = [q.mask for q in cliques]
    count = len(masks)
    # conflict[i]: later cliques clashing with clique i, plus i itself
    conflict = [0] * count
    for i in range(count):
        blocked = _blocked(g, k, masks[i])
        c = 0
        for j in range(i, count):
            if blocked & masks[j]:
                c |= 1 << j
        conflict[i] = c

    best = _greedy_indices(g, k, masks)
    nodes = 0
    exhausted = False
    deadline = time.monotonic() + budget.time_limit

    def upper(avail: int) -> int:
        covered = 0
        x = avail
        while x:
            low = x & -x
            covered |= masks[low.bit_length() - 1]
            x ^= low
        return min(avail.bit_count(), covered.bit_count() // k)

    def search(avail: int, chosen: list[int]) -> None:
        nonlocal best, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > budget.node_limit or (nodes & 1023 == 0 and time.monotonic() > deadline):
            exhausted = True
            return
        if not avail:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + upper(avail) <= len(best):
            return
        low = avail & -avail
        i = low.bit_length() - 1
        chosen.append(i)
        search(avail & ~conflict[i], chosen)
        chosen.pop()
        search(avail & ~low, chosen)

    search((1 << count) - 1, [])
    members = tuple(cliques[i] for i in best)
    _certify(g, k, members)
    return PackingSolution(k, members, optimal=not exhausted, nodes=nodes)


def brute_force_packing_size(g: Graph, k: int) -> int:
    """Reference oracle: largest r such that some r-subset of k-cliques is independent.

    Tries subset sizes in increasing order; an independent (r+1)-family
    contains an independent r-family, so the first size with no witness ends
    the search. Independence is tested pairwise from vertex tuples.
    """
    _check_k(k)
    cliques = [tuple(q.vertices) for q in enumerate_cliques(g, k)]

    def clash(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        if set(a) & set(b):
            return True
        return k == 1 and g.has_edge(a[0], b[0])

    best = 0
    for r in range(1, len(cliques) + 1):
        found = False
        for combo in combinations(cliques, r):
            if not any(clash(a, b) for a, b in combinations(combo, 2)):
                found = True
                break
        if not found:
            break
        best = r
    return best
