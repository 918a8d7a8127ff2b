"""k-clique enumeration, clique values, censuses and the two counting identities.

Enumeration walks a degeneracy ordering: every vertex keeps a bitmask of its
neighbours that come later in the ordering, and cliques are grown by
intersecting those masks, so each clique is produced exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from .graph import Graph, GraphError

__all__ = [
    "Clique",
    "CliqueCensus",
    "HandshakingReport",
    "KellyReport",
    "SUBGRAPH_MAX_K",
    "degeneracy_order",
    "clique_masks",
    "enumerate_cliques",
    "count_cliques",
    "clique_value",
    "clique_census",
    "verify_handshaking",
    "subgraph_count",
    "subgraph_count_by_embeddings",
    "verify_kelly",
]

SUBGRAPH_MAX_K = 8


@dataclass(frozen=True, order=True)
class Clique:
    vertices: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, vertices) -> "Clique":
        """Validated constructor: vertices must be distinct and pairwise adjacent in ``g``."""
        vs = tuple(sorted(int(v) for v in vertices))
        if not vs:
            raise GraphError("a clique needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise GraphError(f"repeated vertex in clique {vs}")
        for v in vs:
            if not 0 <= v < g.n:
                raise GraphError(f"vertex {v} out of range for n={g.n}")
        for u, v in combinations(vs, 2):
            if not g.has_edge(u, v):
                raise GraphError(f"{vs} is not a clique: {u} and {v} are not adjacent")
        return cls(vs)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        out = 0
        for v in self.vertices:
            out |= 1 << v
        return out


@dataclass(frozen=True)
class CliqueCensus:
    counts: tuple[int, ...]

    @property
    def clique_number(self) -> int:
        return len(self.counts)

    def c(self, k: int) -> int:
        """Number of k-cliques; 0 beyond the clique number (and for k < 1)."""
        if 1 <= k <= len(self.counts):
            return self.counts[k - 1]
        return 0


@dataclass(frozen=True)
class HandshakingReport:
    k: int
    value_sum: int
    rhs: int
    equal: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "equal", self.value_sum == self.rhs)


@dataclass(frozen=True)
class KellyReport:
    lhs: int
    rhs: int
    per_vertex: tuple[int, ...]
    equal: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "equal", self.lhs == self.rhs)


def _lowbits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (lowest id on ties)."""
    alive = (1 << g.n) - 1
    deg = g.degrees()
    order = []
    for _ in range(g.n):
        v = min(_lowbits(alive), key=lambda u: (deg[u], u))
        order.append(v)
        alive &= ~(1 << v)
        for u in _lowbits(g.rows[v] & alive):
            deg[u] -= 1
    return order


def _forward_masks(g: Graph) -> list[int]:
    order = degeneracy_order(g)
    later = [0] * g.n
    remaining = (1 << g.n) - 1
    for v in order:
        remaining &= ~(1 << v)
        later[v] = g.rows[v] & remaining
    return later


def clique_masks(g: Graph, k: int) -> list[int]:
    """Vertex bitmasks of all k-cliques, in no particular order."""
    if k < 1:
        raise ValueError(f"clique order must be >= 1, got {k}")
    if k == 1:
        return [1 << v for v in range(g.n)]
    later = _forward_masks(g)
    out: list[int] = []

    def grow(members: int, cand: int, size: int) -> None:
        if size == k:
            out.append(members)
            return
        if cand.bit_count() < k - size:
            return
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            grow(members | low, cand & later[low.bit_length() - 1], size + 1)

    for v in range(g.n):
        grow(1 << v, later[v], 1)
    return out


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(_lowbits(mask))


def enumerate_cliques(g: Graph, k: int) -> list[Clique]:
    """All k-cliques, each sorted, listed in lexicographic order."""
    return [Clique(t) for t in sorted(_mask_to_tuple(m) for m in clique_masks(g, k))]


def count_cliques(g: Graph, k: int) -> int:
    if k < 1:
        return 0
    return len(clique_masks(g, k))


def _common_neighbours(g: Graph, mask: int) -> int:
    common = -1
    for v in _lowbits(mask):
        common &= g.rows[v]
    return common


def clique_value(g: Graph, q: Clique) -> int:
    """Size of the common neighbourhood of the clique's vertices (degree when k=1)."""
    Clique.of(g, q.vertices)
    return _common_neighbours(g, q.mask).bit_count()


def clique_census(g: Graph) -> CliqueCensus:
    if g.n == 0:
        return CliqueCensus(())
    later = _forward_masks(g)
    counts = [g.n]

    def walk(cand: int, size: int) -> None:
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            if len(counts) < size:
                counts.append(0)
            counts[size - 1] += 1
            walk(cand & later[low.bit_length() - 1], size + 1)

    for v in range(g.n):
        walk(later[v], 2)
    return CliqueCensus(tuple(counts))


def verify_handshaking(g: Graph, k: int) -> HandshakingReport:
    """Compare the summed k-clique values with (k+1) times the (k+1)-clique count."""
    if k < 1:
        raise ValueError(f"clique order must be >= 1, got {k}")
    value_sum = sum(_common_neighbours(g, m).bit_count() for m in clique_masks(g, k))
    return HandshakingReport(k, value_sum, (k + 1) * count_cliques(g, k + 1))


# --- subgraph counts ------------------------------------------------------------

def _check_pattern(h: Graph) -> None:
    if h.n == 0:
        raise GraphError("pattern graph H must have at least one vertex")
    if h.n > SUBGRAPH_MAX_K:
        raise GraphError(f"pattern graph has {h.n} vertices, brute force limited to {SUBGRAPH_MAX_K}")


@lru_cache(maxsize=None)
def _local_pairs(k: int) -> dict[tuple[int, int], int]:
    return {pair: idx for idx, pair in enumerate(combinations(range(k), 2))}


@lru_cache(maxsize=64)
def _orbit(h: Graph) -> frozenset[int]:
    """All labelled edge masks on ``h.n`` vertices isomorphic to ``h``."""
    k = h.n
    idx = _local_pairs(k)
    edges = h.edge_tuples()
    masks = set()
    for perm in permutations(range(k)):
        mask = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            mask |= 1 << idx[(a, b) if a < b else (b, a)]
        masks.add(mask)
    return frozenset(masks)


def _submasks_with_popcount(mask: int, size: int):
    bits = list(_lowbits(mask))
    for chosen in combinations(bits, size):
        out = 0
        for b in chosen:
            out |= 1 << b
        yield out


def subgraph_count(h: Graph, g: Graph) -> int:
    """Number of (not necessarily induced) subgraphs of ``g`` isomorphic to ``h``.

    Counts pairs (vertex subset S with |S| = |V(H)|, edge subset of G[S]) that
    form a copy of H.
    """
    _check_pattern(h)
    k = h.n
    if k > g.n:
        return 0
    orbit = _orbit(h)
    idx = _local_pairs(k)
    total = 0
    for subset in combinations(range(g.n), k):
        local = 0
        for a, b in combinations(range(k), 2):
            if g.has_edge(subset[a], subset[b]):
                local |= 1 << idx[(a, b)]
        if local.bit_count() < h.m:
            continue
        for sub in _submasks_with_popcount(local, h.m):
            if sub in orbit:
                total += 1
    return total


@lru_cache(maxsize=64)
def _automorphisms(h: Graph) -> int:
    edges = set(h.edge_tuples())
    count = 0
    for perm in permutations(range(h.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges):
            count += 1
    return count


def subgraph_count_by_embeddings(h: Graph, g: Graph) -> int:
    """Injective homomorphisms H -> G divided by |Aut(H)|; an independent route to s(H, G)."""
    _check_pattern(h)
    if h.n > g.n:
        return 0
    k = h.n
    back = [[u for u in h.neighbors(v) if u < v] for v in range(k)]
    image = [0] * k
    embeddings = 0

    def extend(v: int, used: int) -> None:
        nonlocal embeddings
        if v == k:
            embeddings += 1
            return
        for w in range(g.n):
            if (used >> w) & 1:
                continue
            if all(g.has_edge(w, image[u]) for u in back[v]):
                image[v] = w
                extend(v + 1, used | (1 << w))

    extend(0, 0)
    aut = _automorphisms(h)
    if embeddings % aut:
        raise AssertionError("embedding count not divisible by |Aut(H)|")
    return embeddings // aut


def verify_kelly(h: Graph, g: Graph) -> KellyReport:
    """Evaluate (n - k) s(H, G) against the sum of s(H, G - v) over all vertices."""
    _check_pattern(h)
    if h.n > g.n:
        raise GraphError(f"pattern has {h.n} vertices but host graph only {g.n}")
    if g.has_isolated_vertex():
        raise GraphError("host graph has an isolated vertex; identity precondition not met")
    per_vertex = tuple(subgraph_count(h, g.delete_vertex(v)) for v in range(g.n))
    return KellyReport((g.n - h.n) * subgraph_count(h, g), sum(per_vertex), per_vertex)

