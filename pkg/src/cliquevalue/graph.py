"""Immutable simple graphs stored as per-vertex bit rows, plus I/O and generators.

Vertex ids are 0-based. Adjacency row ``rows[v]`` is an int whose bit ``u`` is
set iff ``{u, v}`` is an edge.

The canonical pair order used everywhere (graph6 payload, labeled-graph
bitmasks, gnp sampling) is column-major over the upper triangle::

    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...

so pair ``(i, j)`` with ``i < j`` has index ``j*(j-1)//2 + i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "GRAPH6_MAX_N",
    "EXHAUSTIVE_MAX_N",
    "pair_index",
    "from_edge_list",
    "from_graph6",
    "to_graph6",
    "read_edge_list",
    "write_edge_list",
    "neighborhood",
    "generate",
    "parse_generator_spec",
    "enumerate_all_labeled_graphs",
]

GRAPH6_MAX_N = 62
EXHAUSTIVE_MAX_N = 7


class GraphError(ValueError):
    """Raised for malformed graph input or invalid generator parameters."""


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int

    def __post_init__(self) -> None:
        if not (0 <= self.u < self.v):
            raise GraphError(f"edge endpoints must satisfy 0 <= u < v, got ({self.u}, {self.v})")

    def as_tuple(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    rows: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.rows)
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise GraphError(f"row {v} references a vertex >= n={n}")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= low
            total += row.bit_count()
        object.__setattr__(self, "m", total // 2)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls((0,) * n)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Build the labeled graph whose edge set is the bitmask ``mask`` in pair order."""
        rows = [0] * n
        idx = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> idx) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
        if mask >> idx:
            raise GraphError(f"mask has bits beyond the {idx} pairs of an {n}-vertex graph")
        return cls(tuple(rows))

    def edge_mask(self) -> int:
        mask = 0
        for idx, (i, j) in enumerate(_pairs(self.n)):
            if (self.rows[i] >> j) & 1:
                mask |= 1 << idx
        return mask

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[Edge]:
        return [Edge(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_tuples(self) -> list[tuple[int, int]]:
        return [e.as_tuple() for e in self.edges()]

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.rows)

    def delete_vertex(self, v: int) -> "Graph":
        """Return G - v, relabelling vertices above ``v`` down by one."""
        _check_vertex(self, v)
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.rows):
            if u == v:
                continue
            rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph(tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.edge_tuples()})"


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise GraphError(f"vertex id {v} out of range for n={g.n}")


def from_edge_list(n: int, edges: Iterable[Sequence[int]], *, one_based: bool = False) -> Graph:
    """Build a graph from vertex pairs.

    Loops, out-of-range ids and repeated pairs (in either orientation) are
    rejected; nothing is silently merged.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    shift = 1 if one_based else 0
    rows = [0] * n
    for pair in edges:
        if len(pair) != 2:
            raise GraphError(f"edge {tuple(pair)!r} is not a vertex pair")
        u, v = int(pair[0]) - shift, int(pair[1]) - shift
        shown = (pair[0], pair[1])
        if u == v:
            raise GraphError(f"loop {shown} not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {shown} references a vertex outside 0..{n - 1}")
        if (rows[u] >> v) & 1:
            raise GraphError(f"duplicate edge {shown}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(tuple(rows))


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Open neighbourhood N(v); its size is deg(v)."""
    _check_vertex(g, v)
    return frozenset(_bits(g.rows[v]))


# --- graph6 -----------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    npairs = n * (n - 1) // 2
    mask = g.edge_mask()
    nchunks = (npairs + 5) // 6
    out = [chr(n + 63)]
    for c in range(nchunks):
        value = 0
        for b in range(6):
            idx = 6 * c + b
            bit = (mask >> idx) & 1 if idx < npairs else 0
            value = (value << 1) | bit
        out.append(chr(value + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"non-printable or out-of-range graph6 byte {ch!r} at position {pos}")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphError(f"bad graph6 header byte {s[0]!r} (long-form sizes unsupported)")
    npairs = n * (n - 1) // 2
    nchunks = (npairs + 5) // 6
    payload = s[1:]
    if len(payload) != nchunks:
        raise GraphError(f"graph6 payload length {len(payload)} != expected {nchunks} for n={n}")
    mask = 0
    for c, ch in enumerate(payload):
        value = ord(ch) - 63
        for b in range(6):
            idx = 6 * c + b
            if (value >> (5 - b)) & 1:
                if idx >= npairs:
                    raise GraphError("graph6 padding bits must be zero")
                mask |= 1 << idx
    return Graph.from_mask(n, mask)


# --- edge-list text -----------------------------------------------------------

def read_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v`` (0-based)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphError(f"edge line must be 'u v', got {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{e.u} {e.v}" for e in g.edges()]
    return "\n".join(lines) + "\n"


# --- generators -----------------------------------------------------------------

def _complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(tuple(full & ~(1 << v) for v in range(n)))


def _multipartite(sizes: Sequence[int]) -> Graph:
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        part = ((1 << size) - 1) << start
        rows.extend([full & ~part] * size)
        start += size
    return Graph(tuple(rows))


def _turan(n: int, r: int) -> Graph:
    if not 1 <= r <= n:
        raise GraphError(f"turan requires 1 <= r <= n, got n={n}, r={r}")
    q, rem = divmod(n, r)
    return _multipartite([q + 1] * rem + [q] * (r - rem))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle requires n >= 3, got {n}")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def _path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path requires n >= 1, got {n}")
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def _book(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"book requires k >= 1 pages, got {k}")
    edges = [(0, 1)]
    for page in range(2, k + 2):
        edges += [(0, page), (1, page)]
    return from_edge_list(k + 2, edges)


def _gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"gnp requires 0 <= p <= 1, got {p}")
    rng = random.Random(seed)
    mask = 0
    for idx in range(n * (n - 1) // 2):
        if rng.random() < p:
            mask |= 1 << idx
    return Graph.from_mask(n, mask)


def generate(family: str, *params, seed: int | None = None) -> Graph:
    """Build a member of a named family.

    ``complete(n)``, ``empty(n)``, ``cycle(n)``, ``path(n)``,
    ``complete_bipartite(a, b)``, ``turan(n, r)``, ``book(k)``,
    ``gnp(n, p)`` (needs ``seed``).
    """
    try:
        if family == "complete":
            (n,) = params
            _nonneg(n)
            return _complete(int(n))
        if family == "empty":
            (n,) = params
            _nonneg(n)
            return Graph.empty(int(n))
        if family == "cycle":
            (n,) = params
            return _cycle(int(n))
        if family == "path":
            (n,) = params
            return _path(int(n))
        if family == "complete_bipartite":
            a, b = params
            _nonneg(a)
            _nonneg(b)
            return _multipartite([int(a), int(b)])
        if family == "turan":
            n, r = params
            return _turan(int(n), int(r))
        if family == "book":
            (k,) = params
            return _book(int(k))
        if family == "gnp":
            n, p = params
            _nonneg(n)
            if seed is None:
                raise GraphError("gnp requires a seed")
            return _gnp(int(n), float(p), seed)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad parameters {params!r} for family {family!r}") from None
    raise GraphError(f"unknown graph family {family!r}")


def _nonneg(x) -> None:
    if int(x) < 0:
        raise GraphError(f"size parameter must be nonnegative, got {x}")


def parse_generator_spec(spec: str, seed: int | None = None) -> Graph:
    """Parse ``family:a,b,...`` (e.g. ``turan:6,2``, ``gnp:10,0.3``)."""
    family, _, rest = spec.partition(":")
    params = [p for p in rest.split(",") if p.strip()] if rest else []
    conv = []
    for p in params:
        p = p.strip()
        try:
            conv.append(int(p))
        except ValueError:
            try:
                conv.append(float(p))
            except ValueError:
                raise GraphError(f"bad generator parameter {p!r} in {spec!r}") from None
    return generate(family.strip(), *conv, seed=seed)


def enumerate_all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled graph on ``n`` vertices by increasing edge bitmask."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    if n > EXHAUSTIVE_MAX_N:
        raise GraphError(f"exhaustive sweep limited to n <= {EXHAUSTIVE_MAX_N}, got {n}")
    return _labeled_stream(n)


def _labeled_stream(n: int) -> Iterator[Graph]:
    npairs = n * (n - 1) // 2
    pairs = list(_pairs(n))
    for mask in range(1 << npairs):
        rows = [0] * n
        x = mask
        while x:
            low = x & -x
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            x ^= low
        yield Graph(tuple(rows))
