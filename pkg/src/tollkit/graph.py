"""Immutable simple graphs over dense integer vertices, stored as bitset rows.

Every adjacency row is a Python ``int`` whose bit ``i`` is set when vertex ``i``
is a neighbor.  The same representation backs :class:`VertexSet`, so the set
algebra used by intervals and closures is plain integer arithmetic.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

__all__ = [
    "GraphError",
    "DisconnectedGraphError",
    "VertexSet",
    "Graph",
    "DistanceMatrix",
    "UNREACHABLE",
    "new_graph",
    "family",
    "distances",
    "diameter",
    "eccentricity",
    "eccentric_vertices",
    "diametral_pair",
    "iter_bits",
]

UNREACHABLE = math.inf
FAMILIES = ("path", "cycle", "complete", "paw_pendant")


class GraphError(ValueError):
    """Invalid graph construction or an out-of-range vertex."""


class DisconnectedGraphError(GraphError):
    """An operation that assumes connectivity received a disconnected graph."""


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of ``range(n)`` backed by an integer bitmask."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"bitmask {self.bits:#x} does not fit in {self.n} vertices")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _other_bits(self, other: VertexSet) -> int:
        if not isinstance(other, VertexSet):
            return NotImplemented
        if other.n != self.n:
            raise GraphError(f"cannot combine vertex sets of widths {self.n} and {other.n}")
        return other.bits

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.bits | self._other_bits(other))

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.bits & self._other_bits(other))

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.bits & ~self._other_bits(other))

    def __xor__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.bits ^ self._other_bits(other))

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ~self.bits & ((1 << self.n) - 1))

    def issubset(self, other: VertexSet) -> bool:
        return self.bits & ~self._other_bits(other) == 0

    def __le__(self, other: VertexSet) -> bool:
        return self.issubset(other)

    def __lt__(self, other: VertexSet) -> bool:
        return self.issubset(other) and self.bits != other.bits

    def is_full(self) -> bool:
        return self.bits == (1 << self.n) - 1

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; build them with :func:`new_graph` or
    :func:`family`.  Equality compares structure only, never the label.
    """

    __slots__ = ("_n", "_adj", "_label")

    def __init__(self, n: int, adj: Sequence[int], label: str = "") -> None:
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        mask = (1 << n) - 1
        for v, row in enumerate(adj):
            if row < 0 or row & ~mask:
                raise GraphError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop edge at vertex {v}")
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_label", label)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def label(self) -> str:
        return self._label

    @property
    def all_bits(self) -> int:
        return (1 << self._n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        tag = f" {self._label!r}" if self._label else ""
        return f"<Graph{tag} n={self._n} m={self.edge_count()}>"

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise GraphError(f"vertex {v!r} out of range for n={self._n}")
        return v

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self._n, vertices)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self._n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[self.check_vertex(u)] >> self.check_vertex(v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[self.check_vertex(v)].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self._n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self._n, self._adj[self.check_vertex(v)])

    def closed_neighborhood(self, v: int) -> VertexSet:
        return VertexSet(self._n, self._adj[self.check_vertex(v)] | 1 << v)

    def closed_bits(self, v: int) -> int:
        return self._adj[v] | 1 << v

    def is_connected(self) -> bool:
        return reach_bits(self, 0, self.all_bits) == self.all_bits

    def is_complete(self) -> bool:
        return all(self.closed_bits(v) == self.all_bits for v in range(self._n))

    def is_simplicial(self, v: int) -> bool:
        """True when the closed neighborhood of ``v`` induces a complete graph."""
        nbhd = self.closed_bits(self.check_vertex(v))
        return all(self.closed_bits(w) & nbhd == nbhd for w in iter_bits(self._adj[v]))

    def induced_edge_count(self, subset: VertexSet | int) -> int:
        bits = subset.bits if isinstance(subset, VertexSet) else subset
        return sum((self._adj[v] & bits).bit_count() for v in iter_bits(bits)) // 2

    def relabel(self, label: str) -> Graph:
        return Graph(self._n, self._adj, label)


def reach_bits(g: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside the vertex mask ``allowed``."""
    seen = frontier = 1 << start
    adj = g.adj
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components_bits(g: Graph, allowed: int) -> list[int]:
    """Connected components of the subgraph induced by ``allowed``."""
    comps = []
    rest = allowed
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = reach_bits(g, start, allowed)
        comps.append(comp)
        rest &= ~comp
    return comps


def new_graph(n: int, edges: Iterable[tuple[int, int]], label: str = "") -> Graph:
    """Build a graph from an edge list; duplicate and reversed pairs collapse."""
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, label)


def family(kind: str, n: int) -> Graph:
    """Standard named graphs: ``path``, ``cycle``, ``complete``, ``paw_pendant``.

    ``paw_pendant`` is the triangle ``0,1,2`` with a pendant vertex ``3``
    attached to ``2``; it only exists for ``n == 4``.
    """
    if kind == "path":
        if n < 2:
            raise GraphError("path needs n >= 2")
        return new_graph(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")
    if kind == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return new_graph(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")
    if kind == "complete":
        if n < 2:
            raise GraphError("complete graph needs n >= 2")
        return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")
    if kind == "paw_pendant":
        if n != 4:
            raise GraphError("paw_pendant is defined only for n = 4")
        return new_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)], "paw_pendant")
    raise GraphError(f"unknown graph family {kind!r}; expected one of {', '.join(FAMILIES)}")


class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold :data:`UNREACHABLE`."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[float]]) -> None:
        self._rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, uv: tuple[int, int]) -> float:
        u, v = uv
        return self._rows[u][v]

    def row(self, u: int) -> tuple[float, ...]:
        return self._rows[u]

    @property
    def n(self) -> int:
        return len(self._rows)

    def rows(self) -> tuple[tuple[float, ...], ...]:
        return self._rows


def bfs_layers(g: Graph, source: int) -> list[float]:
    dist: list[float] = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    depth = 0
    while frontier:
        depth += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = depth
    return dist


def distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix([bfs_layers(g, s) for s in range(g.n)])


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(f"{g!r} is not connected")


def eccentricity(g: Graph, v: int) -> int:
    g.check_vertex(v)
    _require_connected(g)
    return int(max(bfs_layers(g, v)))


def eccentric_vertices(g: Graph, v: int) -> VertexSet:
    """Vertices at maximum distance from ``v``."""
    g.check_vertex(v)
    _require_connected(g)
    dist = bfs_layers(g, v)
    ecc = max(dist)
    return g.vertex_set(x for x, d in enumerate(dist) if d == ecc)


def diameter(g: Graph) -> int:
    _require_connected(g)
    return int(max(max(bfs_layers(g, s)) for s in range(g.n)))


def diametral_pair(g: Graph) -> tuple[int, int]:
    """Lexicographically smallest ``(a, b)`` with ``a < b`` realising the diameter."""
    _require_connected(g)
    if g.n < 2:
        raise GraphError("diametral pair needs at least two vertices")
    dist = distances(g)
    diam = max(max(r) for r in dist.rows())
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if dist[a, b] == diam:
                return a, b
    raise AssertionError("unreachable")
