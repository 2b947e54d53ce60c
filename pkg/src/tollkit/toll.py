"""Toll convexity: tolled walks, toll intervals, closures, hulls, extreme vertices.

A tolled ``u,v``-walk (``u``, ``v`` distinct and non-adjacent) is a walk
``u, w1, ..., wk, v`` with ``k >= 1`` in which ``u`` is adjacent to ``w1`` and
to no other ``wi``, and ``v`` is adjacent to ``wk`` and to no other ``wi``.
For an edge ``uv`` the only tolled walk is ``u, v``; for ``u == v`` it is the
single vertex ``u``.

Two independent routes compute the toll interval ``T(u, v)``:

* :func:`toll_interval` decomposes the graph around the two neighborhoods and
  works on connected components;
* :func:`toll_interval_oracle` runs a forward/backward reachability search on
  the walk automaton that reads the definition literally.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    VertexSet,
    bfs_layers,
    components_bits,
    iter_bits,
)

__all__ = [
    "Walk",
    "TollCertificate",
    "HullTrace",
    "is_tolled_walk",
    "toll_interval",
    "toll_interval_oracle",
    "toll_certificate",
    "interval_table",
    "toll_closure",
    "closure_bits",
    "is_toll_convex",
    "toll_hull",
    "hull_bits",
    "is_extreme_vertex",
    "extreme_vertices",
    "geodesic_interval",
    "monophonic_interval",
    "MONOPHONIC_MAX_N",
]

MONOPHONIC_MAX_N = 10


@dataclass(frozen=True)
class Walk:
    """A vertex sequence in ``graph`` whose consecutive vertices are adjacent."""

    graph: Graph = field(repr=False)
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise GraphError("a walk needs at least one vertex")
        for v in self.vertices:
            self.graph.check_vertex(v)
        for a, b in zip(self.vertices, self.vertices[1:]):
            if not self.graph.adj[a] >> b & 1:
                raise GraphError(f"walk step {a}->{b} is not an edge")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class TollCertificate:
    member: int
    walk: Walk


@dataclass(frozen=True)
class HullTrace:
    """Successive closures ``S, T[S], T[T[S]], ...`` up to the fixpoint."""

    stages: tuple[VertexSet, ...]
    terminal: bool = True

    @property
    def hull(self) -> VertexSet:
        return self.stages[-1]

    @property
    def steps(self) -> int:
        return len(self.stages) - 1


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(f"toll intervals need a connected graph; {g!r} is not")


def is_tolled_walk(g: Graph, w: Walk | Sequence[int], u: int, v: int) -> bool:
    """Decide whether ``w`` is a tolled ``u,v``-walk in ``g``."""
    g.check_vertex(u)
    g.check_vertex(v)
    if isinstance(w, Walk):
        if w.graph is not g and w.graph != g:
            raise GraphError("walk is bound to a different graph")
        seq = w.vertices
    else:
        seq = tuple(w)
        for x in seq:
            g.check_vertex(x)
    if not seq or seq[0] != u or seq[-1] != v:
        raise GraphError(f"walk does not run from {u} to {v}")
    adj = g.adj
    if any(not adj[a] >> b & 1 for a, b in zip(seq, seq[1:])):
        return False
    if u == v:
        return len(seq) == 1
    if adj[u] >> v & 1:
        return len(seq) == 2
    inner = seq[1:-1]
    if not inner:
        return False
    last = len(inner) - 1
    for i, x in enumerate(inner):
        if bool(adj[u] >> x & 1) != (i == 0):
            return False
        if bool(adj[v] >> x & 1) != (i == last):
            return False
    return True


def _interval_bits(g: Graph, u: int, v: int) -> int:
    adj = g.adj
    if u == v:
        return 1 << u
    ends = 1 << u | 1 << v
    if adj[u] >> v & 1:
        return ends
    a, b = adj[u], adj[v]
    only_a, only_b = a & ~b, b & ~a
    result = ends | (a & b)
    # k = 2: an edge between the two private neighborhoods
    for x in iter_bits(only_a):
        hit = adj[x] & only_b
        if hit:
            result |= 1 << x | hit
    # k >= 3: interior vertices avoid both closed neighborhoods entirely
    free = g.all_bits & ~(a | b | ends)
    for comp in components_bits(g, free):
        touch = 0
        for x in iter_bits(comp):
            touch |= adj[x]
        if touch & only_a and touch & only_b:
            result |= comp | (touch & (only_a | only_b))
    return result


def toll_interval(g: Graph, u: int, v: int) -> VertexSet:
    """All vertices lying on some tolled ``u,v``-walk.

    Every tolled walk between non-adjacent ``u`` and ``v`` either is
    ``u, w, v`` with ``w`` a common neighbor, or leaves ``N(u)`` through a
    private neighbor of ``u``, wanders inside ``V - (N[u] | N[v])`` and enters
    ``N(v)`` through a private neighbor of ``v``.  Walks may repeat vertices, so
    a component of that free region contributes all of its vertices as soon as
    it touches both private neighborhoods.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    _require_connected(g)
    return VertexSet(g.n, _interval_bits(g, u, v))


# -- reference automaton ---------------------------------------------------

_START, _ACCEPT = -1, -2


def _automaton(g: Graph, u: int, v: int):
    """Successor and predecessor maps of the tolled-walk automaton.

    States are ``_START`` (standing on ``u``), one state per vertex for the
    walk interior, and ``_ACCEPT`` (arrived at ``v``).  Each transition checks
    the definition for the vertex being entered or left:

    * the first interior vertex must be a neighbor of ``u``;
    * later interior vertices must not be neighbors of ``u``;
    * an interior vertex may step to ``v`` only if it is a neighbor of ``v``,
      and otherwise must not be a neighbor of ``v`` at all.
    """
    adj = g.adj
    succ: dict[int, list[int]] = {_START: [], _ACCEPT: []}
    pred: dict[int, list[int]] = {_START: [], _ACCEPT: []}
    for x in range(g.n):
        succ[x] = []
        pred[x] = []

    def link(s: int, t: int) -> None:
        succ[s].append(t)
        pred[t].append(s)

    for x in range(g.n):
        if adj[u] >> x & 1 and x != v:
            link(_START, x)
    for c in range(g.n):
        if adj[v] >> c & 1:
            link(c, _ACCEPT)
            continue
        for y in range(g.n):
            if y == v or not adj[c] >> y & 1:
                continue
            if adj[u] >> y & 1:
                continue
            link(c, y)
    return succ, pred


def _search(edges: dict[int, list[int]], root: int) -> dict[int, int | None]:
    parent: dict[int, int | None] = {root: None}
    queue = deque([root])
    while queue:
        s = queue.popleft()
        for t in edges[s]:
            if t not in parent:
                parent[t] = s
                queue.append(t)
    return parent


def toll_interval_oracle(g: Graph, u: int, v: int) -> VertexSet:
    """Reference toll interval from reachability in the walk automaton.

    A vertex is a member iff its interior state is reachable from the start
    and can still reach acceptance.  The automaton has ``n + 2`` states, so no
    bound on walk length is needed even though walks may revisit vertices.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    _require_connected(g)
    if u == v:
        return g.vertex_set([u])
    if g.adj[u] >> v & 1:
        return g.vertex_set([u, v])
    succ, pred = _automaton(g, u, v)
    fwd = _search(succ, _START)
    bwd = _search(pred, _ACCEPT)
    if _ACCEPT not in fwd:
        return g.vertex_set([u, v])
    inner = [x for x in range(g.n) if x in fwd and x in bwd]
    return g.vertex_set([u, v, *inner])


def toll_certificate(g: Graph, u: int, v: int, x: int) -> TollCertificate | None:
    """A tolled ``u,v``-walk through ``x``, or ``None`` when ``x`` is not a member."""
    for w in (u, v, x):
        g.check_vertex(w)
    _require_connected(g)
    if u == v:
        return TollCertificate(x, Walk(g, (u,))) if x == u else None
    if g.adj[u] >> v & 1:
        return TollCertificate(x, Walk(g, (u, v))) if x in (u, v) else None
    succ, pred = _automaton(g, u, v)
    fwd = _search(succ, _START)
    bwd = _search(pred, _ACCEPT)
    if x in (u, v):
        # any accepted run will do; thread it through some interior vertex
        pivots = [y for y in range(g.n) if y in fwd and y in bwd]
        if not pivots:
            return None
        x_state = pivots[0]
    elif x in fwd and x in bwd:
        x_state = x
    else:
        return None
    head = []
    s: int | None = x_state
    while s is not None and s != _START:
        head.append(s)
        s = fwd[s]
    head.reverse()
    tail = []
    s = bwd[x_state]
    while s is not None and s != _ACCEPT:
        tail.append(s)
        s = bwd[s]
    return TollCertificate(x, Walk(g, (u, *head, *tail, v)))


# -- closures, hulls and convexity -------------------------------------------


def interval_table(g: Graph) -> list[list[int]]:
    """Toll interval bitmasks for every ordered pair (symmetric)."""
    _require_connected(g)
    n = g.n
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        table[a][a] = 1 << a
        for b in range(a + 1, n):
            table[a][b] = table[b][a] = _interval_bits(g, a, b)
    return table


def closure_bits(table: Sequence[Sequence[int]], bits: int) -> int:
    members = list(iter_bits(bits))
    out = bits
    for i, a in enumerate(members):
        row = table[a]
        for b in members[i + 1:]:
            out |= row[b]
    return out


def hull_bits(table: Sequence[Sequence[int]], bits: int) -> list[int]:
    stages = [bits]
    while True:
        nxt = closure_bits(table, stages[-1])
        if nxt == stages[-1]:
            return stages
        stages.append(nxt)


def _set_bits(g: Graph, s: VertexSet | Iterable[int]) -> int:
    if isinstance(s, VertexSet):
        if s.n != g.n:
            raise GraphError("vertex set width does not match the graph")
        return s.bits
    return g.vertex_set(s).bits


def toll_closure(g: Graph, s: VertexSet | Iterable[int]) -> VertexSet:
    """Union of the toll intervals over all pairs of ``s``."""
    bits = _set_bits(g, s)
    _require_connected(g)
    out = bits
    members = list(iter_bits(bits))
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            out |= _interval_bits(g, a, b)
    return VertexSet(g.n, out)


def is_toll_convex(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    bits = _set_bits(g, s)
    return toll_closure(g, VertexSet(g.n, bits)).bits == bits


def toll_hull(g: Graph, s: VertexSet | Iterable[int]) -> HullTrace:
    bits = _set_bits(g, s)
    _require_connected(g)
    stages = [bits]
    while True:
        nxt = toll_closure(g, VertexSet(g.n, stages[-1])).bits
        if nxt == stages[-1]:
            break
        stages.append(nxt)
    return HullTrace(tuple(VertexSet(g.n, b) for b in stages))


def is_extreme_vertex(g: Graph, v: int) -> bool:
    """``v`` is extreme iff it lies in no toll interval between two other vertices."""
    g.check_vertex(v)
    _require_connected(g)
    if not g.is_simplicial(v):
        return False
    others = [x for x in range(g.n) if x != v]
    return not any(_interval_bits(g, a, b) >> v & 1 for a, b in combinations(others, 2))


def extreme_vertices(g: Graph) -> VertexSet:
    _require_connected(g)
    return g.vertex_set(v for v in range(g.n) if is_extreme_vertex(g, v))


def extreme_bits_from_table(g: Graph, table: Sequence[Sequence[int]]) -> int:
    out = 0
    for v in range(g.n):
        if not g.is_simplicial(v):
            continue
        bit = 1 << v
        if not any(table[a][b] & bit for a, b in combinations(range(g.n), 2) if v not in (a, b)):
            out |= bit
    return out


# -- comparison intervals --------------------------------------------------------


def geodesic_interval(g: Graph, u: int, v: int) -> VertexSet:
    """Vertices on some shortest ``u,v``-path."""
    g.check_vertex(u)
    g.check_vertex(v)
    _require_connected(g)
    du, dv = bfs_layers(g, u), bfs_layers(g, v)
    d = du[v]
    return g.vertex_set(x for x in range(g.n) if du[x] + dv[x] == d)


def monophonic_interval(g: Graph, u: int, v: int, max_n: int = MONOPHONIC_MAX_N) -> VertexSet:
    """Vertices on some induced ``u,v``-path, found by exhaustive DFS."""
    g.check_vertex(u)
    g.check_vertex(v)
    if g.n > max_n:
        raise GraphError(f"monophonic interval is limited to n <= {max_n} (got n={g.n})")
    _require_connected(g)
    if u == v:
        return g.vertex_set([u])
    adj = g.adj
    found = 0

    # ``blocked`` holds every vertex on or adjacent to the path except its tip
    def extend(tip: int, on_path: int, blocked: int) -> None:
        nonlocal found
        for y in iter_bits(adj[tip] & ~blocked):
            if y == v:
                found |= on_path | 1 << v
            else:
                extend(y, on_path | 1 << y, blocked | adj[tip] | 1 << tip)

    extend(u, 1 << u, 1 << u)
    return VertexSet(g.n, found)
