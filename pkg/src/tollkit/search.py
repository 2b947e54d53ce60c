"""Exact toll number, t-hull number, geodetic number and hull number.

All four invariants use the same search: sets of increasing size, each size
scanned in lexicographic order, stopping at the first set that works.  Vertices
that every solution must contain (toll-extreme vertices for the toll
invariants, simplicial vertices for the geodesic ones) are fixed up front.
Adding a fixed set to lexicographically ordered combinations keeps the merged
sets in lexicographic order, so the witness is always the lexicographically
smallest one of minimum size.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .graph import DisconnectedGraphError, Graph, GraphError, VertexSet, bfs_layers, iter_bits
from .products import ProductGraph
from .toll import closure_bits, extreme_bits_from_table, hull_bits, interval_table

__all__ = [
    "InvariantResult",
    "SearchLimitError",
    "toll_number",
    "t_hull_number",
    "geodetic_number",
    "hull_number",
    "is_toll_set",
    "is_t_hull_set",
    "has_dominated_neighbor",
    "tn2_pair_qualifies",
    "tn2_witness_predicate",
    "geodesic_table",
    "MAX_UNBOUNDED_N",
    "MAX_BOUNDED_N",
    "MAX_BOUNDED_SIZE",
]

MAX_UNBOUNDED_N = 16
MAX_BOUNDED_N = 30
MAX_BOUNDED_SIZE = 4


class SearchLimitError(GraphError):
    """The requested search exceeds the supported size or found no witness within it."""


@dataclass(frozen=True)
class InvariantResult:
    value: int
    witness: VertexSet
    explored: int


def _check_input(g: Graph, max_size: int | None) -> None:
    if g.n < 2:
        raise GraphError("invariants are defined for graphs with at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraphError(f"{g!r} is not connected")
    if g.n > MAX_BOUNDED_N:
        raise SearchLimitError(f"exact search supports n <= {MAX_BOUNDED_N}, got n={g.n}")
    if g.n > MAX_UNBOUNDED_N and (max_size is None or max_size > MAX_BOUNDED_SIZE):
        raise SearchLimitError(
            f"graphs with n > {MAX_UNBOUNDED_N} need max_size <= {MAX_BOUNDED_SIZE}"
        )


def _minimum_set(
    g: Graph,
    forced: int,
    lower: int,
    accepts: Callable[[int], bool],
    max_size: int | None,
    what: str,
) -> InvariantResult:
    forced_list = list(iter_bits(forced))
    rest = [v for v in range(g.n) if not forced >> v & 1]
    top = g.n if max_size is None else min(max_size, g.n)
    explored = 0
    for size in range(max(lower, len(forced_list)), top + 1):
        for extra in combinations(rest, size - len(forced_list)):
            bits = forced
            for v in extra:
                bits |= 1 << v
            explored += 1
            if accepts(bits):
                return InvariantResult(size, VertexSet(g.n, bits), explored)
    raise SearchLimitError(f"no {what} of size <= {top} in {g!r}")


def is_toll_set(g: Graph, s: VertexSet, table: Sequence[Sequence[int]] | None = None) -> bool:
    table = table if table is not None else interval_table(g)
    return closure_bits(table, s.bits) == g.all_bits


def is_t_hull_set(g: Graph, s: VertexSet, table: Sequence[Sequence[int]] | None = None) -> bool:
    table = table if table is not None else interval_table(g)
    return hull_bits(table, s.bits)[-1] == g.all_bits


def toll_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    """Smallest set whose toll closure is the whole vertex set."""
    _check_input(g, max_size)
    table = interval_table(g)
    full = g.all_bits
    forced = extreme_bits_from_table(g, table)
    # a singleton closes to itself, so two vertices is the floor once n >= 2
    return _minimum_set(
        g, forced, 2,
        lambda bits: closure_bits(table, bits) == full, max_size, "toll set",
    )


def t_hull_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    """Smallest set whose t-convex hull is the whole vertex set."""
    _check_input(g, max_size)
    table = interval_table(g)
    full = g.all_bits
    forced = extreme_bits_from_table(g, table)
    return _minimum_set(
        g, forced, 2,
        lambda bits: hull_bits(table, bits)[-1] == full, max_size, "t-hull set",
    )


def geodesic_table(g: Graph) -> list[list[int]]:
    dist = [bfs_layers(g, s) for s in range(g.n)]
    table = [[0] * g.n for _ in range(g.n)]
    for a in range(g.n):
        for b in range(a, g.n):
            bits = 0
            for x in range(g.n):
                if dist[a][x] + dist[x][b] == dist[a][b]:
                    bits |= 1 << x
            table[a][b] = table[b][a] = bits
    return table


def _simplicial_bits(g: Graph) -> int:
    bits = 0
    for v in range(g.n):
        if g.is_simplicial(v):
            bits |= 1 << v
    return bits


def geodetic_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    _check_input(g, max_size)
    table = geodesic_table(g)
    full = g.all_bits
    return _minimum_set(
        g, _simplicial_bits(g), 2,
        lambda bits: closure_bits(table, bits) == full, max_size, "geodetic set",
    )


def hull_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    _check_input(g, max_size)
    table = geodesic_table(g)
    full = g.all_bits
    return _minimum_set(
        g, _simplicial_bits(g), 2,
        lambda bits: hull_bits(table, bits)[-1] == full, max_size, "hull set",
    )


# -- two-vertex toll sets of strong products -------------------------------------


def has_dominated_neighbor(g: Graph, v: int) -> bool:
    """True if some neighbor ``w`` of ``v`` has ``N[w]`` inside ``N[v]``."""
    closed_v = g.closed_bits(v)
    return any(g.closed_bits(w) & ~closed_v == 0 for w in iter_bits(g.adj[v]))


def tn2_pair_qualifies(g: Graph, a: int, b: int) -> bool:
    return (
        a != b
        and not g.adj[a] >> b & 1
        and not has_dominated_neighbor(g, a)
        and not has_dominated_neighbor(g, b)
    )


def tn2_witness_predicate(p: ProductGraph | Graph) -> tuple[int, int] | None:
    """First non-adjacent pair with no dominated neighbor at either end.

    For strong products of connected non-complete graphs, such a pair exists
    exactly when the toll number is 2.
    """
    g = p.graph if isinstance(p, ProductGraph) else p
    free = [v for v in range(g.n) if not has_dominated_neighbor(g, v)]
    for i, a in enumerate(free):
        for b in free[i + 1:]:
            if not g.adj[a] >> b & 1:
                return a, b
    return None
