"""Strong, Cartesian and lexicographic products with pair/index bookkeeping.

Product vertex ``(g, h)`` is stored at index ``g * n_right + h``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, VertexSet, family, iter_bits

__all__ = [
    "KINDS",
    "ProductGraph",
    "product",
    "adjacent_by_rule",
    "strong_product",
    "cartesian_product",
    "lexicographic_product",
    "strong_equals_lex_on_complete",
]

KINDS = ("strong", "cartesian", "lexicographic")
_KIND_ALIASES = {"lex": "lexicographic"}


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    left: Graph
    right: Graph
    kind: str

    @property
    def n_left(self) -> int:
        return self.left.n

    @property
    def n_right(self) -> int:
        return self.right.n

    def encode(self, g: int, h: int) -> int:
        if not (0 <= g < self.n_left and 0 <= h < self.n_right):
            raise GraphError(f"pair ({g},{h}) out of range for {self.n_left}x{self.n_right} product")
        return g * self.n_right + h

    def decode(self, v: int) -> tuple[int, int]:
        self.graph.check_vertex(v)
        return divmod(v, self.n_right)

    def g_layer(self, h: int) -> VertexSet:
        """The copy of the left factor with second coordinate fixed to ``h``."""
        self.right.check_vertex(h)
        return self.graph.vertex_set(self.encode(g, h) for g in range(self.n_left))

    def h_layer(self, g: int) -> VertexSet:
        """The copy of the right factor with first coordinate fixed to ``g``."""
        self.left.check_vertex(g)
        return self.graph.vertex_set(self.encode(g, h) for h in range(self.n_right))

    def label(self, v: int) -> str:
        return "({},{})".format(*self.decode(v))

    def labels(self) -> list[str]:
        return [self.label(v) for v in range(self.graph.n)]

    def format_set(self, s: VertexSet) -> str:
        return "{" + ",".join(self.label(v) for v in s) + "}"


def adjacent_by_rule(kind: str, left: Graph, right: Graph, g1: int, h1: int, g2: int, h2: int) -> bool:
    """The textbook adjacency rule, evaluated pair by pair (used as a reference)."""
    if (g1, h1) == (g2, h2):
        return False
    eg = bool(left.adj[g1] >> g2 & 1)
    eh = bool(right.adj[h1] >> h2 & 1)
    if kind == "cartesian":
        return (eg and h1 == h2) or (g1 == g2 and eh)
    if kind == "strong":
        return (eg and h1 == h2) or (g1 == g2 and eh) or (eg and eh)
    if kind == "lexicographic":
        return eg or (g1 == g2 and eh)
    raise GraphError(f"unknown product kind {kind!r}")


def _row(kind: str, left: Graph, right: Graph, g1: int, h1: int) -> int:
    nr = right.n
    block = (1 << nr) - 1
    row = 0
    if kind == "strong":
        hb = right.closed_bits(h1)
        for g2 in iter_bits(left.closed_bits(g1)):
            row |= hb << (g2 * nr)
        return row & ~(1 << (g1 * nr + h1))
    if kind == "cartesian":
        row = right.adj[h1] << (g1 * nr)
        for g2 in iter_bits(left.adj[g1]):
            row |= 1 << (g2 * nr + h1)
        return row
    row = right.adj[h1] << (g1 * nr)
    for g2 in iter_bits(left.adj[g1]):
        row |= block << (g2 * nr)
    return row


def product(left: Graph, right: Graph, kind: str = "strong") -> ProductGraph:
    kind = _KIND_ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise GraphError(f"unknown product kind {kind!r}")
    adj = [_row(kind, left, right, g, h) for g in range(left.n) for h in range(right.n)]
    symbol = {"strong": "x", "cartesian": "[]", "lexicographic": "o"}[kind]
    tag = f"({left.label or '?'}){symbol}({right.label or '?'})"
    return ProductGraph(Graph(left.n * right.n, adj, tag), left, right, kind)


def strong_product(left: Graph, right: Graph) -> ProductGraph:
    return product(left, right, "strong")


def cartesian_product(left: Graph, right: Graph) -> ProductGraph:
    return product(left, right, "cartesian")


def lexicographic_product(left: Graph, right: Graph) -> ProductGraph:
    return product(left, right, "lexicographic")


def strong_equals_lex_on_complete(g: Graph, n: int) -> bool:
    """Check that G x K_n and G o K_n have literally the same edge set."""
    if n < 2:
        raise GraphError("complete factor needs n >= 2")
    k = family("complete", n)
    return strong_product(g, k).graph.adj == lexicographic_product(g, k).graph.adj
