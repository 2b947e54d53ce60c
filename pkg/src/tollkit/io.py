"""graph6 and edge-list formats, corpus files, DOT output, small-graph enumeration."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from pathlib import Path

from .graph import Graph, GraphError, VertexSet, new_graph

__all__ = [
    "Graph6Error",
    "Corpus",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
    "read_corpus",
    "write_corpus",
    "enumerate_connected",
    "canonical_code",
    "emit_dot",
    "MAX_ENUMERATION_N",
]

MAX_ENUMERATION_N = 7
_G6_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header")
        chunks, offset = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header")
        chunks, offset = data[1:4], 4
    n = 0
    for c in chunks:
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid size byte {c!r}")
        n = n << 6 | (c - 63)
    return n, offset


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is allowed)."""
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 must be printable ASCII") from exc
    n, offset = _decode_size(data)
    if n < 1:
        raise Graph6Error(f"graph6 size {n} is not a valid vertex count")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated graph6 body: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after graph6 body")
    value = 0
    for c in body:
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 byte {chr(c)!r}")
        value = value << 6 | (c - 63)
    pad = nbytes * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits in graph6 body")
    value >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, adj)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [(n >> s & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        body.append(chunk + 63)
    return bytes(head + body).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by whitespace-separated ``u v`` pairs."""
    tokens = text.split()
    if not tokens:
        raise GraphError("empty edge list")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from exc
    n, rest = values[0], values[1:]
    if len(rest) % 2:
        raise GraphError("edge list has an unpaired vertex")
    return new_graph(n, zip(rest[0::2], rest[1::2]))


def emit_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])


@dataclass(frozen=True)
class Corpus:
    graphs: tuple[Graph, ...]
    source: str

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def __getitem__(self, i: int) -> Graph:
        return self.graphs[i]

    def filter(self, keep, source: str | None = None) -> Corpus:
        return Corpus(tuple(g for g in self.graphs if keep(g)), source or self.source)

    def __add__(self, other: Corpus) -> Corpus:
        return Corpus(self.graphs + other.graphs, f"{self.source}+{other.source}")


def read_corpus(path: str | Path) -> Corpus:
    """One graph6 line per graph; blank lines and ``#`` comments are skipped."""
    graphs = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphError as exc:
            raise Graph6Error(f"{path}:{lineno}: {exc}") from exc
    return Corpus(tuple(graphs), str(path))


def write_corpus(corpus: Iterable[Graph], path: str | Path) -> None:
    Path(path).write_text("".join(emit_graph6(g) + "\n" for g in corpus))


# -- canonical forms and enumeration ---------------------------------------


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of the graph relabelled by ``order``."""
    n = len(order)
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> order[j] & 1)
    return code


def _refined_cells(adj: Sequence[int]) -> list[list[int]]:
    """Partition vertices by an isomorphism-invariant colour, cells in colour order."""
    n = len(adj)
    colour = [row.bit_count() for row in adj]
    for _ in range(n):
        sig = [
            (colour[v], tuple(sorted(colour[w] for w in range(n) if adj[v] >> w & 1)))
            for v in range(n)
        ]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        refined = [ranks[s] for s in sig]
        if len(set(refined)) == len(set(colour)):
            colour = refined
            break
        colour = refined
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_code(g: Graph) -> tuple[int, int]:
    """Canonical form: max adjacency code over colour-preserving relabellings.

    The colour refinement only uses isomorphism-invariant data, so any two
    isomorphic graphs produce the same cells and hence the same code.
    """
    cells = _refined_cells(g.adj)
    best = -1
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for cell in choice for v in cell]
        best = max(best, _code(g.adj, order))
    return g.n, best


def _from_code(n: int, code: int) -> Graph:
    edges = []
    k = n * (n - 1) // 2 - 1
    for i in range(n):
        for j in range(i + 1, n):
            if code >> k & 1:
                edges.append((i, j))
            k -= 1
    return new_graph(n, edges)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> dict[tuple[int, int], Graph]:
    """Every graph on ``n`` vertices up to isomorphism, keyed by canonical code."""
    if n == 1:
        g = new_graph(1, [])
        return {canonical_code(g): g}
    found: dict[tuple[int, int], Graph] = {}
    for small in _all_graphs(n - 1).values():
        for mask in range(1 << (n - 1)):
            adj = list(small.adj) + [mask]
            for w in range(n - 1):
                if mask >> w & 1:
                    adj[w] |= 1 << (n - 1)
            key = canonical_code(Graph(n, adj))
            if key not in found:
                found[key] = _from_code(n, key[1])
    return found


def enumerate_connected(n: int, skip_complete: bool = False) -> Corpus:
    """All connected graphs on ``n`` vertices up to isomorphism, in canonical form.

    Graphs are ordered by edge count, then by descending canonical code, so the
    order is reproducible run to run.
    """
    if not 2 <= n <= MAX_ENUMERATION_N:
        raise GraphError(f"enumeration supports 2 <= n <= {MAX_ENUMERATION_N}, got {n}")
    graphs = [
        g for g in _all_graphs(n).values()
        if g.is_connected() and not (skip_complete and g.is_complete())
    ]
    graphs.sort(key=lambda g: (g.edge_count(), -canonical_code(g)[1]))
    tag = f"connected:{n}" + (":noncomplete" if skip_complete else "")
    return Corpus(tuple(graphs), tag)


# -- DOT output ---------------------------------------------------------------


def emit_dot(
    g: Graph,
    highlight: VertexSet | Iterable[int] = (),
    labels: Sequence[str] | None = None,
    name: str = "G",
    accent: Iterable[int] = (),
) -> str:
    """Render ``g`` as an undirected DOT graph with ``highlight`` vertices filled."""
    marked = set(highlight)
    strong = set(accent)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = [f'label="{labels[v] if labels else v}"']
        if v in strong:
            attrs.append('style=filled fillcolor="#d62728" fontcolor=white')
        elif v in marked:
            attrs.append('style=filled fillcolor="#ffbb78"')
        lines.append(f"  {v} [{' '.join(attrs)}];")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
