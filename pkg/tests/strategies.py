from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from tollkit.graph import Graph, new_graph


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 9) -> Graph:
    """Random connected graph: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    extra = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    for keep, pair in zip(extra, combinations(range(n), 2)):
        if keep:
            edges.add(pair)
    return new_graph(n, edges)


@st.composite
def any_graphs(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [p for p, k in zip(pairs, keep) if k])
