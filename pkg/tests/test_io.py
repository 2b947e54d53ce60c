from itertools import combinations, permutations

import pytest
from hypothesis import given

from tollkit.graph import GraphError, family, new_graph
from tollkit.io import (
    Graph6Error,
    canonical_code,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    enumerate_connected,
    parse_edge_list,
    parse_graph6,
    read_corpus,
    write_corpus,
)

from .strategies import any_graphs


def brute_force_connected(n: int) -> tuple[int, int]:
    """Connected graphs on n vertices up to isomorphism, by trying every edge mask
    and every relabelling.  Returns (all, non-complete) counts."""
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        g = new_graph(n, edges)
        if not g.is_connected():
            continue
        key = min(
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            for perm in perms
        )
        seen.add(key)
    complete = tuple(pairs)
    return len(seen), len(seen - {complete})


def test_graph6_complete_graph():
    assert parse_graph6("C~") == family("complete", 4)


def test_graph6_path_bits():
    # bit order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) = 101001 -> 41 + 63 = 'h'
    assert emit_graph6(family("path", 4)) == "Ch"
    assert parse_graph6("Ch") == family("path", 4)


@pytest.mark.parametrize("bad", ["C", "", "C~~", "C~\x7f", "Bx"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_header_and_whitespace():
    assert parse_graph6(">>graph6<<Ch\n") == family("path", 4)


def test_graph6_long_form():
    g = family("cycle", 70)
    line = emit_graph6(g)
    assert line.startswith("~")
    assert parse_graph6(line) == g


@given(any_graphs(max_n=14))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_edge_list():
    assert parse_edge_list("4\n0 1\n1 2\n2 3") == family("path", 4)
    assert emit_edge_list(family("complete", 3)) == "3\n0 1\n0 2\n1 2"
    with pytest.raises(GraphError):
        parse_edge_list("4\n0 4")
    with pytest.raises(GraphError):
        parse_edge_list("4\n0")
    with pytest.raises(GraphError):
        parse_edge_list("4\n0 x")


@given(any_graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


def test_enumerate_small():
    assert list(enumerate_connected(2)) == [family("complete", 2)]
    assert len(enumerate_connected(2, skip_complete=True)) == 0
    with pytest.raises(GraphError):
        enumerate_connected(8)
    with pytest.raises(GraphError):
        enumerate_connected(1)


@pytest.mark.parametrize("n, expected", [(3, (2, 1)), (4, (6, 5)), (5, (21, 20))])
def test_enumeration_matches_brute_force(n, expected):
    assert brute_force_connected(n) == expected
    assert (len(enumerate_connected(n)), len(enumerate_connected(n, True))) == expected


def test_enumeration_known_counts():
    # connected graphs on 6 and 7 unlabeled vertices
    assert len(enumerate_connected(6)) == 112
    assert len(enumerate_connected(7)) == 853


def test_enumeration_deterministic_and_distinct():
    a = enumerate_connected(6)
    b = enumerate_connected(6)
    assert [emit_graph6(g) for g in a] == [emit_graph6(g) for g in b]
    codes = [canonical_code(g) for g in a]
    assert len(set(codes)) == len(codes)
    assert all(g.is_connected() for g in a)


def test_canonical_code_is_relabelling_invariant():
    g = new_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)])
    for perm in list(permutations(range(6)))[::37]:
        h = new_graph(6, [(perm[a], perm[b]) for a, b in g.edges()])
        assert canonical_code(h) == canonical_code(g)


def test_corpus_file_round_trip(tmp_path):
    path = tmp_path / "c.g6"
    corpus = enumerate_connected(4)
    write_corpus(corpus, path)
    path.write_text("# header comment\n\n" + path.read_text())
    back = read_corpus(path)
    assert list(back) == list(corpus)
    assert back.source == str(path)


def test_corpus_file_reports_bad_line(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("Ch\nC\n")
    with pytest.raises(Graph6Error, match=":2:"):
        read_corpus(path)


def test_emit_dot_highlights():
    dot = emit_dot(family("path", 3), highlight=[1], accent=[0], labels=["a", "b", "c"])
    assert dot.startswith("graph G {")
    assert '1 [label="b" style=filled fillcolor="#ffbb78"]' in dot
    assert "#d62728" in dot.splitlines()[2]
    assert "  0 -- 1;" in dot and "  1 -- 2;" in dot


def test_graph6_agrees_with_networkx():
    nx = pytest.importorskip("networkx")
    for g in list(enumerate_connected(6))[::5] + [family("cycle", 70)]:
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges())
        ours = emit_graph6(g)
        assert nx.to_graph6_bytes(ref, header=False).decode().strip() == ours
        back = nx.from_graph6_bytes(ours.encode())
        assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def test_enumeration_agrees_with_networkx_atlas():
    nx = pytest.importorskip("networkx")
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() >= 2 and nx.is_connected(h)]
    for n in range(2, 8):
        refs = [h for h in atlas if h.number_of_nodes() == n]
        ours = enumerate_connected(n)
        assert len(ours) == len(refs)
        for g in list(ours)[::max(1, len(ours) // 40)]:
            mine = nx.Graph(g.edges())
            assert sum(nx.is_isomorphic(mine, h) for h in refs) == 1
