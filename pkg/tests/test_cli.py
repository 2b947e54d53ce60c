import json
import subprocess
import sys

import pytest

from tollkit.cli import build_parser, run
from tollkit.graph import family, new_graph
from tollkit.io import emit_graph6, parse_graph6, read_corpus
from tollkit.products import strong_product
from tollkit.search import is_t_hull_set, is_toll_set


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text(capsys):
    code, out, _ = call(capsys, "compute", "--invariant", "tn", "--graph", "family:path:4")
    assert code == 0
    assert out.strip() == "tn = 2, witness {0,3}"


def test_interval_graph6(capsys):
    code, out, _ = call(capsys, "interval", "--graph", "g6:Ch", "--pair", "0,3")
    assert (code, out.strip()) == (0, "{0,1,2,3}")


@pytest.mark.parametrize("via, expected", [("geodesic", [0, 1, 2]), ("monophonic", [0, 1, 2, 3, 4]),
                                           ("oracle", [0, 1, 2, 3, 4])])
def test_interval_variants(capsys, via, expected):
    code, out, _ = call(capsys, "interval", "--graph", "family:cycle:5", "--pair", "0,2",
                        "--via", via, "--format", "machine")
    assert code == 0 and json.loads(out)["members"] == expected


def test_verify_paw_pendant(capsys):
    code, out, _ = call(capsys, "verify", "--check", "tn_characterization",
                        "--left", "family:paw_pendant:4", "--right", "family:paw_pendant:4")
    assert code == 0
    assert "outcome=pass" in out and '"tn":3' in out


def test_verify_all_machine(capsys):
    code, out, _ = call(capsys, "verify", "--left", "family:path:3", "--right", "family:cycle:4",
                        "--format", "machine")
    doc = json.loads(out)
    assert code == 0 and doc["summary"] == {"pass": 5, "fail": 0, "skip": 0}


@pytest.mark.parametrize("invariant", ["tn", "th"])
def test_machine_output_reverifies(capsys, paw, invariant):
    code, out, _ = call(capsys, "compute", "--invariant", invariant, "--left", "family:paw_pendant:4",
                        "--right", "family:path:3", "--format", "machine")
    assert code == 0
    doc = json.loads(out)
    p = strong_product(paw, family("path", 3))
    assert parse_graph6(doc["graph6"]) == p.graph
    witness = p.graph.vertex_set(p.encode(a, b) for a, b in doc["witness"])
    assert len(witness) == doc["value"]
    check = is_toll_set if invariant == "tn" else is_t_hull_set
    assert check(p.graph, witness)


def test_compute_other_invariants(capsys):
    assert call(capsys, "compute", "--invariant", "g", "--graph", "family:complete:4")[1].startswith("g = 4")
    assert call(capsys, "compute", "--invariant", "hn", "--graph", "family:cycle:4")[1].startswith("hn = 2")
    code, out, _ = call(capsys, "compute", "--invariant", "ext", "--graph", "family:path:4")
    assert out.strip() == "ext = 2, vertices {0,3}"


def test_product_output(capsys):
    code, out, _ = call(capsys, "product", "--left", "family:path:2", "--right", "family:path:2")
    assert (code, out.strip()) == (0, "C~")
    code, out, _ = call(capsys, "product", "--left", "family:path:2", "--right", "family:path:3",
                        "--kind", "cartesian", "--format", "machine")
    doc = json.loads(out)
    assert doc["kind"] == "cartesian" and doc["n"] == 6 and len(doc["edges"]) == 7
    assert [[0, 0], [0, 1]] in doc["edges"]


def test_emit_dot(capsys, tmp_path):
    path = tmp_path / "i.dot"
    code, _, _ = call(capsys, "interval", "--left", "family:path:3", "--right", "family:path:3",
                      "--pair", "0,8", "--emit-dot", str(path))
    text = path.read_text()
    assert code == 0 and text.startswith("graph G {") and '"(1,1)"' in text
    path = tmp_path / "p.dot"
    call(capsys, "product", "--left", "family:path:2", "--right", "family:path:2", "--emit-dot", str(path))
    assert path.read_text().count("--") == 6


def test_file_specs(capsys, tmp_path):
    edges = tmp_path / "p4.txt"
    edges.write_text("4\n0 1\n1 2\n2 3\n")
    g6 = tmp_path / "p4.g6"
    g6.write_text("# path\nCh\n")
    for f in (edges, g6):
        code, out, _ = call(capsys, "compute", "--invariant", "tn", "--graph", f"file:{f}")
        assert out.strip() == "tn = 2, witness {0,3}"


@pytest.mark.parametrize("argv", [
    ["compute", "--graph", "family:path:4"],
    ["compute", "--invariant", "tn"],
    ["compute", "--invariant", "tn", "--graph", "bogus"],
    ["compute", "--invariant", "tn", "--graph", "g6:C"],
    ["compute", "--invariant", "tn", "--graph", "family:star:4"],
    ["compute", "--invariant", "tn", "--graph", "file:/nonexistent/x.g6"],
    ["interval", "--graph", "family:path:4", "--pair", "0-3"],
    ["interval", "--graph", "family:path:4", "--pair", "0,9"],
    ["verify", "--left", "family:path:3"],
    ["frobnicate"],
    ["compute", "--invariant", "tn", "--graph", "family:path:4", "--unknown"],
])
def test_usage_errors_exit_one(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("tollkit:")


def test_disconnected_graph_is_an_input_error(capsys):
    two_edges = emit_graph6(new_graph(4, [(0, 1), (2, 3)]))
    code, _, err = call(capsys, "compute", "--invariant", "tn", "--graph", f"g6:{two_edges}")
    assert code == 1 and "connected" in err


def test_gen_then_sweep(capsys, tmp_path):
    corpus = tmp_path / "c.g6"
    assert call(capsys, "gen", "--min-n", "2", "--max-n", "4", "--output", str(corpus))[0] == 0
    assert len(read_corpus(corpus)) == 1 + 2 + 6
    code, out, _ = call(capsys, "sweep", "--left", f"file:{corpus}", "--right", f"file:{corpus}")
    assert code == 0
    last = out.strip().splitlines()[-1]
    assert last.startswith("summary pass=") and "fail=0" in last
    assert len(out.strip().splitlines()) == 9 * 9 * 5 + 1


def test_sweep_jobs_env_and_ordering(capsys, monkeypatch):
    argv = ["sweep", "--min-n", "3", "--max-n", "4", "--skip-complete", "--check", "th2",
            "--format", "machine"]
    _, serial, _ = call(capsys, *argv, "--jobs", "1")
    monkeypatch.setenv("TOLLKIT_JOBS", "2")
    assert build_parser().parse_args(["sweep"]).jobs == 2
    _, parallel, _ = call(capsys, *argv)

    def strip(text):
        doc = json.loads(text)
        return [{**r, "millis": 0} for r in doc["reports"]], doc["summary"]

    assert strip(serial) == strip(parallel)
    assert strip(serial)[1] == {"pass": 36, "fail": 0, "skip": 0}


def test_gen_stdout(capsys):
    code, out, _ = call(capsys, "gen", "--min-n", "3", "--max-n", "3", "--skip-complete")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("#") and len(lines) == 2
    g = parse_graph6(lines[1])
    assert g.n == 3 and g.edge_count() == 2 and g.is_connected()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tollkit", "interval", "--graph", "g6:Ch",
                           "--pair", "1,3"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "{1,2,3}"
    proc = subprocess.run([sys.executable, "-m", "tollkit", "compute"], capture_output=True,
                          text=True, check=False)
    assert proc.returncode == 1


def test_verification_failure_exits_two(capsys, monkeypatch):
    from tollkit import harness

    def broken(left, right):
        return harness.VerificationReport("th2", "Bw", "Bw", "fail", counterexample={"kind": "th_value", "th": 3})

    monkeypatch.setitem(harness.CHECKS, "th2", broken)
    code, out, _ = call(capsys, "verify", "--check", "th2", "--left", "family:path:3", "--right", "family:path:3")
    assert code == 2 and "outcome=fail" in out
