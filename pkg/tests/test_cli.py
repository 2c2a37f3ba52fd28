import csv
import itertools

import pytest

from cftspan import read_graph, serialize
from cftspan.cli import COLUMNS, main, parse_range, run_sweep

from conftest import cycle_graph

C4 = "graph 4\nsetting ecft\ne 0 0 1 1 [1]\ne 1 1 2 1 [2]\ne 2 2 3 1 [3]\ne 3 3 0 1 [4]\n"


def read_rows(path):
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# cftspan-experiments")
    return list(csv.DictReader(lines[1:]))


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text(C4)
    return p


def test_build_greedy(c4_file, tmp_path):
    out, rep = tmp_path / "h.txt", tmp_path / "r.csv"
    code = main(["build", str(c4_file), "--algo", "greedy", "--k", "2", "--f", "1",
                 "--out", str(out), "--report", str(rep), "--verify"])
    assert code == 0
    assert read_graph(out).m == 4
    (row,) = read_rows(rep)
    assert list(row) == COLUMNS
    assert row["spanner_edges"] == "4" and row["verified"] == "ok" and row["algo"] == "greedy"
    # round trip: the output re-parses and re-verifies
    assert main(["verify", str(c4_file), str(out), "--k", "2", "--f", "1"]) == 0


def test_build_modified_f0(c4_file, tmp_path):
    out = tmp_path / "h.txt"
    assert main(["build", str(c4_file), "--algo", "modified", "--f", "0", "--out", str(out)]) == 0
    assert sorted(read_graph(out).edge_ids) == [0, 1, 2]


def test_build_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("graph 3\ne 0 0 1\n")
    assert main(["build", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_build_budget(tmp_path):
    p = tmp_path / "g.txt"
    k5 = "\n".join(f"e {i} {u} {v} 1 [{i}]" for i, (u, v) in enumerate(itertools.combinations(range(5), 2)))
    p.write_text(f"graph 5\nsetting ecft\n{k5}\n")
    assert main(["build", str(p), "--algo", "greedy", "--f", "3", "--max-nodes", "1"]) == 3


def test_verify_self_and_failure(c4_file, tmp_path, capsys):
    assert main(["verify", str(c4_file), str(c4_file), "--k", "2", "--f", "1"]) == 0
    sub = tmp_path / "path.txt"
    sub.write_text("graph 4\nsetting ecft\ne 0 0 1 1 [1]\ne 1 1 2 1 [2]\ne 2 2 3 1 [3]\n")
    capsys.readouterr()
    assert main(["verify", str(c4_file), str(sub), "--k", "2", "--f", "1"]) == 1
    out = capsys.readouterr().out
    assert "counterexample" in out and "F={" in out


def test_verify_cert_tree(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(serialize(cycle_graph(6)))
    tree = tmp_path / "t.txt"
    tree.write_text(serialize(cycle_graph(6).subgraph(range(5))))
    assert main(["verify", str(g), str(tree), "--cert", "--lambda", "1"]) == 1


def test_verify_budget(tmp_path, monkeypatch):
    g = tmp_path / "g.txt"
    g.write_text(serialize(cycle_graph(8)))
    monkeypatch.setenv("CFT_BUDGET", "10")
    assert main(["verify", str(g), str(g), "--f", "2"]) == 3


def test_verify_mismatched_edge(c4_file, tmp_path):
    sub = tmp_path / "x.txt"
    sub.write_text("graph 4\nsetting ecft\ne 0 0 2 1 [1]\n")
    assert main(["verify", str(c4_file), str(sub)]) == 2


def test_cert(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(serialize(cycle_graph(6)))
    out = tmp_path / "c.txt"
    assert main(["cert", str(g), "--lambda", "1", "--out", str(out), "--verify"]) == 0
    assert main(["verify", str(g), str(out), "--cert", "--lambda", "1"]) == 0


def test_gen_families(tmp_path):
    out = tmp_path / "e.txt"
    assert main(["gen", "--family", "ecft", "--f", "1", "--k", "2", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("# generator: gen_ecft_lower")
    g = read_graph(out)
    assert (g.n, g.m, len(g.universe)) == (14, 21, 1)

    assert main(["gen", "--family", "mcft", "--f", "2", "--out", str(out)]) == 0
    g = read_graph(out)
    assert g.n == 28 and g.m % 4 == 0
    assert {g.label(c) for cs in g.vertex_colors for c in cs} == {"L1", "L2", "R1", "R2"}

    assert main(["gen", "--family", "lists", "--mu", "2", "--nu", "0", "--f", "1", "--out", str(out)]) == 0
    g = read_graph(out)
    assert len({e.colors for e in g.edges}) == 3


def test_gen_density_error():
    assert main(["gen", "--family", "ecft", "--f", "5", "--k", "1", "--n", "4"]) == 2


def test_parse_range():
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("1,3") == [1, 3]
    with pytest.raises(ValueError):
        parse_range("")


def test_sweep_rows_and_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--n", "10", "--f-range", "1..4", "--trials", "3", "--k", "2", "--seed", "5"]
    assert main(args + ["--csv", str(a)]) == 0
    assert main(args + ["--csv", str(b), "--jobs", "2"]) == 0
    ra, rb = read_rows(a), read_rows(b)
    assert len(ra) == 24
    strip = [{k: v for k, v in r.items() if k != "time_ms"} for r in ra]
    assert strip == [{k: v for k, v in r.items() if k != "time_ms"} for r in rb]
    assert [(r["f"], r["algo"]) for r in ra[:6]] == [("1", "greedy"), ("1", "modified")] * 3
    for r in ra:
        assert r["verified"] in ("ok", "skipped")
        size, m, f = int(r["spanner_edges"]), int(r["m"]), int(r["f"])
        assert size <= m
        limit = f if r["algo"] == "greedy" else 4 * 2 * f
        assert int(r["blocking_pairs"]) <= limit * size


def test_sweep_lowerbound_family():
    rows = run_sweep("lowerbound", "ecft", 14, [1, 2], 2, 1, 0, verify=True)
    assert len(rows) == 4
    # no edge of a lower-bound instance can be dropped
    assert all(r["spanner_edges"] == r["m"] for r in rows)
    assert all(r["verified"] == "ok" for r in rows)


def test_sweep_skips_over_budget():
    rows = run_sweep("random", "ecft", 12, [3], 2, 1, 0, verify=True, budget=10)
    assert {r["verified"] for r in rows} == {"skipped"}
