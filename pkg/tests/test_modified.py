import itertools

import networkx as nx
from hypothesis import given, settings, strategies as st

from cftspan import (
    ColoredGraph,
    blame_bound_check,
    build_ft_greedy,
    build_modified_greedy,
    is_replaceable,
    verify_blocking_set,
)
from cftspan.modified import blame_limit
from cftspan.oracle import replay_discards
from cftspan.random_graphs import as_setting, distinct_colors, random_colored_graph

from conftest import brute_ft_spanner, cycle_graph, to_nx


def lab(g, *labels):
    return frozenset(g.color_labels.index(str(x)) for x in labels)


def test_no_path_not_replaceable():
    g = ColoredGraph.build(3, [(0, 0, 1, 1, ["1"]), (1, 0, 2, 1, ["2"])], setting="ecft")
    res = is_replaceable(g.subgraph([0]), g.edge(1), 2, 3)
    assert not res.replaceable and res.blame == frozenset() and res.paths_found == 0


def test_single_short_path_blamed():
    g = ColoredGraph.build(3, [(0, 0, 1, 1, ["1"]), (1, 1, 2, 1, ["2"]), (2, 0, 2, 1, ["9"])], setting="ecft")
    res = is_replaceable(g.subgraph([0, 1]), g.edge(2), 2, 1)
    assert not res.replaceable
    assert res.blame == lab(g, 1, 2)
    assert res.paths_found == 1


def test_two_disjoint_paths_replaceable():
    g = ColoredGraph.build(
        4,
        [(0, 0, 1, 1, ["1"]), (1, 1, 3, 1, ["2"]), (2, 0, 2, 1, ["3"]), (3, 2, 3, 1, ["4"]), (4, 0, 3, 1, ["9"])],
        setting="ecft",
    )
    h = g.subgraph(range(4))
    res = is_replaceable(h, g.edge(4), 2, 1)
    assert res.replaceable and res.paths_found == 2
    # exhaustive: no single color kills both paths
    for c in g.universe - lab(g, 9):
        assert nx.has_path(to_nx(h, {c}), 0, 3)


def test_f0_matches_classic_on_unit_weights():
    for seed in range(10):
        g = random_colored_graph(7, 0.5, "ecft", seed=seed)
        assert build_modified_greedy(g, 2, 0).spanner.edge_ids == build_ft_greedy(g, 2, 0).spanner.edge_ids


def test_f1_cycle_keeps_all():
    r = build_modified_greedy(cycle_graph(4), 2, 1)
    assert sorted(r.spanner.edge_ids) == [0, 1, 2, 3]
    assert brute_ft_spanner(cycle_graph(4), r.spanner, 2, 1)


def test_weighted_triangle_keeps_heavy_edge():
    g = ColoredGraph.build(3, [(0, 0, 1, 1, ["1"]), (1, 1, 2, 1, ["2"]), (2, 0, 2, 10, ["3"])], setting="ecft")
    mod = build_modified_greedy(g, 1, 0)
    exact = build_ft_greedy(g, 1, 0)
    assert sorted(mod.spanner.edge_ids) == [0, 1, 2]
    assert sorted(exact.spanner.edge_ids) == [0, 1]
    assert brute_ft_spanner(g, mod.spanner, 1, 0)
    assert brute_ft_spanner(g, exact.spanner, 1, 0)


def test_blame_bound_examples():
    r = build_modified_greedy(cycle_graph(5), 2, 0)
    assert all(not b for b in r.blocking.provenance.values())
    assert blame_bound_check(r, 2, 0)
    # 3-edge path, every edge and vertex colored, closed by a chord
    g = ColoredGraph.build(
        4,
        [(0, 0, 1, 1, ["e0"]), (1, 1, 2, 1, ["e1"]), (2, 2, 3, 1, ["e2"]), (3, 0, 3, 1, ["e3"])],
        {0: ["v0"], 1: ["v1"], 2: ["v2"], 3: ["v3"]},
        setting="mcft",
    )
    res = is_replaceable(g.subgraph([0, 1, 2]), g.edge(3), 2, 1)
    assert not res.replaceable
    assert res.blame == lab(g, "e0", "e1", "e2", "v1", "v2")
    assert len(res.blame) <= 8


def test_blame_limit_general_lists():
    g = ColoredGraph.build(2, [(0, 0, 1, 1, ["a", "b"])], {0: ["c"]}, setting="lists")
    assert blame_limit(g, 2, 1) == max(8, 3 * 2 + 4 * 1)


graphs = st.builds(
    lambda n, seed, setting, par, w: random_colored_graph(
        n, 0.6, setting, seed=seed, edge_palette=4, vertex_palette=3, weights=(1, w),
        extra_parallel=par, connected=False, shared_palette=seed % 2 == 0,
    ),
    st.integers(2, 7),
    st.integers(0, 100_000),
    st.sampled_from(["ecft", "vcft", "mcft", "lists"]),
    st.integers(0, 2),
    st.sampled_from([1, 5]),
)


@settings(max_examples=50, deadline=None)
@given(graphs, st.integers(0, 2), st.integers(1, 2))
def test_modified_properties(g, f, k):
    r = build_modified_greedy(g, k, f)
    assert brute_ft_spanner(g, r.spanner, k, f)
    assert verify_blocking_set(r.spanner, r.blocking, k)
    assert blame_bound_check(r, k, f, blame_limit(g, k, f))
    assert r.stats.path_queries <= g.m * (f + 1)
    assert replay_discards(g, r) == []


@settings(max_examples=60, deadline=None)
@given(graphs, st.integers(0, 3), st.integers(1, 2))
def test_subroutine_invariants(g, f, k):
    if not g.edges:
        return
    e = g.edges[-1]
    h = g.subgraph([x.id for x in g.edges if x.id != e.id])
    res = is_replaceable(h, e, k, f)
    for a, b in itertools.combinations(res.color_sets, 2):
        assert not a & b
    for path in res.paths:
        assert len(path) <= 2 * k - 1
    damaging = e.colors | g.vertex_colors[e.u] | g.vertex_colors[e.v]
    assert not res.blame & damaging
    if res.replaceable:
        assert res.paths_found == f + 1
        # safety of discard: every F avoiding e's colors leaves a short path
        cands = sorted(g.universe - damaging)
        for size in range(f + 1):
            for fs in itertools.combinations(cands, size):
                hx = to_nx(h, fs)
                assert nx.has_path(hx, e.u, e.v)
                assert nx.shortest_path_length(hx, e.u, e.v) <= 2 * k - 1


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 7), st.integers(0, 100_000), st.integers(1, 2), st.integers(1, 2))
def test_reduction_consistency(n, seed, f, k):
    g = random_colored_graph(n, 0.6, "ecft", seed=seed, weights=(1, 3), connected=False)
    for colored, plain in (("ecft", "eft"), ("vcft", "vft")):
        assert (
            build_modified_greedy(distinct_colors(g, colored), k, f).spanner.edge_ids
            == build_modified_greedy(as_setting(g, plain), k, f).spanner.edge_ids
        )
