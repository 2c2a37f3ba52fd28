import itertools
import math

import networkx as nx
import pytest

from cftspan import ColoredGraph


def cycle_graph(n, setting="ecft"):
    return ColoredGraph.build(n, [(i, i, (i + 1) % n, 1, [str(i + 1)]) for i in range(n)], setting=setting)


def path_graph(weights, colors, setting="ecft"):
    edges = [(i, i, i + 1, w, c) for i, (w, c) in enumerate(zip(weights, colors))]
    return ColoredGraph.build(len(weights) + 1, edges, setting=setting)


def to_nx(g, banned=frozenset()):
    """networkx MultiGraph of G - banned (independent of cftspan's traversals)."""
    out = nx.MultiGraph()
    out.add_nodes_from(range(g.n))
    for e in g.edges:
        dmg = set(e.colors) | set(g.vertex_colors[e.u]) | set(g.vertex_colors[e.v])
        if dmg & set(banned):
            continue
        out.add_edge(e.u, e.v, key=e.id, weight=e.weight)
    return out


def nx_dist(gx, u, v):
    try:
        return nx.shortest_path_length(gx, u, v, weight="weight")
    except nx.NetworkXNoPath:
        return math.inf


def brute_ft_spanner(g, h, k, f):
    """Reference verifier: every fault set, every pair, via networkx."""
    for size in range(f + 1):
        for fs in itertools.combinations(range(len(g.color_labels)), size):
            gx, hx = to_nx(g, fs), to_nx(h, fs)
            for u, v in itertools.combinations(range(g.n), 2):
                dg = nx_dist(gx, u, v)
                if dg < math.inf and nx_dist(hx, u, v) > (2 * k - 1) * dg:
                    return False
    return True


def brute_separating(h, edge, f, threshold, universe):
    """All witnesses F (|F| <= f, not damaging edge) by full enumeration."""
    forbidden = set(edge.colors) | set(h.vertex_colors[edge.u]) | set(h.vertex_colors[edge.v])
    cands = sorted(set(universe) - forbidden)
    out = []
    for size in range(f + 1):
        for fs in itertools.combinations(cands, size):
            if nx_dist(to_nx(h, fs), edge.u, edge.v) > threshold:
                out.append(frozenset(fs))
    return out


@pytest.fixture
def c4():
    return cycle_graph(4)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
