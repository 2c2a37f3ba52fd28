"""Seeded random instance families used by sweeps and tests."""
from __future__ import annotations

import math
import random

from .graph import ColoredGraph, Setting, components


def sweep_edge_prob(n: int, k: int) -> float:
    return min(1.0, 2 / n * n ** (1 / k))


def color_lists(setting: Setting, mu: int = 2, nu: int = 1):
    """Max (edge, vertex) list sizes drawn for ``setting``; 0 means none."""
    return {
        Setting.ECFT: (1, 0),
        Setting.VCFT: (0, 1),
        Setting.MCFT: (1, 1),
        Setting.LISTS: (mu, nu),
    }.get(setting, (0, 0))


def random_colored_graph(
    n: int,
    p: float,
    setting="ecft",
    *,
    seed: int = 0,
    edge_palette: int | None = None,
    vertex_palette: int | None = None,
    shared_palette: bool = False,
    mu: int = 2,
    nu: int = 1,
    weights: tuple = (1, 1),
    extra_parallel: int = 0,
    connected: bool = True,
    max_tries: int = 1000,
) -> ColoredGraph:
    """Erdos-Renyi graph with random color lists and integer weights.

    Edge colors are drawn from ``edge_palette`` labels (default ceil(n/2)),
    vertex colors from ``vertex_palette`` (default ceil(n/4)); the two label
    spaces are disjoint unless ``shared_palette``.  In the LISTS setting each
    list has a uniform size in 1..mu (edges) and 0..nu (vertices); the other
    colored settings use exactly one color where their faults live.
    ``extra_parallel`` duplicates that many random edges.  With ``connected``
    the graph is resampled until connected.
    """
    setting = Setting.parse(setting)
    rng = random.Random(seed)
    ep = edge_palette or max(1, math.ceil(n / 2))
    vp = vertex_palette or max(1, math.ceil(n / 4))
    emax, vmax = color_lists(setting, mu, nu)
    epre, vpre = ("c", "c") if shared_palette else ("a", "b")
    for _ in range(max_tries):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        for _ in range(extra_parallel):
            if pairs:
                pairs.append(rng.choice(pairs))
        edges = []
        for i, (u, v) in enumerate(pairs):
            w = rng.randint(*weights)
            labels = []
            if emax:
                size = 1 if setting != Setting.LISTS else rng.randint(1, emax)
                labels = [f"{epre}{c}" for c in rng.sample(range(ep), min(size, ep))]
            edges.append((i, u, v, w, labels))
        vlists = {}
        if vmax:
            for x in range(n):
                size = 1 if setting != Setting.LISTS else rng.randint(0, vmax)
                vlists[x] = [f"{vpre}{c}" for c in rng.sample(range(vp), min(size, vp))]
        g = ColoredGraph.build(n, edges, vlists, setting)
        if not connected or n <= 1 or len(set(components(g))) == 1:
            return g
    raise RuntimeError(f"no connected sample in {max_tries} tries; raise p")


def recolor(g: ColoredGraph, setting, *, seed: int = 0, palette: int = 4, mu: int = 2, nu: int = 1,
            shared_palette: bool = True) -> ColoredGraph:
    """Same vertices, edges and weights with fresh random lists for ``setting``."""
    setting = Setting.parse(setting)
    rng = random.Random(seed)
    emax, vmax = color_lists(setting, mu, nu)
    epre, vpre = ("c", "c") if shared_palette else ("a", "b")
    edges = []
    for e in g.edges:
        labels = []
        if emax:
            size = 1 if setting != Setting.LISTS else rng.randint(1, emax)
            labels = [f"{epre}{c}" for c in rng.sample(range(palette), min(size, palette))]
        edges.append((e.id, e.u, e.v, e.weight, labels))
    vlists = {}
    if vmax:
        for x in range(g.n):
            size = 1 if setting != Setting.LISTS else rng.randint(0, vmax)
            vlists[x] = [f"{vpre}{c}" for c in rng.sample(range(palette), min(size, palette))]
    return ColoredGraph.build(g.n, edges, vlists, setting)


def distinct_colors(g: ColoredGraph, setting) -> ColoredGraph:
    """Give every edge (ECFT) or vertex (VCFT) its own color."""
    setting = Setting.parse(setting)
    if setting == Setting.ECFT:
        edges = [(e.id, e.u, e.v, e.weight, [str(e.id)]) for e in g.edges]
        return ColoredGraph.build(g.n, edges, setting=setting)
    if setting == Setting.VCFT:
        edges = [(e.id, e.u, e.v, e.weight) for e in g.edges]
        return ColoredGraph.build(g.n, edges, {x: [str(x)] for x in range(g.n)}, setting)
    raise ValueError("distinct colors only for ecft/vcft")


def as_setting(g: ColoredGraph, setting) -> ColoredGraph:
    """Drop all lists and rebuild under an uncolored setting."""
    edges = [(e.id, e.u, e.v, e.weight) for e in g.edges]
    return ColoredGraph.build(g.n, edges, setting=setting)
