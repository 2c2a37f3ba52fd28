"""Adversarial instances with no proper fault-tolerant spanner.

All constructions start from a small high-girth base graph (a cage or a
rejection-sampled graph), pack color-labelled copies of it, and, for vertex
colors, take a product over color-labelled copies of each side of a
bipartition.  Randomness comes from one seed per call.
"""
from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass

from .graph import ColoredGraph, Setting, girth

MAX_ATTEMPTS = 200


class DensityExhausted(RuntimeError):
    """No permutation adds enough new edges; try a smaller f."""


@dataclass(frozen=True)
class GirthBase:
    graph: ColoredGraph
    girth: int
    source: str  # "hardcoded-cage" or "random-greedy"

    def __post_init__(self):
        actual = girth(self.graph)
        if actual < self.girth:
            raise ValueError(f"base graph has girth {actual} < declared {self.girth}")

    @property
    def pairs(self) -> list:
        return [(e.u, e.v) for e in self.graph.edges]


def lcf_edges(n: int, shifts, repeats: int) -> set:
    """Edges of the Hamiltonian cubic graph given in LCF notation."""
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    seq = list(shifts) * repeats
    for i, s in enumerate(seq):
        j = (i + s) % n
        edges.add((min(i, j), max(i, j)))
    return edges


def _plain(n: int, pairs) -> ColoredGraph:
    return ColoredGraph.build(n, [(i, u, v, 1.0) for i, (u, v) in enumerate(sorted(pairs))], setting=Setting.EFT)


def heawood() -> ColoredGraph:
    return _plain(14, lcf_edges(14, [5, -5], 7))


def tutte_coxeter() -> ColoredGraph:
    return _plain(30, lcf_edges(30, [-13, -9, 7, -7, 9, 13], 5))


def complete_bipartite(a: int) -> ColoredGraph:
    return _plain(2 * a, [(i, a + j) for i in range(a) for j in range(a)])


def _hops_within(adj, u, v, limit):
    """True iff v is reachable from u in at most ``limit`` hops."""
    seen = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        if seen[x] == limit:
            continue
        for y in adj[x]:
            if y not in seen:
                if y == v:
                    return True
                seen[y] = seen[x] + 1
                q.append(y)
    return False


def random_girth_graph(n: int, min_girth: int, seed: int) -> ColoredGraph:
    """Add shuffled vertex pairs unless they would close a cycle shorter than ``min_girth``."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    adj = [set() for _ in range(n)]
    kept = []
    for u, v in pairs:
        if _hops_within(adj, u, v, min_girth - 2):
            continue
        adj[u].add(v)
        adj[v].add(u)
        kept.append((u, v))
    return _plain(n, kept)


def girth_base(n_hint: int, k: int, seed: int = 0, *, method: str = "auto") -> GirthBase:
    """A graph of girth >= 2k+2.

    ``method="auto"`` uses K_{a,a} (a = max(2, n_hint // 2)) for k=1, the
    Heawood graph for k=2 and the Tutte-Coxeter graph for k=3, falling back
    to rejection sampling on ``n_hint`` vertices for larger k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    want = 2 * k + 2
    if method == "auto" and k <= 3:
        if k == 1:
            g = complete_bipartite(max(2, n_hint // 2))
        elif k == 2:
            g = heawood()
        else:
            g = tutte_coxeter()
        return GirthBase(g, want, "hardcoded-cage")
    if method not in ("auto", "random"):
        raise ValueError(f"unknown method {method!r}")
    return GirthBase(random_girth_graph(n_hint, want, seed), want, "random-greedy")


def _pack(base_pairs, n, copies, rng):
    """Pack ``copies`` permuted images of the base edge set, each on fresh pairs.

    Copy 0 is the identity.  Every further copy keeps only the images that
    land on non-edges and must keep at least half of the base edges.
    Returns a list of edge lists, one per copy.
    """
    need = math.ceil(len(base_pairs) / 2)
    used = set()
    layers = []
    for i in range(copies):
        if i == 0:
            layer = [tuple(sorted(p)) for p in base_pairs]
        else:
            for _ in range(MAX_ATTEMPTS):
                perm = list(range(n))
                rng.shuffle(perm)
                images = [tuple(sorted((perm[u], perm[v]))) for u, v in base_pairs]
                layer = [p for p in images if p not in used]
                if len(layer) >= need:
                    break
            else:
                raise DensityExhausted(
                    f"no permutation in {MAX_ATTEMPTS} attempts adds half of the base edges "
                    f"for copy {i + 1}; use a smaller f or a larger base graph"
                )
        used.update(layer)
        layers.append(layer)
    return layers


def gen_ecft_lower(base: GirthBase, f: int, k: int, seed: int = 0) -> ColoredGraph:
    """Simple edge-colored graph whose every color class has girth >= 2k+2.

    Color ``i`` (labels 1..f) is a permuted copy of the base restricted to
    pairs not used by colors < i.
    """
    if f < 1:
        raise ValueError("f must be >= 1")
    if base.girth < 2 * k + 2:
        raise ValueError(f"base girth {base.girth} is below 2k+2 = {2 * k + 2}")
    rng = random.Random(seed)
    layers = _pack(base.pairs, base.graph.n, f, rng)
    edges = []
    for color, layer in enumerate(layers, start=1):
        for u, v in layer:
            edges.append((len(edges), u, v, 1.0, [str(color)]))
    return ColoredGraph.build(base.graph.n, edges, setting=Setting.ECFT)


def bipartize(g: ColoredGraph, rng: random.Random):
    """Random side per vertex, retried until at least half the edges cross."""
    need = math.ceil(g.m / 2)
    for _ in range(MAX_ATTEMPTS):
        side = [rng.randrange(2) for _ in range(g.n)]
        crossing = [e for e in g.edges if side[e.u] != side[e.v]]
        if len(crossing) >= need:
            return side, crossing
    raise DensityExhausted(f"no bipartition in {MAX_ATTEMPTS} attempts keeps half of the edges")


def _product(base: ColoredGraph, side, crossing, left_lists, right_lists, setting):
    """Place a copy of the crossing edges on every (left list, right list) combination.

    Vertex (x, i) for x on side s gets id ``i * n + x`` where ``i`` indexes
    that side's lists; copies of a left vertex and a right vertex share the
    index space, so the vertex count is ``max(#left, #right) * n``.
    """
    n = base.n
    copies = max(len(left_lists), len(right_lists))
    if len(left_lists) != len(right_lists):
        raise ValueError("both sides need the same number of lists")
    vertex_lists = {}
    for i in range(copies):
        for x in range(n):
            vertex_lists[i * n + x] = left_lists[i] if side[x] == 0 else right_lists[i]
    edges = []
    for i in range(copies):
        for j in range(copies):
            for e in crossing:
                a, b = (e.u, e.v) if side[e.u] == 0 else (e.v, e.u)
                labels = base.labels(e.colors)
                edges.append((len(edges), i * n + a, j * n + b, e.weight, labels))
    return ColoredGraph.build(copies * n, edges, vertex_lists, setting)


def gen_mcft_lower(base_ec: ColoredGraph, f: int, seed: int = 0) -> ColoredGraph:
    """Product of f left and f right copies of a bipartized edge-colored instance.

    Left copy i carries vertex color ``Li``, right copy j ``Rj``; every
    (i, j) pair gets its own copy of the edges.
    """
    if f < 1:
        raise ValueError("f must be >= 1")
    rng = random.Random(seed)
    side, crossing = bipartize(base_ec, rng)
    left = [[f"L{i}"] for i in range(1, f + 1)]
    right = [[f"R{j}"] for j in range(1, f + 1)]
    return _product(base_ec, side, crossing, left, right, Setting.MCFT)


def gen_list_lower(base: GirthBase, f: int, k: int, mu: int, nu: int, seed: int = 0) -> ColoredGraph:
    """(mu, nu)-list-colored instance.

    Packs C(f+mu, mu) copies of the base, copy s carrying the s-th mu-subset
    of edge colors ``1..f+mu``, then takes the product over the nu-subsets of
    ``L1..L(f+nu)`` and ``R1..R(f+nu)``.
    """
    if f < 1:
        raise ValueError("f must be >= 1")
    if mu < 0 or nu < 0:
        raise ValueError("mu and nu must be >= 0")
    if base.girth < 2 * k + 2:
        raise ValueError(f"base girth {base.girth} is below 2k+2 = {2 * k + 2}")
    rng = random.Random(seed)
    edge_subsets = list(itertools.combinations([str(c) for c in range(1, f + mu + 1)], mu))
    layers = _pack(base.pairs, base.graph.n, len(edge_subsets), rng)
    edges = []
    for subset, layer in zip(edge_subsets, layers):
        for u, v in layer:
            edges.append((len(edges), u, v, 1.0, list(subset)))
    packed = ColoredGraph.build(base.graph.n, edges, setting=Setting.LISTS)
    if nu == 0:
        return packed
    side, crossing = bipartize(packed, rng)
    left = [list(s) for s in itertools.combinations([f"L{i}" for i in range(1, f + nu + 1)], nu)]
    right = [list(s) for s in itertools.combinations([f"R{i}" for i in range(1, f + nu + 1)], nu)]
    return _product(packed, side, crossing, left, right, Setting.LISTS)
