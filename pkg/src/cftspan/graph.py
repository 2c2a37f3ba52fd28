"""Colored weighted multigraphs and the fault primitives built on them.

Every fault setting is reduced to the color-list model: each edge and each
vertex carries a (possibly empty) set of colors, and failing a color removes
every edge that carries it or touches a vertex that carries it.  The uncolored
settings (EFT/VFT/MFT) are encoded by giving each edge and/or vertex a fresh
color of its own, see :func:`ColoredGraph.build`.

Colors are dense integers ``0..len(color_labels)-1``; ``color_labels`` maps
them back to the labels used in files.
"""
from __future__ import annotations

import enum
import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

INF = math.inf


class Setting(enum.Enum):
    EFT = "eft"
    VFT = "vft"
    MFT = "mft"
    ECFT = "ecft"
    VCFT = "vcft"
    MCFT = "mcft"
    LISTS = "lists"

    @property
    def colored(self) -> bool:
        return self in (Setting.ECFT, Setting.VCFT, Setting.MCFT, Setting.LISTS)

    @property
    def edge_faults(self) -> bool:
        return self in (Setting.EFT, Setting.MFT, Setting.ECFT, Setting.MCFT, Setting.LISTS)

    @property
    def vertex_faults(self) -> bool:
        return self in (Setting.VFT, Setting.MFT, Setting.VCFT, Setting.MCFT, Setting.LISTS)

    @classmethod
    def parse(cls, value: "str | Setting") -> "Setting":
        if isinstance(value, Setting):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown setting {value!r}") from None


def label_key(label: str):
    """Sort key putting integer-looking labels first, in numeric order."""
    s = str(label)
    if s.isdigit():
        return (0, int(s), "")
    return (1, 0, s)


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    weight: float
    colors: frozenset = frozenset()

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True, eq=False)
class ColoredGraph:
    """Immutable weighted multigraph with color lists on edges and vertices.

    Use :meth:`build` to construct one from labelled input; the raw
    constructor expects already-dense color ids and performs only light
    validation.
    """

    n: int
    vertex_colors: tuple  # tuple[frozenset[int], ...], one per vertex
    edges: tuple  # tuple[Edge, ...], sorted by id
    setting: Setting = Setting.LISTS
    color_labels: tuple = ()
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if len(self.vertex_colors) != self.n:
            raise ValueError("vertex_colors must have one entry per vertex")
        index = self._index
        for pos, e in enumerate(self.edges):
            if e.id in index:
                raise ValueError(f"duplicate edge id {e.id}")
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValueError(f"edge {e.id} has an endpoint outside 0..{self.n - 1}")
            if e.u == e.v:
                raise ValueError(f"edge {e.id} is a self-loop")
            if not (e.weight > 0 and math.isfinite(e.weight)):
                raise ValueError(f"edge {e.id} has non-positive or non-finite weight")
            index[e.id] = pos

    # construction -----------------------------------------------------------

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[Sequence],
        vertex_lists: Mapping[int, Iterable] | None = None,
        setting: "Setting | str" = Setting.LISTS,
    ) -> "ColoredGraph":
        """Build a graph from labelled data.

        ``edges`` holds ``(id, u, v, weight, labels)`` tuples (``labels`` may
        be omitted); ``vertex_lists`` maps vertex ids to color labels.  Labels
        are remapped to dense ids in :func:`label_key` order.  For the
        uncolored settings every edge/vertex gets a fresh color labelled
        ``e<id>`` / ``v<id>``, and any given lists must be empty.
        """
        setting = Setting.parse(setting)
        vertex_lists = dict(vertex_lists or {})
        raw_edges = []
        for item in edges:
            if len(item) == 4:
                eid, u, v, w = item
                labels = ()
            else:
                eid, u, v, w, labels = item
            raw_edges.append((int(eid), int(u), int(v), float(w), [str(c) for c in labels]))
        raw_vertices = {int(x): [str(c) for c in cs] for x, cs in vertex_lists.items()}
        for x in raw_vertices:
            if not 0 <= x < n:
                raise ValueError(f"vertex {x} outside 0..{n - 1}")

        if not setting.colored:
            if any(labels for *_, labels in raw_edges) or any(raw_vertices.values()):
                raise ValueError(f"setting {setting.value} takes no explicit colors")
            if setting in (Setting.EFT, Setting.MFT):
                raw_edges = [(eid, u, v, w, [f"e{eid}"]) for eid, u, v, w, _ in raw_edges]
            if setting in (Setting.VFT, Setting.MFT):
                raw_vertices = {x: [f"v{x}"] for x in range(n)}

        labels = set()
        for *_, cs in raw_edges:
            labels.update(cs)
        for cs in raw_vertices.values():
            labels.update(cs)
        order = sorted(labels, key=label_key)
        dense = {c: i for i, c in enumerate(order)}
        vcols = tuple(frozenset(dense[c] for c in raw_vertices.get(x, ())) for x in range(n))
        es = sorted(
            (Edge(eid, u, v, w, frozenset(dense[c] for c in cs)) for eid, u, v, w, cs in raw_edges),
            key=lambda e: e.id,
        )
        g = cls(n, vcols, tuple(es), setting, tuple(order))
        check_setting_shape(g)
        return g

    def with_edges(self, edges: Iterable[Edge]) -> "ColoredGraph":
        """Same vertices, lists and label table; the given edges (kept ids)."""
        return ColoredGraph(
            self.n,
            self.vertex_colors,
            tuple(sorted(edges, key=lambda e: e.id)),
            self.setting,
            self.color_labels,
        )

    def subgraph(self, edge_ids: Iterable[int]) -> "ColoredGraph":
        ids = set(edge_ids)
        missing = ids - self._index.keys()
        if missing:
            raise KeyError(f"unknown edge ids {sorted(missing)}")
        return self.with_edges(e for e in self.edges if e.id in ids)

    # accessors --------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge(self, eid: int) -> Edge:
        try:
            return self.edges[self._index[eid]]
        except KeyError:
            raise KeyError(f"unknown edge id {eid}") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._index

    @property
    def edge_ids(self) -> frozenset:
        return frozenset(self._index)

    @cached_property
    def palette(self) -> frozenset:
        """Colors appearing in at least one list of this graph."""
        out = set()
        for cs in self.vertex_colors:
            out |= cs
        for e in self.edges:
            out |= e.colors
        return frozenset(out)

    @property
    def universe(self) -> frozenset:
        """All colors of the label table, i.e. the fault universe."""
        return frozenset(range(len(self.color_labels)))

    @cached_property
    def damage_sets(self) -> dict:
        """Edge id -> colors whose failure removes the edge."""
        vc = self.vertex_colors
        return {e.id: e.colors | vc[e.u] | vc[e.v] for e in self.edges}

    @cached_property
    def adjacency(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.u].append(e)
            adj[e.v].append(e)
        return tuple(tuple(a) for a in adj)

    def list_sizes(self) -> tuple:
        """(max edge list size, max vertex list size)."""
        mu = max((len(e.colors) for e in self.edges), default=0)
        nu = max((len(c) for c in self.vertex_colors), default=0)
        return mu, nu

    def label(self, color: int) -> str:
        return self.color_labels[color]

    def labels(self, colors: Iterable[int]) -> list:
        return [self.color_labels[c] for c in sorted(colors)]

    def same_as(self, other: "ColoredGraph") -> bool:
        """Structural identity: vertices, lists (by label), edges, weights."""
        if self.n != other.n or self.setting != other.setting:
            return False

        def lab(g, cs):
            return frozenset(g.color_labels[c] for c in cs)

        if any(lab(self, a) != lab(other, b) for a, b in zip(self.vertex_colors, other.vertex_colors)):
            return False
        if len(self.edges) != len(other.edges):
            return False
        for a, b in zip(self.edges, other.edges):
            if (a.id, a.u, a.v, a.weight) != (b.id, b.u, b.v, b.weight):
                return False
            if lab(self, a.colors) != lab(other, b.colors):
                return False
        return True

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m}, setting={self.setting.value}, colors={len(self.color_labels)})"


def check_setting_shape(g: ColoredGraph) -> None:
    """Raise ValueError if list sizes do not match ``g.setting``."""
    s = g.setting
    if s == Setting.LISTS:
        return
    want_edge = 1 if s.edge_faults else 0
    want_vertex = 1 if s.vertex_faults else 0
    for e in g.edges:
        if len(e.colors) != want_edge:
            raise ValueError(f"edge {e.id}: {s.value} requires {want_edge} edge color(s), got {len(e.colors)}")
    for x, cs in enumerate(g.vertex_colors):
        if len(cs) != want_vertex:
            raise ValueError(f"vertex {x}: {s.value} requires {want_vertex} vertex color(s), got {len(cs)}")


# fault primitives -----------------------------------------------------------


def damages(g: ColoredGraph, fault: int, eid: int) -> bool:
    """True iff failing color ``fault`` removes edge ``eid``."""
    if not 0 <= fault < len(g.color_labels):
        raise KeyError(f"unknown fault element {fault}")
    return fault in g.damage_sets[g.edge(eid).id]


def subtract(g: ColoredGraph, faults: Iterable[int]) -> ColoredGraph:
    """G - S: drop every edge damaged by some color of ``faults``."""
    s = frozenset(faults)
    if not s:
        return g
    ds = g.damage_sets
    return g.with_edges(e for e in g.edges if not (ds[e.id] & s))


def restrict(g: ColoredGraph, keep: Iterable[int]) -> ColoredGraph:
    """G[S]: keep the edges that only colors of ``keep`` can damage."""
    s = frozenset(keep)
    ds = g.damage_sets
    return g.with_edges(e for e in g.edges if ds[e.id] <= s)


# distances ------------------------------------------------------------------


def _check_vertex(g: ColoredGraph, x: int) -> None:
    if not 0 <= x < g.n:
        raise KeyError(f"unknown vertex {x}")


def dijkstra(g: ColoredGraph, source: int, banned: frozenset = frozenset(), cutoff: float = INF) -> list:
    """Distances from ``source`` in G - banned; entries beyond cutoff are INF."""
    ds = g.damage_sets
    dist = [INF] * g.n
    dist[source] = 0.0
    heap = [(0.0, source)]
    adj = g.adjacency
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x]:
            continue
        for e in adj[x]:
            if banned and ds[e.id] & banned:
                continue
            nd = d + e.weight
            y = e.other(x)
            if nd < dist[y] and nd <= cutoff:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


def shortest_dist(g: ColoredGraph, u: int, v: int) -> float:
    _check_vertex(g, u)
    _check_vertex(g, v)
    return dijkstra(g, u)[v]


def shortest_path(g: ColoredGraph, u: int, v: int, banned: frozenset = frozenset(), cutoff: float = INF):
    """Return ``(dist, [edge, ...])`` for a lightest u-v path in G - banned.

    Only paths of weight <= cutoff are found; otherwise ``(INF, None)``.
    """
    ds = g.damage_sets
    dist = {u: 0.0}
    via = {}
    heap = [(0.0, u)]
    adj = g.adjacency
    done = set()
    while heap:
        d, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        if x == v:
            path = []
            while x != u:
                e = via[x]
                path.append(e)
                x = e.other(x)
            path.reverse()
            return d, path
        for e in adj[x]:
            if banned and ds[e.id] & banned:
                continue
            y = e.other(x)
            nd = d + e.weight
            if nd <= cutoff and nd < dist.get(y, INF):
                dist[y] = nd
                via[y] = e
                heapq.heappush(heap, (nd, y))
    return INF, None


def hop_path(g: ColoredGraph, u: int, v: int, banned: frozenset = frozenset(), max_hops: int | None = None):
    """Fewest-hop u-v path in G - banned, as a list of edges, or None.

    Among shortest paths the lexicographically smallest vertex sequence is
    returned, and among parallel edges the smallest id, so results do not
    depend on adjacency order.  ``max_hops`` bounds the search depth.
    """
    ds = g.damage_sets
    adj = g.adjacency
    if u == v:
        return []
    # BFS from v gives hop distance to v, then walk greedily from u.
    dv = {v: 0}
    frontier = deque([v])
    while frontier:
        x = frontier.popleft()
        if x == u:
            break
        if max_hops is not None and dv[x] >= max_hops:
            continue
        for e in adj[x]:
            if banned and ds[e.id] & banned:
                continue
            y = e.other(x)
            if y not in dv:
                dv[y] = dv[x] + 1
                frontier.append(y)
    if u not in dv:
        return None
    path = []
    x = u
    while x != v:
        best = None
        for e in adj[x]:
            if banned and ds[e.id] & banned:
                continue
            y = e.other(x)
            if dv.get(y, INF) == dv[x] - 1:
                key = (y, e.id)
                if best is None or key < best[0]:
                    best = (key, e)
        e = best[1]
        path.append(e)
        x = e.other(x)
    return path


def components(g: ColoredGraph, banned: frozenset = frozenset()) -> list:
    """Component label per vertex of G - banned (labels are smallest member)."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ds = g.damage_sets
    for e in g.edges:
        if banned and ds[e.id] & banned:
            continue
        a, b = find(e.u), find(e.v)
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    return [find(x) for x in range(g.n)]


def girth(g: ColoredGraph) -> float:
    """Number of edges on a shortest cycle; INF for forests.

    Parallel edges count as a 2-cycle.
    """
    seen = set()
    for e in g.edges:
        key = (min(e.u, e.v), max(e.u, e.v))
        if key in seen:
            return 2
        seen.add(key)
    best = INF
    adj = g.adjacency
    for root in range(g.n):
        depth = {root: 0}
        parent_edge = {root: None}
        q = deque([root])
        while q:
            x = q.popleft()
            if 2 * depth[x] + 1 >= best:
                break
            for e in adj[x]:
                if e.id == parent_edge[x]:
                    continue
                y = e.other(x)
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent_edge[y] = e.id
                    q.append(y)
                else:
                    best = min(best, depth[x] + depth[y] + 1)
    return best
