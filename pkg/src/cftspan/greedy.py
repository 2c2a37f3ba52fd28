"""Exact fault-tolerant greedy spanner and its blocking sets."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .graph import ColoredGraph, INF, shortest_path, subtract, dijkstra

DEFAULT_MAX_NODES = 1_000_000


class BudgetExceeded(RuntimeError):
    """A search or enumeration hit its configured cap."""


@dataclass(frozen=True)
class BlockingSet:
    pairs: frozenset  # {(edge id, color)}
    provenance: dict  # edge id -> frozenset of colors

    @classmethod
    def from_provenance(cls, provenance: dict) -> "BlockingSet":
        prov = {eid: frozenset(fs) for eid, fs in provenance.items()}
        pairs = frozenset((eid, c) for eid, fs in prov.items() for c in fs)
        return cls(pairs, prov)

    def __len__(self) -> int:
        return len(self.pairs)

    def max_per_edge(self) -> int:
        return max((len(fs) for fs in self.provenance.values()), default=0)


@dataclass
class BuildStats:
    edges_examined: int = 0
    edges_kept: int = 0
    search_nodes: int = 0
    path_queries: int = 0
    time_ms: float = 0.0


@dataclass
class BuildReport:
    spanner: ColoredGraph
    blocking: BlockingSet
    algorithm: str
    k: int
    f: int
    order: tuple = ()  # edge ids in processing order
    stats: BuildStats = field(default_factory=BuildStats)

    @property
    def max_blame(self) -> int:
        return self.blocking.max_per_edge()


def processing_order(g: ColoredGraph) -> list:
    """Edges by increasing weight, ties by ascending id."""
    return sorted(g.edges, key=lambda e: (e.weight, e.id))


def find_separating_fault_set(
    h: ColoredGraph,
    edge,
    f: int,
    threshold: float,
    *,
    palette=None,
    exhaustive: bool = False,
    max_nodes: int | None = DEFAULT_MAX_NODES,
    stats: BuildStats | None = None,
):
    """Find F, |F| <= f, not damaging ``edge``, with dist_{H-F}(u,v) > threshold.

    Returns a frozenset of colors or None when no such F exists.  The default
    strategy branches on the colors of a current short u-v path, since every
    witness has to hit each path of weight <= threshold.  Branches are
    explored in ascending color order, so the returned witness is
    deterministic.  ``exhaustive=True`` instead enumerates every subset of
    ``palette`` (default: the colors of ``h`` plus those of the edge).
    """
    u, v = edge.u, edge.v
    forbidden = edge.colors | h.vertex_colors[u] | h.vertex_colors[v]
    stats = stats if stats is not None else BuildStats()

    if exhaustive:
        if palette is None:
            palette = h.palette | forbidden
        candidates = sorted(set(palette) - forbidden)
        for size in range(f + 1):
            for combo in itertools.combinations(candidates, size):
                stats.search_nodes += 1
                if max_nodes is not None and stats.search_nodes > max_nodes:
                    raise BudgetExceeded(f"fault-set search exceeded {max_nodes} nodes")
                fs = frozenset(combo)
                stats.path_queries += 1
                if dijkstra(h, u, fs, cutoff=threshold)[v] > threshold:
                    return fs
        return None

    seen = set()
    ds = h.damage_sets

    def search(partial: frozenset):
        if partial in seen:
            return None
        seen.add(partial)
        stats.search_nodes += 1
        if max_nodes is not None and stats.search_nodes > max_nodes:
            raise BudgetExceeded(f"fault-set search exceeded {max_nodes} nodes")
        stats.path_queries += 1
        dist, path = shortest_path(h, u, v, partial, cutoff=threshold)
        if dist > threshold:
            return partial
        if len(partial) >= f:
            return None
        branch = set()
        for e in path:
            branch |= ds[e.id]
        for c in sorted(branch - forbidden):
            found = search(partial | {c})
            if found is not None:
                return found
        return None

    return search(frozenset())


def build_ft_greedy(
    g: ColoredGraph,
    k: int,
    f: int,
    *,
    exhaustive: bool = False,
    max_nodes: int | None = DEFAULT_MAX_NODES,
) -> BuildReport:
    """Greedy f-fault-tolerant (2k-1)-spanner with exact witness search.

    ``max_nodes`` caps the search nodes spent on any single edge.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if f < 0:
        raise ValueError("f must be >= 0")
    start = time.perf_counter()
    stats = BuildStats()
    stretch = 2 * k - 1
    kept = []
    provenance = {}
    order = processing_order(g)
    h = g.with_edges(())
    for e in order:
        stats.edges_examined += 1
        per_edge = BuildStats()
        witness = find_separating_fault_set(
            h, e, f, stretch * e.weight,
            palette=g.universe, exhaustive=exhaustive, max_nodes=max_nodes, stats=per_edge,
        )
        stats.search_nodes += per_edge.search_nodes
        stats.path_queries += per_edge.path_queries
        if witness is not None:
            kept.append(e)
            provenance[e.id] = witness
            h = g.with_edges(kept)
    stats.edges_kept = len(kept)
    stats.time_ms = (time.perf_counter() - start) * 1000
    return BuildReport(
        spanner=h,
        blocking=BlockingSet.from_provenance(provenance),
        algorithm="greedy",
        k=k,
        f=f,
        order=tuple(e.id for e in order),
        stats=stats,
    )


def extract_blocking_set(report: BuildReport, k: int | None = None) -> BlockingSet:
    """Pairs (e, x) for every kept edge e and every x in its witness set."""
    if k is not None and k != report.k:
        raise ValueError(f"report was built with k={report.k}, not k={k}")
    prov = report.blocking.provenance
    missing = report.spanner.edge_ids - prov.keys()
    if missing:
        raise ValueError(f"no recorded witness for kept edges {sorted(missing)}")
    return BlockingSet.from_provenance({eid: prov[eid] for eid in report.spanner.edge_ids})


def short_cycles(h: ColoredGraph, max_len: int):
    """Yield every simple cycle of <= max_len edges once, as a tuple of edges.

    Each cycle is rooted at its smallest vertex and only found in the
    orientation whose first edge id is smaller than its last.
    """
    adj = h.adjacency
    for root in range(h.n):
        stack = [(root, (), frozenset([root]))]
        while stack:
            x, path, on_path = stack.pop()
            for e in adj[x]:
                y = e.other(x)
                if path and e.id == path[-1].id:
                    continue
                if y == root:
                    if path and path[0].id < e.id and len(path) + 1 <= max_len:
                        yield path + (e,)
                    continue
                if y < root or y in on_path or len(path) + 1 >= max_len:
                    continue
                stack.append((y, path + (e,), on_path | {y}))


@dataclass
class BlockingCheck:
    ok: bool
    bad_pair: tuple | None = None
    bad_cycle: tuple | None = None  # edge ids

    def __bool__(self) -> bool:
        return self.ok


def verify_blocking_set(h: ColoredGraph, b: BlockingSet, k: int) -> BlockingCheck:
    """Check both blocking-set conditions by enumerating cycles of <= 2k edges."""
    ds = h.damage_sets
    by_edge = {}
    for eid, x in sorted(b.pairs):
        if not h.has_edge(eid) or x in ds[eid]:
            return BlockingCheck(False, bad_pair=(eid, x))
        by_edge.setdefault(eid, set()).add(x)
    for cycle in short_cycles(h, 2 * k):
        ids = [e.id for e in cycle]
        if not _cycle_blocked(ids, by_edge, ds):
            return BlockingCheck(False, bad_cycle=tuple(ids))
    return BlockingCheck(True)


def _cycle_blocked(ids, by_edge, ds) -> bool:
    for eid in ids:
        for x in by_edge.get(eid, ()):
            if any(x in ds[other] for other in ids if other != eid):
                return True
    return False


def replay_witnesses(g: ColoredGraph, report: BuildReport) -> list:
    """Re-check every recorded witness against the spanner as it stood.

    Returns the ids of kept edges whose witness does not separate their
    endpoints beyond (2k-1)w(e) in the partial spanner; empty means valid.
    """
    stretch = 2 * report.k - 1
    kept_before = []
    bad = []
    prov = report.blocking.provenance
    for eid in report.order:
        if not report.spanner.has_edge(eid):
            continue
        e = g.edge(eid)
        fs = prov.get(eid)
        h = g.with_edges(kept_before)
        if fs is None or len(fs) > report.f or fs & g.damage_sets[eid]:
            bad.append(eid)
        elif dijkstra(subtract(h, fs), e.u)[e.v] <= stretch * e.weight:
            bad.append(eid)
        kept_before.append(e)
    return bad
