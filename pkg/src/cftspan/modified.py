"""Polynomial-time modified greedy spanner driven by a replaceability test."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import ColoredGraph, hop_path
from .greedy import BlockingSet, BuildReport, BuildStats, processing_order


@dataclass(frozen=True)
class ReplaceabilityResult:
    replaceable: bool
    blame: frozenset = frozenset()
    paths_found: int = 0
    paths: tuple = ()  # tuple of edge-id tuples, one per path found
    color_sets: tuple = ()  # colors removed after each path


def path_colors(h: ColoredGraph, path) -> frozenset:
    """All colors on a path: edge lists plus every vertex list, endpoints included."""
    out = set()
    for e in path:
        out |= e.colors | h.vertex_colors[e.u] | h.vertex_colors[e.v]
    return frozenset(out)


def is_replaceable(h: ColoredGraph, edge, k: int, f: int, stats: BuildStats | None = None) -> ReplaceabilityResult:
    """Look for f+1 short u-v paths whose non-e-damaging colors are disjoint.

    Paths are fewest-hop paths in H minus the colors collected so far.  A path
    of at least 2k hops (or none) stops the search and the collected colors
    become the blame set.
    """
    u, v = edge.u, edge.v
    damaging = edge.colors | h.vertex_colors[u] | h.vertex_colors[v]
    removed = frozenset()
    paths = []
    color_sets = []
    for _ in range(f + 1):
        if stats is not None:
            stats.path_queries += 1
        path = hop_path(h, u, v, removed, max_hops=2 * k - 1)
        if path is None or len(path) >= 2 * k:
            return ReplaceabilityResult(False, removed, len(paths), tuple(paths), tuple(color_sets))
        cs = path_colors(h, path) - damaging
        paths.append(tuple(e.id for e in path))
        color_sets.append(cs)
        removed = removed | cs
    return ReplaceabilityResult(True, frozenset(), len(paths), tuple(paths), tuple(color_sets))


def build_modified_greedy(g: ColoredGraph, k: int, f: int) -> BuildReport:
    """Keep each edge, in (weight, id) order, unless it is replaceable."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if f < 0:
        raise ValueError("f must be >= 0")
    start = time.perf_counter()
    stats = BuildStats()
    kept = []
    provenance = {}
    order = processing_order(g)
    h = g.with_edges(())
    for e in order:
        stats.edges_examined += 1
        res = is_replaceable(h, e, k, f, stats)
        if not res.replaceable:
            kept.append(e)
            provenance[e.id] = res.blame
            h = g.with_edges(kept)
    stats.edges_kept = len(kept)
    stats.time_ms = (time.perf_counter() - start) * 1000
    return BuildReport(
        spanner=h,
        blocking=BlockingSet.from_provenance(provenance),
        algorithm="modified",
        k=k,
        f=f,
        order=tuple(e.id for e in order),
        stats=stats,
    )


def blame_limit(g: ColoredGraph, k: int, f: int) -> int:
    """Largest possible blame set: f paths of <= 2k-1 edges and 2k vertices.

    Equals 4kf when lists have at most one color; longer lists raise it.
    """
    mu, nu = g.list_sizes()
    return max(4 * k * f, f * ((2 * k - 1) * mu + 2 * k * nu))


def blame_bound_check(report: BuildReport, k: int, f: int, limit: int | None = None) -> bool:
    """True iff every recorded blame set has at most ``limit`` colors (default 4kf)."""
    if limit is None:
        limit = 4 * k * f
    return all(len(b) <= limit for b in report.blocking.provenance.values())
