"""Brute-force oracles over all small fault sets, plus the blocked-subgraph sampler."""
from __future__ import annotations

import itertools
import math
import os
import random
from dataclasses import dataclass

from .graph import INF, ColoredGraph, components, dijkstra, girth, restrict
from .greedy import BlockingSet, BudgetExceeded, BuildReport
from .modified import build_modified_greedy

DEFAULT_BUDGET = 10_000_000


def default_budget() -> int:
    env = os.environ.get("CFT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class VerifyOutcome:
    ok: bool
    faults: frozenset | None = None
    pair: tuple | None = None
    dist_h: float | None = None
    dist_g: float | None = None

    def __bool__(self) -> bool:
        return self.ok


def fault_sets(colors, f: int):
    """All subsets of ``colors`` of size <= f: sizes ascending, each size in colex order."""
    cs = sorted(colors)
    for size in range(f + 1):
        combos = list(itertools.combinations(cs, size))
        combos.sort(key=lambda t: tuple(reversed(t)))
        for combo in combos:
            yield frozenset(combo)


def count_fault_sets(p: int, f: int) -> int:
    return sum(math.comb(p, i) for i in range(min(f, p) + 1))


def _check_subgraph(g: ColoredGraph, h: ColoredGraph) -> None:
    if h.n != g.n:
        raise ValueError("spanner and graph have different vertex counts")
    for e in h.edges:
        if not g.has_edge(e.id):
            raise ValueError(f"spanner edge {e.id} is not an edge of the graph")
        o = g.edge(e.id)
        if (o.u, o.v, o.weight) != (e.u, e.v, e.weight) and (o.v, o.u, o.weight) != (e.u, e.v, e.weight):
            raise ValueError(f"spanner edge {e.id} differs from the graph's edge {e.id}")


def _guard(n: int, universe, f: int, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    cost = count_fault_sets(len(universe), f) * max(n * (n - 1) // 2, 1)
    if cost > budget:
        raise BudgetExceeded(f"{cost} (fault set x pair) evaluations exceed budget {budget}")


def verify_ft_spanner(
    g: ColoredGraph, h: ColoredGraph, k: int, f: int, *, palette=None, budget: int | None = None
) -> VerifyOutcome:
    """Check dist_{H-F}(u,v) <= (2k-1) dist_{G-F}(u,v) for all |F| <= f and all pairs.

    ``palette`` narrows the enumerated fault universe (default: every color
    of ``g``).  Raises :class:`BudgetExceeded` rather than answering when the
    enumeration is too large.
    """
    _check_subgraph(g, h)
    universe = g.universe if palette is None else frozenset(palette)
    _guard(g.n, universe, f, budget)
    stretch = 2 * k - 1
    for fs in fault_sets(universe, f):
        for u in range(g.n):
            dg = dijkstra(g, u, fs)
            dh = None
            for v in range(u + 1, g.n):
                if dg[v] == INF:
                    continue
                if dh is None:
                    dh = dijkstra(h, u, fs)
                if dh[v] > stretch * dg[v]:
                    return VerifyOutcome(False, fs, (u, v), dh[v], dg[v])
    return VerifyOutcome(True)


def verify_certificate(
    g: ColoredGraph, h: ColoredGraph, lam: int, *, palette=None, budget: int | None = None
) -> VerifyOutcome:
    """Check that H-C and G-C have the same connected pairs for all |C| <= lam."""
    _check_subgraph(g, h)
    universe = g.universe if palette is None else frozenset(palette)
    _guard(g.n, universe, lam, budget)
    for cs in fault_sets(universe, lam):
        cg = components(g, cs)
        ch = components(h, cs)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if cg[u] == cg[v] and ch[u] != ch[v]:
                    return VerifyOutcome(False, cs, (u, v), INF, dijkstra(g, u, cs)[v])
    return VerifyOutcome(True)


def certificate_k(n: int) -> int:
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


def build_certificate(g: ColoredGraph, lam: int) -> BuildReport:
    """Sparse lam-fault connectivity certificate via a (2k-1)-spanner with k = ceil(log2 n)."""
    if lam < 1:
        raise ValueError("lambda must be >= 1")
    return build_modified_greedy(g, certificate_k(g.n), lam)


def sample_faults(universe, p: float, seed: int) -> frozenset:
    rng = random.Random(seed)
    return frozenset(c for c in sorted(universe) if rng.random() < p)


def sample_blocked_subgraph(h: ColoredGraph, b: BlockingSet, p: float, seed: int) -> ColoredGraph:
    """H[S] minus every edge of a pair (e, x) in B with x in S.

    Each color of the fault universe joins S independently with probability p.
    """
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    s = sample_faults(h.universe, p, seed)
    hs = restrict(h, s)
    blocked = {eid for eid, x in b.pairs if x in s and hs.has_edge(eid)}
    return hs.with_edges(e for e in hs.edges if e.id not in blocked)


def blocked_girth_holds(h: ColoredGraph, b: BlockingSet, k: int, p: float, seeds) -> bool:
    return all(girth(sample_blocked_subgraph(h, b, p, s)) >= 2 * k + 1 for s in seeds)


def hop_bounded_dist(g: ColoredGraph, u: int, v: int, hops: int, banned: frozenset = frozenset()) -> float:
    """Lightest u-v walk with at most ``hops`` edges in G - banned."""
    ds = g.damage_sets
    dist = [INF] * g.n
    dist[u] = 0.0
    for _ in range(hops):
        nxt = list(dist)
        for e in g.edges:
            if banned and ds[e.id] & banned:
                continue
            a, b = e.u, e.v
            if dist[a] + e.weight < nxt[b]:
                nxt[b] = dist[a] + e.weight
            if dist[b] + e.weight < nxt[a]:
                nxt[a] = dist[b] + e.weight
        dist = nxt
    return dist[v]


def replay_discards(g: ColoredGraph, report: BuildReport, *, budget: int | None = None) -> list:
    """Replay a build and check every discarded edge was safe to drop.

    For each discarded e and each F (|F| <= f, not damaging e), the edges kept
    before e must hold a u-v path of <= 2k-1 hops and weight <= (2k-1)w(e).
    Returns the offending ``(edge id, F)`` pairs; empty means the replay passed.
    """
    k, f = report.k, report.f
    stretch = 2 * k - 1
    budget = default_budget() if budget is None else budget
    kept_before = []
    bad = []
    spent = 0
    for eid in report.order:
        e = g.edge(eid)
        if report.spanner.has_edge(eid):
            kept_before.append(e)
            continue
        h = g.with_edges(kept_before)
        universe = g.universe - g.damage_sets[eid]
        spent += count_fault_sets(len(universe), f)
        if spent > budget:
            raise BudgetExceeded(f"replay exceeded budget {budget}")
        for fs in fault_sets(universe, f):
            if hop_bounded_dist(h, e.u, e.v, stretch, fs) > stretch * e.weight:
                bad.append((eid, fs))
                break
    return bad
