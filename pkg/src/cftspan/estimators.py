"""Estimator-style wrappers so spanner builders compose with sklearn tooling.

``fit`` builds the spanner of a graph; ``transform`` maps a graph onto the
fitted spanner's edge ids; ``score`` runs the brute-force verifier.
"""
from __future__ import annotations

import numbers

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import ColoredGraph
from .greedy import DEFAULT_MAX_NODES, build_ft_greedy
from .modified import build_modified_greedy
from .oracle import build_certificate, verify_certificate, verify_ft_spanner


def check_graph(g) -> ColoredGraph:
    if not isinstance(g, ColoredGraph):
        raise TypeError(f"expected a ColoredGraph, got {type(g).__name__}")
    return g


def check_int_param(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


class _SpannerBase(TransformerMixin, BaseEstimator):
    def _build(self, g):
        raise NotImplementedError

    def fit(self, X, y=None):
        g = check_graph(X)
        self.report_ = self._build(g)
        self.spanner_ = self.report_.spanner
        self.blocking_set_ = self.report_.blocking
        self.n_vertices_ = g.n
        return self

    def transform(self, X):
        check_is_fitted(self, "spanner_")
        g = check_graph(X)
        if g.n != self.n_vertices_:
            raise ValueError(f"graph has {g.n} vertices, spanner was fitted on {self.n_vertices_}")
        keep = self.spanner_.edge_ids
        return g.with_edges(e for e in g.edges if e.id in keep)

    @property
    def compression_(self) -> float:
        check_is_fitted(self, "spanner_")
        total = self.report_.stats.edges_examined
        return self.spanner_.m / total if total else 1.0


class FTGreedySpanner(_SpannerBase):
    """Exact greedy f-fault-tolerant (2k-1)-spanner (exponential in f)."""

    def __init__(self, k=2, f=1, max_nodes=DEFAULT_MAX_NODES, exhaustive=False):
        self.k = k
        self.f = f
        self.max_nodes = max_nodes
        self.exhaustive = exhaustive

    def _build(self, g):
        k = check_int_param(self.k, "k", 1)
        f = check_int_param(self.f, "f", 0)
        return build_ft_greedy(g, k, f, exhaustive=self.exhaustive, max_nodes=self.max_nodes)

    def score(self, X, y=None):
        """1.0 if the fitted spanner passes the exhaustive check on X, else 0.0."""
        check_is_fitted(self, "spanner_")
        return float(verify_ft_spanner(check_graph(X), self.transform(X), self.k, self.f).ok)


class ModifiedGreedySpanner(FTGreedySpanner):
    """Polynomial-time greedy spanner based on the replaceability test."""

    def __init__(self, k=2, f=1):
        self.k = k
        self.f = f

    def _build(self, g):
        k = check_int_param(self.k, "k", 1)
        f = check_int_param(self.f, "f", 0)
        return build_modified_greedy(g, k, f)


class ConnectivityCertificate(_SpannerBase):
    """Subgraph preserving connectivity under any ``lam`` color faults."""

    def __init__(self, lam=1):
        self.lam = lam

    def _build(self, g):
        return build_certificate(g, check_int_param(self.lam, "lam", 1))

    def score(self, X, y=None):
        check_is_fitted(self, "spanner_")
        return float(verify_certificate(check_graph(X), self.transform(X), self.lam).ok)
