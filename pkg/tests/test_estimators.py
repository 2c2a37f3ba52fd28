import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from cftspan import ConnectivityCertificate, FTGreedySpanner, ModifiedGreedySpanner, build_ft_greedy
from cftspan.random_graphs import random_colored_graph

from conftest import cycle_graph


def test_get_set_params_and_clone():
    est = FTGreedySpanner(k=3, f=2)
    assert est.get_params()["k"] == 3
    est.set_params(f=1)
    assert clone(est).get_params()["f"] == 1
    assert ModifiedGreedySpanner().get_params() == {"k": 2, "f": 1}
    assert ConnectivityCertificate(lam=2).get_params() == {"lam": 2}


def test_fit_transform_matches_function():
    g = random_colored_graph(8, 0.5, "ecft", seed=3)
    est = FTGreedySpanner(k=2, f=1).fit(g)
    assert est.spanner_.edge_ids == build_ft_greedy(g, 2, 1).spanner.edge_ids
    assert est.transform(g).edge_ids == est.spanner_.edge_ids
    assert est.fit_transform(g).edge_ids == est.spanner_.edge_ids
    assert est.score(g) == 1.0
    assert 0 < est.compression_ <= 1


def test_modified_and_certificate_score():
    g = random_colored_graph(8, 0.6, "mcft", seed=9, edge_palette=4, vertex_palette=3)
    assert ModifiedGreedySpanner(k=2, f=1).fit(g).score(g) == 1.0
    assert ConnectivityCertificate(lam=1).fit(g).score(g) == 1.0


def test_not_fitted():
    with pytest.raises(NotFittedError):
        FTGreedySpanner().transform(cycle_graph(4))


@pytest.mark.parametrize("params", [{"k": 0}, {"f": -1}, {"k": 1.5}, {"k": True}])
def test_invalid_params(params):
    with pytest.raises((ValueError, TypeError)):
        FTGreedySpanner(**params).fit(cycle_graph(4))


def test_rejects_non_graph():
    with pytest.raises(TypeError):
        FTGreedySpanner().fit([[0, 1]])


def test_transform_checks_vertex_count():
    est = FTGreedySpanner().fit(cycle_graph(4))
    with pytest.raises(ValueError):
        est.transform(cycle_graph(5))
