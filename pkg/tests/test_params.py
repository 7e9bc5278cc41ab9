import math

import networkx as nx
import pytest
from hypothesis import given

from largecycles.enumerate import enumerate_graphs
from largecycles.families import FamilySpec, build_family
from largecycles.graph import (
    INFINITY, EmptyGraphError, complete_graph, cycle_graph, empty_graph, path_graph,
    petersen_graph, star_graph,
)
from largecycles.params import (
    graph_params, independence_number, min_degree, sigma_k, vertex_connectivity,
)

import oracles
from conftest import graphs

F14 = build_family(FamilySpec(1, 4))  # 5K_1 + K_4


def test_min_degree_examples():
    assert min_degree(complete_graph(4)) == 3
    assert min_degree(F14) == 4
    assert min_degree(petersen_graph()) == 3
    with pytest.raises(EmptyGraphError):
        min_degree(empty_graph(0))


def test_connectivity_examples():
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(F14) == 4
    assert vertex_connectivity(path_graph(4)) == 1
    assert vertex_connectivity(petersen_graph()) == 3
    assert vertex_connectivity(empty_graph(3)) == 0
    assert vertex_connectivity(empty_graph(1)) == 0


def test_independence_examples():
    assert independence_number(cycle_graph(5)) == 2
    assert independence_number(complete_graph(6)) == 1
    assert independence_number(star_graph(3)) == 3


def test_sigma_examples():
    assert sigma_k(cycle_graph(5), 2) == 4
    assert sigma_k(star_graph(3), 4) == INFINITY
    assert math.isinf(sigma_k(star_graph(3), 4))
    assert sigma_k(F14, 3) == 12


def test_params_bundle():
    p = graph_params(F14)
    assert (p.n, p.delta, p.kappa, p.alpha) == (9, 4, 4, 5)
    assert p.sigma == (4, 8, 12, 16, 20)
    assert p.sigma_at(6) == INFINITY


@pytest.mark.parametrize("n", range(1, 7))
def test_against_brute_force_on_all_small_graphs(n):
    for g in enumerate_graphs(n):
        h = oracles.to_nx(g)
        assert vertex_connectivity(g) == oracles.connectivity(h)
        alpha = independence_number(g)
        assert alpha == oracles.independence(h)
        for k in range(1, alpha + 2):
            assert sigma_k(g, k) == oracles.sigma(h, k)


@given(graphs(min_n=2, max_n=11))
def test_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(oracles.to_nx(g))


@given(graphs(min_n=1, max_n=10))
def test_sigma_monotone_and_bounded(g):
    p = graph_params(g)
    # kappa <= delta, and sigma_k grows with k up to alpha
    assert p.kappa <= p.delta
    assert list(p.sigma) == sorted(p.sigma)
    assert all(s >= k * p.delta for k, s in enumerate(p.sigma, 1))
    assert len(p.sigma) == p.alpha
