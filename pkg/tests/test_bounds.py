import math

import pytest
from hypothesis import given, settings

from domset.bounds import (HALF_DEGREE_MAX_DELTA, evaluate_bounds, gamma_bounds, parekh_bound,
                           piecewise_by_degree, piecewise_by_gamma, ratio_by_degree,
                           ratio_half_degree, chvatal_ratio)
from domset.errors import GraphError
from domset.generators import cycle, fixture, path, star
from domset.graph import Graph
from domset.oracle import exact_gamma

from strategies import connected_graphs
from suite import brute_gamma


def test_p5_report():
    r = evaluate_bounds(path(5), 3, 2, gamma=2)
    assert r.parekh_bound == pytest.approx(3.0)
    assert r.half_degree_ratio == pytest.approx(1.5)
    assert r.purified_ratio == pytest.approx(1.0)
    assert r.greedy_ratio == pytest.approx(1.5)
    assert r.as_dict()["gamma"] == 2


def test_ring_parekh_bound():
    G = fixture("fig5a-ring")
    assert (G.n, G.m) == (15, 24)
    assert parekh_bound(G.n, G.m) == pytest.approx(9.0)


def test_degree_piecewise_crossover():
    assert piecewise_by_degree(4) == pytest.approx(2.5)
    assert piecewise_by_degree(5) == pytest.approx(math.log(6) + 1)
    assert piecewise_by_degree(5) == pytest.approx(2.792, abs=1e-3)


def test_crossover_constant_is_where_half_degree_stops_winning():
    for d in range(0, 40):
        assert (ratio_half_degree(d) <= ratio_by_degree(d)) == (d <= HALF_DEGREE_MAX_DELTA)


@pytest.mark.parametrize("G, bounds", [(path(5), (2, 2)), (star(4), (1, 1)), (cycle(4), (2, 2))])
def test_gamma_bounds_examples(G, bounds):
    assert gamma_bounds(G) == bounds


def test_gamma_bounds_single_vertex():
    assert gamma_bounds(Graph.from_edge_list(1, [])) == (1, 1)


def test_gamma_bounds_disconnected():
    with pytest.raises(GraphError):
        gamma_bounds(Graph.from_edge_list(4, [(0, 1), (2, 3)]))


def test_chvatal_form_needs_gamma_two():
    assert chvatal_ratio(10, 1) is None
    assert chvatal_ratio(4, 2) == pytest.approx(math.log(2) / (2 * math.log(2)) + 1)


def test_impossible_gamma_rejected():
    with pytest.raises(GraphError):
        evaluate_bounds(path(4), 2, 2, gamma=0)
    with pytest.raises(GraphError):
        evaluate_bounds(path(4), 2, 2, gamma=5)


def test_report_without_gamma_leaves_gamma_fields_empty():
    r = evaluate_bounds(path(4), 2, 2)
    assert r.gamma is r.log_gamma_ratio is r.piecewise_b is r.greedy_ratio is None


@settings(max_examples=200, deadline=None)
@given(connected_graphs(max_n=10))
def test_gamma_bounds_bracket_gamma(G):
    lo, hi = gamma_bounds(G)
    assert lo <= brute_gamma(G) <= hi


@settings(max_examples=200, deadline=None)
@given(connected_graphs(min_n=2, max_n=12))
def test_report_consistency(G):
    gamma = exact_gamma(G).gamma
    r = evaluate_bounds(G, gamma, gamma, gamma)
    delta = G.max_degree
    assert r.log_gamma_ratio == pytest.approx(math.log(G.n / gamma) + 1)
    if gamma >= G.n / (delta + 1):
        assert r.log_gamma_ratio <= r.log_degree_ratio + 1e-12
    assert r.piecewise_a == (r.half_degree_ratio if delta <= 4 else r.log_degree_ratio)
    assert r.piecewise_b == (r.half_degree_ratio if G.n >= gamma * math.exp((delta - 1) / 2) else r.log_gamma_ratio)
    assert piecewise_by_gamma(G.n, gamma, delta) == r.piecewise_b
