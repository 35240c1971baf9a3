import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domset.errors import GraphError
from domset.generators import cycle, fixture, path, star
from domset.graph import is_independent
from domset.greedy import (TIE_BREAKS, active_degree, certificates, certify_independent_partition,
                           certify_size_two, greedy_dominating_set, tied_pair_emptiness)
from domset.oracle import exact_gamma

from strategies import graphs
from suite import dominates


def test_active_degree_examples():
    P4 = path(4)
    assert active_degree(P4, {0, 1, 2}, {1}, 2) == 1
    assert active_degree(P4, {0, 1, 2}, {1}, 3) == 0
    assert active_degree(P4, set(), set(), 1) == 2


def test_active_degree_rejects_selected_vertex():
    with pytest.raises(GraphError):
        active_degree(path(4), {0, 1, 2}, {1}, 1)


def test_star_takes_center():
    t = greedy_dominating_set(star(4))
    assert t.order == (0,)
    assert t.coverage == (frozenset(range(5)),)


def test_p5_trace():
    t = greedy_dominating_set(path(5))
    assert t.order == (1, 2, 3)
    assert t.coverage == (frozenset({0, 1, 2}), frozenset({3}), frozenset({4}))
    assert t.step_of == {1: 0, 2: 1, 3: 2}
    assert t.covered_at[4] == 2


def test_counterexample_fixture_takes_three():
    G = fixture("fig3-counter")
    t = greedy_dominating_set(G)
    assert sorted(G.label(v) for v in t.order) == [1, 2, 3]


def test_spider_takes_thirteen():
    G = fixture("fig1-spider")
    t = greedy_dominating_set(G)
    assert len(t) == 13 > G.n // 2
    assert {G.label(v) for v in t.order} == {"x1"} | {f"q{i}" for i in range(1, 5)} \
        | {f"p{i}" for i in range(1, 9)}


def test_isolated_vertices_join_one_by_one():
    from domset.graph import Graph
    G = Graph.from_edge_list(4, [(0, 1)])
    t = greedy_dominating_set(G)
    assert t.order == (0, 2, 3)


def test_unknown_tie_break():
    with pytest.raises(GraphError):
        greedy_dominating_set(path(3), "sideways")


def test_max_index_tie_break_mirrors_path():
    assert greedy_dominating_set(path(5), "max-index").order == (3, 2, 1)


def test_random_tie_break_is_seeded():
    G = cycle(9)
    a = greedy_dominating_set(G, "random", seed=3)
    b = greedy_dominating_set(G, "random", seed=3)
    assert a == b


def test_size_two_certificate():
    t = greedy_dominating_set(star(4))
    assert certify_size_two(t).granted
    c4 = greedy_dominating_set(cycle(4))
    assert set(c4.order) == {0, 1}
    assert certify_size_two(c4).granted
    assert exact_gamma(cycle(4)).gamma == 2
    assert not certify_size_two(greedy_dominating_set(path(5))).granted


def test_independent_partition_certificate():
    S4 = star(4)
    assert certify_independent_partition(S4, greedy_dominating_set(S4)).granted
    G = fixture("fig3-counter")
    c = certify_independent_partition(G, greedy_dominating_set(G))
    assert not c.granted and c.detail["reason"] == "shared neighbor"
    P5 = path(5)
    assert not certify_independent_partition(P5, greedy_dominating_set(P5)).granted


def test_no_certificate_on_counterexample():
    G = fixture("fig3-counter")
    assert certificates(G, greedy_dominating_set(G)) == []


def test_tied_pair_emptiness_examples():
    for G, expected in [(star(4), True), (path(5), False), (fixture("fig3-counter"), True)]:
        assert tied_pair_emptiness(G, greedy_dominating_set(G)) is expected


@settings(max_examples=150)
@given(graphs(), st.sampled_from(TIE_BREAKS), st.integers(0, 99))
def test_trace_invariants(G, tie, seed):
    t = greedy_dominating_set(G, tie, seed)
    seen = set()
    for v, cov in zip(t.order, t.coverage):
        assert v in cov or v in seen
        assert not (cov & seen)
        seen |= cov
    assert seen == set(G.vertices())
    assert dominates(G, t.order)
    assert len(set(t.order)) == len(t.order)


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_each_step_picks_a_maximum_active_degree(G):
    t = greedy_dominating_set(G)
    covered, chosen = set(), set()
    for v, cov in zip(t.order, t.coverage):
        best = max((active_degree(G, covered, chosen, u) for u in G.vertices() if u not in chosen),
                   default=0)
        if best > 0:
            assert active_degree(G, covered, chosen, v) == best
        covered |= cov
        chosen.add(v)


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_certificates_are_sound(G):
    t = greedy_dominating_set(G)
    if certificates(G, t) and G.n:
        assert len(t) == exact_gamma(G).gamma


@given(graphs())
def test_emptiness_matches_independence(G):
    t = greedy_dominating_set(G)
    assert tied_pair_emptiness(G, t) == is_independent(G, t.final_set)


def test_greedy_can_exceed_the_edge_count_bound():
    # open-neighborhood active degrees tie at 1 after the first pick, and the
    # min-index choice wastes a step: 3 picks against n + 1 - sqrt(2m + 1) ~ 2.88
    from domset.bounds import parekh_bound
    from domset.graph import Graph
    G = Graph.from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)])
    t = greedy_dominating_set(G)
    assert len(t) == 3
    assert len(t) > parekh_bound(G.n, G.m)
    assert exact_gamma(G).gamma == 2
