import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domset.errors import InvariantError
from domset.forest import build_forest, tied_pairs, selected_edges_are_tied
from domset.generators import fixture, path, star
from domset.greedy import TIE_BREAKS, GreedyTrace, greedy_dominating_set

from strategies import graphs


def forest_of(G, tie="min-index", seed=None):
    t = greedy_dominating_set(G, tie, seed)
    P = tied_pairs(G, t)
    return t, P, build_forest(G, P, t)


def test_tied_pair_examples():
    assert tied_pairs(path(4), greedy_dominating_set(path(4))) == {(1, 2)}
    assert tied_pairs(path(5), greedy_dominating_set(path(5))) == {(1, 2), (2, 3)}
    assert tied_pairs(star(4), greedy_dominating_set(star(4))) == frozenset()


def test_p5_chain():
    _, _, F = forest_of(path(5))
    assert F.roots == (1,)
    assert F.trees == ((1, 2, 3),)
    assert F.level == {1: 0, 2: 1, 3: 2}
    assert F.parent == {1: None, 2: 1, 3: 2}
    assert F.is_leaf(3) and not F.is_leaf(2)
    assert F.edge_count == 2


def test_spider_forest():
    G = fixture("fig1-spider")
    _, _, F = forest_of(G)
    (root,) = F.roots
    assert G.label(root) == "x1"
    mids = F.children[root]
    assert sorted(G.label(q) for q in mids) == ["q1", "q2", "q3", "q4"]
    stems = [s for q in mids for s in F.children[q]]
    assert len(stems) == 8 and all(G.label(s).startswith("p") for s in stems)
    assert all(F.is_leaf(s) for s in stems)


def test_ring_forest_has_two_trees_of_three():
    G = fixture("fig5a-ring")
    t, _, F = forest_of(G)
    assert [len(T) for T in F.trees] == [3, 3]
    assert list(F.roots) == list(t.order[:2])


def test_proposition_examples():
    for G in (path(5), fixture("fig1-spider"), star(4)):
        t, P, _ = forest_of(G)
        assert selected_edges_are_tied(G, t, P)


def test_build_forest_rejects_bad_pairs():
    G = path(5)
    t = greedy_dominating_set(G)
    with pytest.raises(InvariantError):
        build_forest(G, frozenset({(1, 3)}), t)      # not an edge
    with pytest.raises(InvariantError):
        build_forest(G, frozenset({(2, 1)}), t)      # backwards
    corona = fixture("c5-corona-k1")
    order = GreedyTrace((0, 2, 1), (frozenset(), frozenset(), frozenset()))
    with pytest.raises(InvariantError, match="two incoming"):
        build_forest(corona, frozenset({(0, 1), (2, 1)}), order)


@settings(max_examples=200)
@given(graphs(), st.sampled_from(TIE_BREAKS), st.integers(0, 50))
def test_forest_structure(G, tie, seed):
    t, P, F = forest_of(G, tie, seed)
    step = t.step_of
    targets = [b for _, b in P]
    assert len(targets) == len(set(targets))
    for a, b in P:
        assert G.has_edge(a, b)
        assert step[a] < step[b]
        assert F.parent[b] == a
    assert F.vertices == {v for e in P for v in e}
    for r, T in zip(F.roots, F.trees):
        assert T[0] == r
        assert min(step[v] for v in T) == step[r]
        for v in T[1:]:
            assert F.level[v] == F.level[F.parent[v]] + 1
            assert F.tree_of(v) == F.roots.index(r)
    assert sorted(v for T in F.trees for v in T) == sorted(F.vertices)
    assert [step[r] for r in F.roots] == sorted(step[r] for r in F.roots)
    assert selected_edges_are_tied(G, t, P)
