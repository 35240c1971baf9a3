"""Hypothesis strategies for small graphs."""

from hypothesis import strategies as st

from domset.generators import RandomSpec, random_connected_graph
from domset.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edge_list(n, chosen)


@st.composite
def connected_graphs(draw, min_n=1, max_n=14):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(n - 1, n * (n - 1) // 2)) if n > 1 else 0
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected_graph(RandomSpec(n, m, seed))
