"""Graph families, seeded random connected graphs, and small labeled fixtures."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from domset.errors import GraphError
from domset.graph import Edge, Graph


def path(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 0."""
    return Graph.from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def null(n: int) -> Graph:
    return Graph.from_edge_list(n, [])


# -- random ------------------------------------------------------------------

@dataclass(frozen=True)
class RandomSpec:
    n: int
    m: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"need at least one vertex, got n={self.n}")
        if not (self.n - 1 <= self.m <= self.n * (self.n - 1) // 2):
            raise GraphError(f"no connected simple graph has n={self.n}, m={self.m}")


def random_connected_graph(spec: RandomSpec | int, m: int | None = None,
                           seed: int | None = None) -> Graph:
    """Connected graph with exactly ``n`` vertices and ``m`` edges.

    A random recursive tree over a shuffled vertex order guarantees
    connectivity; the remaining ``m - n + 1`` edges are drawn uniformly from
    the non-edges. Everything comes from one PCG64 stream seeded by
    ``spec.seed``, so equal specs give equal graphs.
    """
    if not isinstance(spec, RandomSpec):
        spec = RandomSpec(spec, m, 0 if seed is None else seed)
    n, m = spec.n, spec.m
    rng = np.random.default_rng(spec.seed)
    perm = rng.permutation(n)
    edges: set[Edge] = set()
    for i in range(1, n):
        j = int(rng.integers(i))
        u, v = int(perm[i]), int(perm[j])
        edges.add((min(u, v), max(u, v)))
    extra = m - (n - 1)
    free = n * (n - 1) // 2 - len(edges)
    if extra > free // 2:
        pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        for i in rng.choice(len(pool), size=extra, replace=False):
            edges.add(pool[int(i)])
    else:
        while extra:
            u, v = (int(x) for x in rng.integers(n, size=2))
            if u == v:
                continue
            e = (min(u, v), max(u, v))
            if e not in edges:
                edges.add(e)
                extra -= 1
    return Graph.from_edge_list(n, sorted(edges))


# -- operations --------------------------------------------------------------

def corona(G1: Graph, G2: Graph) -> Graph:
    """``G1`` plus one copy of ``G2`` per vertex ``i`` of ``G1``, all joined to ``i``.

    Copy ``i`` occupies ids ``n1 + i*n2 .. n1 + (i+1)*n2 - 1``.
    """
    n1, n2 = G1.n, G2.n
    edges = list(G1.edges())
    for i in range(n1):
        base = n1 + i * n2
        edges.extend((base + a, base + b) for a, b in G2.edges())
        edges.extend((i, base + a) for a in range(n2))
    return Graph.from_edge_list(n1 * (1 + n2), edges)


def double_subdivision_inflate(G: Graph, edge: Edge, k: int) -> Graph:
    """Replace edge ``uv`` by ``k`` disjoint paths ``u - w1i - w2i - v``."""
    u, v = edge
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if k < 1:
        raise GraphError(f"inflation size must be at least 1, got {k}")
    edges = [e for e in G.edges() if e != (min(u, v), max(u, v))]
    n = G.n
    for _ in range(k):
        w1, w2 = n, n + 1
        edges += [(u, w1), (w1, w2), (w2, v)]
        n += 2
    return Graph.from_edge_list(n, edges)


def add_pendants(G: Graph, v: int, t: int) -> Graph:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} is not in the graph")
    if t < 0:
        raise GraphError(f"pendant count must be non-negative, got {t}")
    edges = G.edges() + [(v, G.n + i) for i in range(t)]
    return Graph.from_edge_list(G.n + t, edges)


def w_family(H: Graph, k_per_edge: Sequence[int], t_per_vertex: Sequence[int]) -> Graph:
    """Inflate every edge of ``H`` (in sorted edge order), then add pendants.

    Vertices of ``H`` keep their ids.
    """
    edges = H.edges()
    if len(k_per_edge) != len(edges):
        raise GraphError(f"need {len(edges)} inflation sizes, got {len(k_per_edge)}")
    if len(t_per_vertex) != H.n:
        raise GraphError(f"need {H.n} pendant counts, got {len(t_per_vertex)}")
    G = H
    for e, k in zip(edges, k_per_edge):
        G = double_subdivision_inflate(G, e, k)
    for v, t in enumerate(t_per_vertex):
        G = add_pendants(G, v, t)
    return G


def _attach_two_paths(n: int, edges: list[Edge], hosts: range) -> tuple[int, list[Edge]]:
    for v in hosts:
        u, w = n, n + 1
        edges += [(v, u), (u, w)]
        n += 2
    return n, edges


def t_family(G: Graph, H: Graph) -> Graph:
    """Corona of ``G`` and ``H``, plus a path ``v - u - w`` hung on every ``v`` of ``G``."""
    C = corona(G, H)
    n, edges = _attach_two_paths(C.n, C.edges(), range(G.n))
    return Graph.from_edge_list(n, edges)


def t_prime_family(G: Graph, p: int) -> Graph:
    """``G`` fully joined to ``p`` independent vertices, plus a hung 2-path per vertex.

    Order is ``3n + p``; requires ``p > n``.
    """
    if p <= G.n:
        raise GraphError(f"need p > n(G) = {G.n}, got p={p}")
    edges = G.edges() + [(v, G.n + j) for v in range(G.n) for j in range(p)]
    n, edges = _attach_two_paths(G.n + p, edges, range(G.n))
    return Graph.from_edge_list(n, edges)


# -- fixtures ----------------------------------------------------------------
#
# Ids follow each fixture's own numbering where it has one (label k is id
# k-1), otherwise the vertex names in reading order. Greedy
# ties go to the smallest id, so these orders decide which vertex is picked.

def _spider() -> Graph:
    # x1 hub; q1..q4 below it; p1..p8 two per q; r1..r8 pendant on each p
    labels = ["x1"] + [f"q{i}" for i in range(1, 5)] + [f"p{i}" for i in range(1, 9)] \
        + [f"r{i}" for i in range(1, 9)]
    edges = [(0, q) for q in range(1, 5)]
    for j in range(8):
        p, r, q = 5 + j, 13 + j, 1 + j // 2
        edges += [(q, p), (p, r)]
    return Graph.from_edge_list(21, edges, labels)


def _w22c3() -> Graph:
    # H = triangle u(0), v(1), w(2); every edge inflated twice; two pendants on u and v
    G = w_family(cycle(3), [2, 2, 2], [2, 2, 0])
    labels = ["u", "v", "w"] + [f"d{i}" for i in range(1, 13)] + ["l3", "l4", "l1", "l2"]
    return Graph(G.n, [G.neighbors(v) for v in range(G.n)], labels)


def _counter() -> Graph:
    # labeled vertices 1..6 are ids 0..5; the unlabeled t1..t6 are ids 6..11
    L = {str(i): i - 1 for i in range(1, 7)} | {f"t{i}": 5 + i for i in range(1, 7)}
    pairs = [("4", "5"), ("5", "6"), ("4", "1"), ("1", "5"), ("6", "2"), ("2", "5"),
             ("1", "t1"), ("t1", "3"), ("3", "t6"), ("1", "t2"), ("t2", "3"),
             ("1", "t3"), ("t3", "3"), ("2", "t3"), ("1", "t4"), ("t4", "3"),
             ("2", "t4"), ("t5", "3"), ("2", "t5")]
    labels = [1, 2, 3, 4, 5, 6] + [f"t{i}" for i in range(1, 7)]
    return Graph.from_edge_list(12, [(L[a], L[b]) for a, b in pairs], labels)


def _ring() -> Graph:
    # hexagon s2..s7 (ids 0..5) with pendants l2..l7 (ids 9..14) and three
    # hubs s1, s8, s9 (ids 6..8) each seeing four hexagon vertices
    names = ["s2", "s3", "s4", "s5", "s6", "s7", "s1", "s8", "s9",
             "l2", "l3", "l4", "l5", "l6", "l7"]
    L = {s: i for i, s in enumerate(names)}
    ring = ["s2", "s3", "s4", "s5", "s6", "s7"]
    pairs = [(ring[i], ring[(i + 1) % 6]) for i in range(6)]
    pairs += [(s, "l" + s[1:]) for s in ring]
    pairs += [("s1", s) for s in ("s2", "s4", "s5", "s7")]
    pairs += [("s8", s) for s in ("s2", "s3", "s6", "s7")]
    pairs += [("s9", s) for s in ("s3", "s4", "s5", "s6")]
    return Graph.from_edge_list(15, [(L[a], L[b]) for a, b in pairs], names)


def _mwds() -> Graph:
    # triangle 1, 2, 3 (ids 0..2); unlabeled t1..t5 left to right (ids 3..7)
    L = {"1": 0, "2": 1, "3": 2} | {f"t{i}": 2 + i for i in range(1, 6)}
    pairs = [("2", "3"), ("3", "1"), ("1", "2"),
             ("2", "t1"), ("2", "t2"), ("2", "t3"), ("3", "t3"), ("3", "t4"), ("3", "t5"),
             ("1", "t2"), ("1", "t3"), ("1", "t4"), ("t1", "t2"), ("t4", "t5")]
    labels = [1, 2, 3] + [f"t{i}" for i in range(1, 6)]
    return Graph.from_edge_list(8, [(L[a], L[b]) for a, b in pairs], labels)


def _two_leg_spider() -> Graph:
    # s - a - x and s - b - y
    return Graph.from_edge_list(5, [(0, 1), (0, 2), (1, 3), (2, 4)], ["s", "a", "b", "x", "y"])


FIXTURES = {
    "fig1-spider": _spider,
    "fig2-w22c3": _w22c3,
    "fig3-counter": _counter,
    "fig5a-ring": _ring,
    "fig6a-t": lambda: t_family(path(2), path(4)),
    "fig6b-tprime": lambda: t_prime_family(path(2), 4),
    "fig7-mwds": _mwds,
    "c5-corona-k1": lambda: corona(cycle(5), complete(1)),
    "two-leg-spider": _two_leg_spider,
}


def fixture(name: str) -> Graph:
    try:
        build = FIXTURES[name]
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    return build()


def family(spec: str) -> Graph:
    """Build a small named graph from ``kind:size``, e.g. ``cycle:5`` or ``null:4``."""
    kinds = {"path": path, "cycle": cycle, "complete": complete, "star": star, "null": null}
    kind, _, size = spec.partition(":")
    if kind not in kinds or not size.isdigit():
        raise GraphError(f"bad graph spec {spec!r}; use one of {sorted(kinds)} as kind:size")
    return kinds[kind](int(size))
