"""Immutable simple undirected graphs and dominating-set predicates."""

from __future__ import annotations

import numbers
from collections import deque
from collections.abc import Iterable, Sequence
from functools import cached_property

from domset.errors import GraphError

Edge = tuple[int, int]


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Neighborhoods are kept both as frozensets (iteration, membership) and as
    integer bit masks (fast unions and intersections). Instances are never
    mutated after construction, so they can be shared between workers.

    ``labels`` optionally maps each vertex id to an external name, e.g. the
    numbering used in a drawing. It does not affect any algorithm.
    """

    def __init__(self, n: int, adjacency: Sequence[frozenset[int]],
                 labels: Sequence[object] | None = None):
        self.n = n
        self._adj = tuple(adjacency)
        self.m = sum(len(a) for a in self._adj) // 2
        if labels is not None and len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[Edge],
                       labels: Sequence[object] | None = None) -> Graph:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, [frozenset(a) for a in adj], labels)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    # -- queries -------------------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u in range(self.n) for v in self._adj[u] if u < v)

    def label(self, v: int) -> object:
        return self.labels[v] if self.labels is not None else v

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open-neighborhood bit masks."""
        out = []
        for a in self._adj:
            bits = 0
            for u in a:
                bits |= 1 << u
            out.append(bits)
        return tuple(out)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(mask | (1 << v) for v, mask in enumerate(self.masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def mask_of(self, vertices: Iterable[int]) -> int:
        bits = 0
        for v in vertices:
            bits |= 1 << v
        return bits

    def check_vertices(self, vertices: Iterable[int]) -> frozenset[int]:
        """Return ``vertices`` as a frozenset, rejecting unknown ids."""
        out = frozenset(int(v) if isinstance(v, numbers.Integral) else v for v in vertices)
        bad = [v for v in out if not (isinstance(v, int) and 0 <= v < self.n)]
        if bad:
            raise GraphError(f"not vertices of a graph with n={self.n}: {sorted(bad)}")
        return out

    def subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabeled densely. Returns it with the new->old map."""
        old = sorted(self.check_vertices(vertices))
        index = {v: i for i, v in enumerate(old)}
        adj = [frozenset(index[u] for u in self._adj[v] if u in index) for v in old]
        labels = [self.label(v) for v in old] if self.labels is not None else None
        return Graph(len(old), adj, labels), old

    # -- structure -----------------------------------------------------------

    def bfs_distances(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in self._adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def connected_components(self) -> list[list[int]]:
        """Components as sorted vertex lists, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                v = stack.pop()
                for u in self._adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def diameter(self) -> int:
        """Exact diameter: unweighted shortest paths from every vertex."""
        if not self.is_connected():
            raise GraphError("diameter is undefined for a disconnected graph")
        if self.n <= 1:
            return 0
        if self.n <= 200:
            return max(max(self.bfs_distances(s)) for s in range(self.n))
        from scipy.sparse.csgraph import shortest_path

        best = 0
        for lo in range(0, self.n, 256):
            dist = shortest_path(self.csr, unweighted=True, indices=range(lo, min(lo + 256, self.n)))
            best = max(best, int(dist.max()))
        return best

    @cached_property
    def csr(self):
        """Adjacency as a scipy CSR matrix."""
        import numpy as np
        from scipy.sparse import csr_matrix

        rows = [u for u in range(self.n) for _ in self._adj[u]]
        cols = [v for u in range(self.n) for v in sorted(self._adj[u])]
        data = np.ones(len(rows), dtype=np.int8)
        return csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def degree_stats(self) -> tuple[int, int, int]:
        """``(max degree, min degree, diameter)``."""
        return self.max_degree, self.min_degree, self.diameter()


def connected_components(G: Graph) -> list[list[int]]:
    return G.connected_components()


def degree_stats(G: Graph) -> tuple[int, int, int]:
    return G.degree_stats()


def undominated(G: Graph, S: Iterable[int]) -> list[int]:
    """Vertices neither in ``S`` nor adjacent to it."""
    S = G.check_vertices(S)
    covered = 0
    closed = G.closed_masks
    for v in S:
        covered |= closed[v]
    return [v for v in range(G.n) if not covered >> v & 1]


def is_dominating(G: Graph, S: Iterable[int]) -> bool:
    return not undominated(G, S)


def redundant_vertices(G: Graph, S: Iterable[int]) -> list[int]:
    """Members of a dominating set ``S`` whose removal keeps it dominating.

    ``s`` is redundant iff every vertex of ``N[s]`` is dominated by some
    other member of ``S``.
    """
    S = G.check_vertices(S)
    count = [0] * G.n
    for s in S:
        count[s] += 1
        for u in G.neighbors(s):
            count[u] += 1
    out = []
    for s in sorted(S):
        if count[s] >= 2 and all(count[u] >= 2 for u in G.neighbors(s)):
            out.append(s)
    return out


def is_minimal_dominating(G: Graph, S: Iterable[int]) -> bool:
    S = G.check_vertices(S)
    return is_dominating(G, S) and not redundant_vertices(G, S)


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    S = G.check_vertices(S)
    return all(not (G.neighbors(v) & S) for v in S)
