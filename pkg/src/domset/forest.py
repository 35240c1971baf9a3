"""Tied pairs and the rooted cluster forest built from a greedy trace.

A tied pair ``(v_h, v)`` links a selected vertex ``v_h`` to a later-selected
vertex ``v`` that ``v_h`` covered first. Every vertex is covered first exactly
once, so each vertex has at most one incoming pair and the pairs form a forest
whose roots are the earliest-selected vertex of each tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from domset.errors import InvariantError
from domset.graph import Graph
from domset.greedy import GreedyTrace

TiedPairs = frozenset[tuple[int, int]]


def tied_pairs(G: Graph, trace: GreedyTrace) -> TiedPairs:
    S = trace.final_set
    pairs = set()
    for v_h, cov in zip(trace.order, trace.coverage):
        for v in cov & S:
            if v != v_h:
                pairs.add((v_h, v))
    return frozenset(pairs)


@dataclass(frozen=True)
class ClusterForest:
    """Rooted forest over the vertices that occur in tied pairs.

    Children are ordered by greedy selection step, which defines "leftmost".
    ``trees`` lists each tree's vertices in preorder, trees ordered by the
    selection step of their root.
    """

    parent: dict[int, int | None]
    children: dict[int, tuple[int, ...]]
    level: dict[int, int]
    roots: tuple[int, ...]
    trees: tuple[tuple[int, ...], ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.parent)

    @property
    def edge_count(self) -> int:
        return sum(p is not None for p in self.parent.values())

    def tree_of(self, v: int) -> int:
        """Index of the tree containing ``v``."""
        while self.parent[v] is not None:
            v = self.parent[v]
        return self.roots.index(v)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]


def build_forest(G: Graph, P: TiedPairs, trace: GreedyTrace) -> ClusterForest:
    step = trace.step_of
    parent: dict[int, int | None] = {}
    kids: dict[int, list[int]] = {}
    for a, b in P:
        if not G.has_edge(a, b):
            raise InvariantError(f"tied pair ({a}, {b}) is not an edge")
        if step[a] >= step[b]:
            raise InvariantError(f"tied pair ({a}, {b}) points backwards in selection order")
        if parent.get(b) is not None:
            raise InvariantError(f"vertex {b} has two incoming tied pairs")
        parent[b] = a
        parent.setdefault(a, None)
        kids.setdefault(a, []).append(b)
        kids.setdefault(b, [])
    children = {v: tuple(sorted(c, key=step.__getitem__)) for v, c in kids.items()}
    roots = tuple(sorted((v for v, p in parent.items() if p is None), key=step.__getitem__))

    level: dict[int, int] = {}
    trees = []
    for r in roots:
        order = []
        stack = [(r, 0)]
        while stack:
            v, lv = stack.pop()
            level[v] = lv
            order.append(v)
            stack.extend((c, lv + 1) for c in reversed(children[v]))
        trees.append(tuple(order))
    if len(level) != len(parent):
        raise InvariantError("tied pairs contain a cycle")
    return ClusterForest(parent, children, level, roots, tuple(trees))


def selected_edges_are_tied(G: Graph, trace: GreedyTrace, P: TiedPairs) -> bool:
    """Check how edges inside the greedy set relate to tied pairs.

    For every edge between selected vertices ``v_b`` and ``v_c`` with ``v_b``
    selected first, either ``(v_b, v_c)`` is a tied pair or ``v_c`` was tied to
    some ``v_a`` selected before ``v_b``.
    """
    step = trace.step_of
    incoming = {c: a for a, c in P}
    for b in trace.order:
        for c in G.neighbors(b) & trace.final_set:
            if step[b] >= step[c]:
                continue
            if (b, c) in P:
                continue
            a = incoming.get(c)
            if a is None or step[a] >= step[b]:
                return False
    return True
