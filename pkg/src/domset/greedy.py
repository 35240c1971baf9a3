"""Stage one: greedy selection by maximum active degree.

At every step the vertex outside the current set whose neighborhood contains
the most not-yet-covered vertices is added. The vertex itself is not counted,
only its open neighborhood. The full trace (selection order and, per step,
the vertices first covered at that step) is kept for the forest builder.
"""

from __future__ import annotations

import heapq
import random
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from domset.errors import GraphError
from domset.graph import Graph, is_independent

TIE_BREAKS = ("min-index", "max-index", "random")


@dataclass(frozen=True)
class GreedyTrace:
    """Execution record of the greedy stage.

    ``coverage[h]`` holds the vertices uncovered before step ``h`` and covered
    by ``order[h]`` (0-based steps). The sets are pairwise disjoint; a
    selected vertex lies in its own set unless an earlier pick covered it.
    """

    order: tuple[int, ...]
    coverage: tuple[frozenset[int], ...]
    tie_break: str = "min-index"

    @cached_property
    def final_set(self) -> frozenset[int]:
        return frozenset(self.order)

    @cached_property
    def step_of(self) -> dict[int, int]:
        """Selection step of every member of the set."""
        return {v: h for h, v in enumerate(self.order)}

    @cached_property
    def covered_at(self) -> dict[int, int]:
        """Step at which each vertex was first covered."""
        return {u: h for h, cov in enumerate(self.coverage) for u in cov}

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class Certificate:
    kind: str  # "size-at-most-two" | "independent-partition" | "none"
    detail: dict = field(default_factory=dict)

    @property
    def granted(self) -> bool:
        return self.kind != "none"


def _tie_keys(n: int, tie_break: str, seed: int | None) -> list[int]:
    if tie_break == "min-index":
        return list(range(n))
    if tie_break == "max-index":
        return [n - v for v in range(n)]
    if tie_break == "random":
        keys = list(range(n))
        random.Random(seed).shuffle(keys)
        return keys
    raise GraphError(f"unknown tie-break policy {tie_break!r}; expected one of {TIE_BREAKS}")


def active_degree(G: Graph, covered: Iterable[int], in_set: Iterable[int], v: int) -> int:
    """Number of neighbors of ``v`` that are still uncovered."""
    if v in set(in_set):
        raise GraphError(f"vertex {v} is already in the set")
    return len(G.neighbors(v) - set(covered))


def greedy_dominating_set(G: Graph, tie_break: str = "min-index",
                          seed: int | None = None) -> GreedyTrace:
    """Run the greedy stage and return its trace.

    Ties on active degree go to the vertex with the smallest key under
    ``tie_break`` (``min-index`` by default; ``random`` uses ``seed``).
    Active degrees are maintained incrementally: covering ``u`` lowers the
    active degree of every neighbor of ``u`` by one.
    """
    n = G.n
    keys = _tie_keys(n, tie_break, seed)
    adeg = [G.degree(v) for v in range(n)]
    covered = bytearray(n)
    in_set = bytearray(n)
    heap = [(-adeg[v], keys[v], v) for v in range(n)]
    heapq.heapify(heap)
    uncovered = n
    order: list[int] = []
    coverage: list[frozenset[int]] = []

    while uncovered:
        while True:
            neg, _, v = heap[0]
            if in_set[v] or -neg != adeg[v]:
                heapq.heappop(heap)
                continue
            break
        if adeg[v] == 0:
            # only isolated uncovered vertices remain; each joins on its own
            for u in sorted((u for u in range(n) if not covered[u]), key=keys.__getitem__):
                order.append(u)
                coverage.append(frozenset((u,)))
            break
        heapq.heappop(heap)
        in_set[v] = 1
        newly = [u for u in G.neighbors(v) if not covered[u]]
        if not covered[v]:
            newly.append(v)
        for u in newly:
            covered[u] = 1
            for w in G.neighbors(u):
                adeg[w] -= 1
                if not in_set[w]:
                    heapq.heappush(heap, (-adeg[w], keys[w], w))
        uncovered -= len(newly)
        order.append(v)
        coverage.append(frozenset(newly))

    return GreedyTrace(tuple(order), tuple(coverage), tie_break)


def certify_size_two(trace: GreedyTrace) -> Certificate:
    """A greedy set of at most two vertices is a minimum dominating set."""
    if len(trace) <= 2:
        return Certificate("size-at-most-two", {"size": len(trace)})
    return Certificate("none", {"size": len(trace)})


def certify_independent_partition(G: Graph, trace: GreedyTrace) -> Certificate:
    """Optimality when closed neighborhoods of the set partition ``V``.

    Holds iff the set is independent and no outside vertex sees two members.
    """
    S = trace.final_set
    if not is_independent(G, S):
        return Certificate("none", {"reason": "set is not independent"})
    for u in range(G.n):
        if u not in S:
            hits = G.neighbors(u) & S
            if len(hits) > 1:
                return Certificate("none", {"reason": "shared neighbor",
                                            "vertex": u, "sees": sorted(hits)})
    return Certificate("independent-partition", {"size": len(S)})


def certificates(G: Graph, trace: GreedyTrace) -> list[Certificate]:
    """All optimality certificates that fire for this trace."""
    found = [certify_size_two(trace), certify_independent_partition(G, trace)]
    return [c for c in found if c.granted]


def tied_pair_emptiness(G: Graph, trace: GreedyTrace) -> bool:
    """True iff no selected vertex was first covered by an earlier selection."""
    S = trace.final_set
    return not any((cov & S) - {v} for v, cov in zip(trace.order, trace.coverage))
