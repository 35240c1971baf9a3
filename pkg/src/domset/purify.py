"""Stage two: purify the greedy set tree by tree over the cluster forest.

Forest vertices carry one of three statuses. ``pending`` vertices are
undecided, ``firm`` ones are kept for good, ``purified`` ones are removed.
The only transitions are pending -> firm and pending -> purified.

A non-forest vertex ``x`` is a semi-private neighbor of forest vertex ``v``
when ``v`` is the only forest neighbor of ``x`` that has not been purified.
Removing ``v`` would then leave ``x`` uncovered, so such a ``v`` is set firm.
The remaining-neighbor index is shared by all trees.
"""

from __future__ import annotations

import heapq
import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from domset.errors import GraphError, InvariantError
from domset.forest import ClusterForest, build_forest, tied_pairs
from domset.graph import Graph, is_dominating, redundant_vertices
from domset.greedy import Certificate, GreedyTrace, certificates, greedy_dominating_set

PENDING = "pending"
FIRM = "firm"
PURIFIED = "purified"

MODES = ("strict", "extended")


@dataclass
class PurifyState:
    """Mutable bookkeeping for one purification run.

    ``remaining[x]`` is the set of forest neighbors of non-forest vertex ``x``
    that are not purified. ``log`` records every status change as
    ``(vertex, old, new)``; ``fallbacks`` counts quadruples cut short because
    the upper pending vertex gained a semi-private neighbor mid-rule.
    """

    status: dict[int, str]
    remaining: dict[int, set[int]]
    mode: str = "extended"
    log: list[tuple[int, str, str]] = field(default_factory=list)
    fallbacks: int = 0

    @classmethod
    def fresh(cls, G: Graph, forest: ClusterForest, mode: str = "extended",
              outside: frozenset[int] = frozenset()) -> PurifyState:
        if mode not in MODES:
            raise GraphError(f"unknown purification mode {mode!r}; expected one of {MODES}")
        fv = forest.vertices
        remaining = {}
        for v in fv:
            for x in G.neighbors(v):
                if x not in fv and x not in outside and not (G.neighbors(x) & outside):
                    remaining.setdefault(x, set()).add(v)
        return cls({v: PENDING for v in fv}, remaining, mode)

    def set_firm(self, v: int) -> bool:
        old = self.status[v]
        if old == PURIFIED:
            raise InvariantError(f"purified vertex {v} cannot be set firm")
        if old == FIRM:
            return False
        self.status[v] = FIRM
        self.log.append((v, old, FIRM))
        return True

    def purify(self, v: int, G: Graph) -> list[int]:
        """Purify ``v``; return vertices that just gained a semi-private neighbor."""
        old = self.status[v]
        if old != PENDING:
            raise InvariantError(f"cannot purify {old} vertex {v}")
        self.status[v] = PURIFIED
        self.log.append((v, old, PURIFIED))
        gained = []
        for x in G.neighbors(v):
            rest = self.remaining.get(x)
            if rest is None:
                continue
            rest.discard(v)
            if not rest:
                raise InvariantError(f"purifying {v} left vertex {x} without a forest neighbor")
            if len(rest) == 1:
                gained.append(next(iter(rest)))
        return gained

    def kept(self) -> set[int]:
        return {v for v, s in self.status.items() if s != PURIFIED}


def semi_private_neighbors(v: int, state: PurifyState, G: Graph) -> list[int]:
    return sorted(x for x in G.neighbors(v)
                  if len(state.remaining.get(x, ())) == 1 and v in state.remaining[x])


def has_semi_private_neighbor(v: int, state: PurifyState, G: Graph) -> bool:
    if state.status.get(v) == PURIFIED:
        raise GraphError(f"vertex {v} is purified")
    for x in G.neighbors(v):
        rest = state.remaining.get(x)
        if rest is not None and len(rest) == 1:
            return True
    return False


def find_anchor(tree: Sequence[int], forest: ClusterForest, state: PurifyState) -> int | None:
    """Deepest firm vertex with a pending parent; leftmost among equals.

    ``tree`` is in preorder with children ordered by selection step, so the
    first candidate found at the deepest level is the leftmost one.
    """
    best = None
    for v in tree:
        p = forest.parent[v]
        if p is None or state.status[v] != FIRM or state.status[p] != PENDING:
            continue
        if best is None or forest.level[v] > forest.level[best]:
            best = v
    return best


def purify_tree(tree: Sequence[int], forest: ClusterForest, state: PurifyState,
                G: Graph) -> PurifyState:
    """Purify one tree (vertices in preorder) in place and return the state."""
    members = set(tree)
    rank = {v: i for i, v in enumerate(tree)}
    parent, level = forest.parent, forest.level
    anchors: list[tuple[int, int, int]] = []

    def firm(v: int) -> None:
        if state.set_firm(v) and parent[v] is not None:
            heapq.heappush(anchors, (-level[v], rank[v], v))

    def purify(v: int) -> None:
        for w in state.purify(v, G):
            if w in members and state.status[w] == PENDING:
                firm(w)

    # leaves first: keep those guarding a semi-private neighbor
    for leaf in tree:
        if not forest.is_leaf(leaf) or state.status[leaf] != PENDING:
            continue
        if has_semi_private_neighbor(leaf, state, G):
            firm(leaf)
        else:
            purify(leaf)
            if state.status[parent[leaf]] == PENDING:
                firm(parent[leaf])

    for v in tree:
        if state.status[v] == PENDING and has_semi_private_neighbor(v, state, G):
            firm(v)

    while anchors:
        _, _, a = anchors[0]
        b = parent[a]
        if state.status[b] != PENDING:
            heapq.heappop(anchors)
            continue
        c = parent[b]
        d = parent[c] if c is not None else None
        if (c is not None and d is not None and state.status[c] == PENDING
                and state.status[d] != PURIFIED):
            # quadruple
            purify(b)
            if state.status[c] == PENDING:
                purify(c)
                if state.status[d] == PENDING:
                    firm(d)
            else:
                state.fallbacks += 1
        elif c is not None:
            # trio
            purify(b)
        elif state.mode == "extended":
            # b is the root and is covered by its firm child a
            purify(b)
        else:
            break
    return state


def purify_all(G: Graph, trace: GreedyTrace, forest: ClusterForest,
               mode: str = "extended") -> tuple[frozenset[int], PurifyState]:
    """Purify every tree in root order; return the reduced set and final state."""
    state = PurifyState.fresh(G, forest, mode, trace.final_set - forest.vertices)
    for tree in forest.trees:
        purify_tree(tree, forest, state, G)
    kept = (trace.final_set - forest.vertices) | state.kept()
    if not is_dominating(G, kept):
        raise InvariantError("purified set is not dominating")
    for v, s in state.status.items():
        if s == PURIFIED:
            near = list(forest.children[v])
            if forest.parent[v] is not None:
                near.append(forest.parent[v])
            if all(state.status[u] == PURIFIED for u in near):
                raise InvariantError(f"purified vertex {v} has no kept parent or child")
    return frozenset(kept), state


def ensure_minimal(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """Drop redundant vertices, smallest index first, until ``S`` is minimal.

    Removing a vertex never makes another one redundant, so one ascending
    pass gives the same result as repeatedly removing the smallest
    redundant vertex.
    """
    S = set(G.check_vertices(S))
    if not is_dominating(G, S):
        raise GraphError("set is not dominating")
    count = [0] * G.n
    for s in S:
        count[s] += 1
        for u in G.neighbors(s):
            count[u] += 1
    for s in sorted(S):
        if count[s] >= 2 and all(count[u] >= 2 for u in G.neighbors(s)):
            S.remove(s)
            count[s] -= 1
            for u in G.neighbors(s):
                count[u] -= 1
    out = frozenset(S)
    if redundant_vertices(G, out):
        raise InvariantError("minimality pass left a redundant vertex")
    return out


@dataclass
class DominationResult:
    greedy_set: frozenset[int]
    purified_set: frozenset[int]
    certificates: list[Certificate]
    timings: dict[str, float]
    trace: GreedyTrace | None = None
    forest: ClusterForest | None = None
    state: PurifyState | None = None
    components: list[DominationResult] | None = None
    report: object | None = None  # RatioReport, filled in by callers that want it

    @property
    def purification_count(self) -> int:
        return len(self.greedy_set) - len(self.purified_set)


def _solve_connected(G: Graph, tie_break: str, seed: int | None, mode: str,
                     minimal_pass: bool) -> DominationResult:
    t0 = time.perf_counter()
    trace = greedy_dominating_set(G, tie_break, seed)
    t1 = time.perf_counter()
    forest = build_forest(G, tied_pairs(G, trace), trace)
    t2 = time.perf_counter()
    kept, state = purify_all(G, trace, forest, mode)
    if minimal_pass:
        kept = ensure_minimal(G, kept)
    t3 = time.perf_counter()
    if not kept <= trace.final_set:
        raise InvariantError("purified set is not a subset of the greedy set")
    return DominationResult(
        greedy_set=trace.final_set,
        purified_set=kept,
        certificates=certificates(G, trace),
        timings={"greedy": t1 - t0, "forest": t2 - t1, "purify": t3 - t2},
        trace=trace,
        forest=forest,
        state=state,
    )


def solve(G: Graph, tie_break: str = "min-index", mode: str = "extended",
          ensure_minimal: bool = False, components: bool = False,
          seed: int | None = None) -> DominationResult:
    """Greedy stage followed by purification.

    Disconnected graphs are rejected unless ``components`` is set, in which
    case each component is solved on its own and the results are united.
    """
    if mode not in MODES:
        raise GraphError(f"unknown purification mode {mode!r}; expected one of {MODES}")
    if G.is_connected():
        return _solve_connected(G, tie_break, seed, mode, ensure_minimal)
    if not components:
        raise GraphError("graph is disconnected; solve per component instead")

    parts = []
    greedy, kept = set(), set()
    timings = {"greedy": 0.0, "forest": 0.0, "purify": 0.0}
    for comp in G.connected_components():
        H, back = G.subgraph(comp)
        r = _solve_connected(H, tie_break, seed, mode, ensure_minimal)
        greedy.update(back[v] for v in r.greedy_set)
        kept.update(back[v] for v in r.purified_set)
        for k, t in r.timings.items():
            timings[k] += t
        parts.append(r)
    return DominationResult(frozenset(greedy), frozenset(kept), [], timings, components=parts)
