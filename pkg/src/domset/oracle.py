"""Exact domination number for small graphs, and a representatives check."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from domset.errors import GraphError
from domset.graph import Graph

DEFAULT_LIMIT = 25


@dataclass(frozen=True)
class OracleResult:
    gamma: int
    witness: frozenset[int]
    explored: int


def exact_gamma(G: Graph, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Minimum dominating set by exhaustive search, for ``n <= limit``.

    Sizes are tried in increasing order from a cheap lower bound. Within a
    size, the search branches on the lowest undominated vertex: one of its
    closed neighbors has to be chosen. A branch is cut when even picking the
    largest closed neighborhoods for every remaining slot cannot cover what
    is left.
    """
    n = G.n
    if n > limit:
        raise GraphError(f"exact search refused: n={n} exceeds the limit {limit}")
    if n == 0:
        return OracleResult(0, frozenset(), 1)
    closed = G.closed_masks
    full = G.full_mask
    options = [sorted(G.neighbors(u) | {u}) for u in range(n)]
    widest = G.max_degree + 1
    explored = 0

    def search(covered: int, chosen: list[int], left: int) -> bool:
        nonlocal explored
        explored += 1
        if covered == full:
            return True
        if left == 0:
            return False
        if left * widest < n - covered.bit_count():
            return False
        rest = full & ~covered
        u = (rest & -rest).bit_length() - 1
        for w in options[u]:
            chosen.append(w)
            if search(covered | closed[w], chosen, left - 1):
                return True
            chosen.pop()
        return False

    k = -(-n // widest)
    while True:
        chosen: list[int] = []
        if search(0, chosen, k):
            return OracleResult(k, frozenset(chosen), explored)
        k += 1


def has_system_of_representatives(G: Graph, A: Iterable[int], B: Iterable[int]) -> bool:
    """Whether each vertex of ``A`` can be matched to its own neighbor in ``B``."""
    A = sorted(G.check_vertices(A))
    B = sorted(G.check_vertices(B))
    if set(A) & set(B):
        raise GraphError("representative sets must be disjoint")
    if not A:
        return True
    if len(A) > len(B):
        return False
    col = {b: j for j, b in enumerate(B)}
    rows, cols = [], []
    for i, a in enumerate(A):
        for u in G.neighbors(a):
            j = col.get(u)
            if j is not None:
                rows.append(i)
                cols.append(j)
    if not rows:
        return False
    biadj = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(len(A), len(B)))
    match = maximum_bipartite_matching(biadj, perm_type="column")
    return bool((match >= 0).all())
