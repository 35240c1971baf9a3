"""Domination-number bounds and approximation ratios for a solved instance."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from domset.errors import GraphError
from domset.graph import Graph

# (Delta+1)/2 <= ln(Delta+1)+1 holds for integer Delta up to this value
HALF_DEGREE_MAX_DELTA = 4


@dataclass(frozen=True)
class RatioReport:
    n: int
    m: int
    max_degree: int
    min_degree: int
    diameter: int
    greedy_size: int
    purified_size: int
    parekh_bound: float
    gamma_lower: int
    gamma_upper: int
    log_degree_ratio: float
    half_degree_ratio: float
    piecewise_a: float
    gamma: int | None = None
    chvatal_ratio_value: float | None = None
    log_gamma_ratio: float | None = None
    piecewise_b: float | None = None
    greedy_ratio: float | None = None
    purified_ratio: float | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def parekh_bound(n: int, m: int) -> float:
    """Upper bound ``n + 1 - sqrt(2m + 1)`` on the greedy set size."""
    return n + 1 - math.sqrt(2 * m + 1)


def gamma_bounds(G: Graph) -> tuple[int, int]:
    """Integer lower and upper bounds on the domination number.

    Lower: ``max(ceil(n/(Delta+1)), ceil((d+1)/3))``. Upper:
    ``min(floor(n/2), n - Delta)``; the ``n/2`` term needs a graph without
    isolated vertices, so it is dropped for ``n = 1``.
    """
    if G.n == 0:
        return 0, 0
    delta = G.max_degree
    d = G.diameter()  # raises on disconnected input
    lower = max(-(-G.n // (delta + 1)), -(-(d + 1) // 3))
    upper = G.n - delta
    if G.min_degree > 0:
        upper = min(upper, G.n // 2)
    return lower, upper


def chvatal_ratio(n: int, gamma: int) -> float | None:
    """``ln(n/g) / (g ln(g/(g-1))) + 1``; undefined for ``g = 1``."""
    if gamma < 2:
        return None
    return math.log(n / gamma) / (gamma * math.log(gamma / (gamma - 1))) + 1


def ratio_by_degree(delta: int) -> float:
    return math.log(delta + 1) + 1


def ratio_half_degree(delta: int) -> float:
    return (delta + 1) / 2


def piecewise_by_degree(delta: int) -> float:
    if delta <= HALF_DEGREE_MAX_DELTA:
        return ratio_half_degree(delta)
    return ratio_by_degree(delta)


def piecewise_by_gamma(n: int, gamma: int, delta: int) -> float:
    if n >= gamma * math.exp((delta - 1) / 2):
        return ratio_half_degree(delta)
    return math.log(n / gamma) + 1


def evaluate_bounds(G: Graph, greedy_size: int, purified_size: int,
                    gamma: int | None = None) -> RatioReport:
    if gamma is not None and not (1 <= gamma <= G.n):
        raise GraphError(f"domination number {gamma} is impossible for n={G.n}")
    delta = G.max_degree
    lower, upper = gamma_bounds(G)
    fields = dict(
        n=G.n, m=G.m, max_degree=delta, min_degree=G.min_degree, diameter=G.diameter(),
        greedy_size=greedy_size, purified_size=purified_size,
        parekh_bound=parekh_bound(G.n, G.m),
        gamma_lower=lower, gamma_upper=upper,
        log_degree_ratio=ratio_by_degree(delta), half_degree_ratio=ratio_half_degree(delta),
        piecewise_a=piecewise_by_degree(delta),
    )
    if gamma is not None:
        fields.update(
            gamma=gamma,
            chvatal_ratio_value=chvatal_ratio(G.n, gamma),
            log_gamma_ratio=math.log(G.n / gamma) + 1,
            piecewise_b=piecewise_by_gamma(G.n, gamma, delta),
            greedy_ratio=greedy_size / gamma,
            purified_ratio=purified_size / gamma,
        )
    return RatioReport(**fields)
