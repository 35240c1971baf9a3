"""Greedy dominating sets with tied-pair purification."""

from domset.bounds import RatioReport, evaluate_bounds, gamma_bounds, parekh_bound
from domset.errors import DomsetError, GraphError, InvariantError
from domset.forest import ClusterForest, build_forest, tied_pairs
from domset.generators import RandomSpec, fixture, random_connected_graph
from domset.graph import Graph, is_dominating, is_minimal_dominating
from domset.greedy import GreedyTrace, greedy_dominating_set
from domset.io import parse_graph, write_graph
from domset.oracle import exact_gamma, has_system_of_representatives
from domset.purify import DominationResult, ensure_minimal, purify_all, solve

__all__ = [
    "ClusterForest", "DominationResult", "DomsetError", "Graph", "GraphError", "GreedyTrace",
    "InvariantError", "RandomSpec", "RatioReport", "build_forest", "ensure_minimal",
    "evaluate_bounds", "exact_gamma", "fixture", "gamma_bounds", "greedy_dominating_set",
    "has_system_of_representatives", "is_dominating", "is_minimal_dominating", "parekh_bound",
    "parse_graph", "purify_all", "random_connected_graph", "solve", "tied_pairs", "write_graph",
]
