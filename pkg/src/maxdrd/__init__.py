"""Exact computation of maximal double Roman domination and related parameters."""

from .graph import Graph, GraphError, build_graph, structure
from .labeling import ALL_KINDS, Labeling, ParamKind, validate, weight
from .solver import SearchBudgetExceeded, SolveResult, enumerate_optimal, solve_exact

__all__ = [
    "ALL_KINDS", "Graph", "GraphError", "Labeling", "ParamKind", "SearchBudgetExceeded",
    "SolveResult", "build_graph", "enumerate_optimal", "solve_exact", "structure",
    "validate", "weight",
]
