"""Extremal graphs for the degree-diameter problem: constructions, certificates and bounds."""

from .graph import Graph, Pseudograph, Digraph, diameter, max_degree, min_degree, average_degree
from .constructions import FAMILIES, ConstructionResult, PreconditionError, BudgetExceededError
from .certify import arboricity_exact, certify_construction

__all__ = [
    "Graph",
    "Pseudograph",
    "Digraph",
    "diameter",
    "max_degree",
    "min_degree",
    "average_degree",
    "FAMILIES",
    "ConstructionResult",
    "PreconditionError",
    "BudgetExceededError",
    "arboricity_exact",
    "certify_construction",
]

__version__ = "0.1.0"
