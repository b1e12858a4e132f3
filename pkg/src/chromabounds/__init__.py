"""Exact chromatic polynomials, chromatic roots, and certified checks of the
monotonicity and log-derivative bounds they satisfy."""

from .chromatic import (ResourceLimitError, chromatic_broken_cycle, chromatic_deletion_contraction,
                        chromatic_inclusion_exclusion, chromatic_number, chromatic_polynomial,
                        count_colorings_bruteforce, mean_color_number_bruteforce, whitney_coefficients)
from .graph import (EdgeOrdering, Graph, Graph6Error, GraphError, contract_edge, delete_edge,
                    enumerate_labeled_graphs, generate, make_graph, parse_graph6, structural_queries,
                    to_graph6)
from .poly import IntPolynomial
from .roots import RootSet, find_roots, newton_power_sums, rho_upper_bound

__all__ = [
    "ResourceLimitError", "chromatic_broken_cycle", "chromatic_deletion_contraction",
    "chromatic_inclusion_exclusion", "chromatic_number", "chromatic_polynomial",
    "count_colorings_bruteforce", "mean_color_number_bruteforce", "whitney_coefficients",
    "EdgeOrdering", "Graph", "Graph6Error", "GraphError", "contract_edge", "delete_edge",
    "enumerate_labeled_graphs", "generate", "make_graph", "parse_graph6", "structural_queries",
    "to_graph6", "IntPolynomial", "RootSet", "find_roots", "newton_power_sums", "rho_upper_bound",
]

__version__ = "0.1.0"
