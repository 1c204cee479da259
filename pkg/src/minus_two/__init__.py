"""Exact tools for graphs with least eigenvalue at least -2 and related character-graph checks."""

from .canon import canonical_form, canonical_graph, is_isomorphic
from .chargraph import (Admissibility, AdmissibilityVerdict, LabeledCharGraph, PSL2Params, delta_psl2,
                        regular_chargraph_admissibility)
from .enumeration import EnumerationSpec, enumerate_graphs
from .errors import DomainError, Graph6Error, InternalConsistencyError
from .families import (clebsch, cocktail_party, complete, complete_bipartite, cycle, forbidden_f,
                       generalized_line_graph, line_graph, petersen, schlafli, switch)
from .formats import parse_graph6, to_dot, write_graph6
from .graph import Graph, complement, is_bipartite, is_connected, matching_number, regularity
from .numtheory import factor, primitive_prime_divisor, prop_b_lie_check
from .recognition import Classification, Verdict, classify_regular_connected, is_line_graph, root_graph
from .spectral import IntPolynomial, MinEigClass, char_poly, distinct_eigenvalue_count, is_strongly_regular, min_eig_class
from .suites import SuiteReport, replay, run_suite

__version__ = "0.1.0"

__all__ = [
    "Admissibility", "AdmissibilityVerdict", "Classification", "DomainError", "EnumerationSpec",
    "Graph", "Graph6Error", "IntPolynomial", "InternalConsistencyError", "LabeledCharGraph",
    "MinEigClass", "PSL2Params", "SuiteReport", "Verdict", "canonical_form", "canonical_graph",
    "char_poly", "classify_regular_connected", "clebsch", "cocktail_party", "complement", "complete",
    "complete_bipartite", "cycle", "delta_psl2", "distinct_eigenvalue_count", "enumerate_graphs",
    "factor", "forbidden_f", "generalized_line_graph", "is_bipartite", "is_connected", "is_isomorphic",
    "is_line_graph", "is_strongly_regular", "line_graph", "matching_number", "min_eig_class",
    "parse_graph6", "petersen", "primitive_prime_divisor", "prop_b_lie_check", "regular_chargraph_admissibility",
    "regularity", "replay", "root_graph", "run_suite", "schlafli", "switch", "to_dot", "write_graph6",
]
