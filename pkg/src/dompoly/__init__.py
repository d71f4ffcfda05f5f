"""Exact domination polynomials and the D-equivalence classes of paths."""
from .coeffs import (
    HypothesisError, closed_eval_minus1, d_n_minus_3, d_n_minus_4, d_n_minus_k, d_top,
    encompass_count, gamma_closed, ord3_allowed, path_top_coeffs,
)
from .equivalence import (
    EquivalenceClassReport, canonical_form, candidate_family, d_equivalent, describe,
    enumerate_graphs, equivalence_class_exhaustive, table1_report, verify_path_class,
)
from .graph import (
    Graph, GraphError, StructureProfile, cycle, disjoint_union, from_edge_list, from_graph6,
    h_graph, is_in_Gk, path, pendant_cycle, structure_profile, tilde_path, to_graph6,
)
from .poly import (
    CapExceeded, DomPolynomial, cycle_poly, derivative, dom_poly, dom_poly_bruteforce,
    evaluate, gamma, is_dominating, minus_two_alternation_check, ord_p, path_poly,
)

__version__ = "0.1.0"
