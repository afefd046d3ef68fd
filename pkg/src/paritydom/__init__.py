"""Odd and even dominating sets, closed-neighbourhood nullity and GF(2) linear algebra."""

from .domination import (
    CorollaryCheck,
    DominationReport,
    InvariantError,
    JoinAnalysis,
    ParitySolution,
    PreconditionError,
    analyze_join,
    corollary_suite,
    even_dominating_basis,
    join_nullity_mary,
    join_nullity_pairwise,
    null_difference,
    null_vertices,
    nullity,
    odd_degree_intersection_parity,
    odd_dominating_avoiding,
    odd_dominating_set,
    parity_theorem_check,
    rank_of,
    solve_parity,
)
from .formats import ParseError, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .gf2 import Gf2Matrix, Gf2Vector, RrefResult
from .graph import Graph, VertexSet, closed_neighborhood_matrix, delete_vertex, join

__version__ = "0.1.0"
