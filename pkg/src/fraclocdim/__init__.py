"""Exact fractional local metric dimension and fractional metric dimension of graphs."""

__version__ = "0.1.0"

from .graph import (
    CeilingError, DisconnectedGraphError, Graph, GraphError, VertexSet, build_graph, is_bipartite,
    is_connected, load_graph,
)
from .families import FamilySpec, family, make_family, parse_family_string
from .resolve import l_parameter, r_parameter, integer_ldim, integer_dim, local_metric_basis, metric_basis
from .lp import LinearProgram, LpSolution, SolverError, dim_f, ldim_f, solve_lp, format_rational
from .symmetry import is_vertex_transitive, orbits
from .harness import CLAIMS, TheoremReport, run_suite
from .report import emit_report, table_row

__all__ = [
    "CeilingError", "DisconnectedGraphError", "Graph", "GraphError", "VertexSet", "build_graph",
    "is_bipartite", "is_connected", "load_graph", "FamilySpec", "family", "make_family",
    "parse_family_string", "l_parameter", "r_parameter", "integer_ldim", "integer_dim",
    "local_metric_basis", "metric_basis", "LinearProgram", "LpSolution", "SolverError", "dim_f",
    "ldim_f", "solve_lp", "format_rational", "is_vertex_transitive", "orbits", "CLAIMS",
    "TheoremReport", "run_suite", "emit_report", "table_row",
]
