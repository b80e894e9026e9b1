"""Independent sets of size (n+k)/3 in triangle-free plane graphs."""

from .errors import BudgetExceeded, InvariantViolation, NotTriangleFree, TfpmisError
from .graph import AbstractGraph
from .oracle import OracleBudget, alpha_exact, verify_independent
from .plane_graph import PlaneGraph, build_plane_graph, parse_pg, format_pg
from .solver import SolverConfig, analyze, decide, find_set

__all__ = [
    "AbstractGraph", "BudgetExceeded", "InvariantViolation", "NotTriangleFree",
    "OracleBudget", "PlaneGraph", "SolverConfig", "TfpmisError", "alpha_exact",
    "analyze", "build_plane_graph", "decide", "find_set", "format_pg", "parse_pg",
    "verify_independent",
]
