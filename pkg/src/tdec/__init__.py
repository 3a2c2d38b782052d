"""Total dominator edge chromatic number (TDEC) of simple graphs."""

from .bounds import BoundsReport, bounds_report, cycle_formula, path_formula
from .coloring import EdgeColoring, TdeReport, construct_path_tdec, normalize, validate
from .graph import Graph, SubdividedGraph, build_graph, subdivide
from .solver import SolveResult, SolverOptions, heuristic_upper, solve_exact, tde_feasible

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "EdgeColoring",
    "Graph",
    "SolveResult",
    "SolverOptions",
    "SubdividedGraph",
    "TdeReport",
    "bounds_report",
    "build_graph",
    "construct_path_tdec",
    "cycle_formula",
    "heuristic_upper",
    "normalize",
    "path_formula",
    "solve_exact",
    "subdivide",
    "tde_feasible",
    "validate",
]
