"""Generalized Sierpinski graphs and exact (double) Roman domination."""
from ._kernels import BACKENDS, DEFAULT_BACKEND
from .domination import (
    Assignment,
    Parameter,
    SolveResult,
    Verdict,
    brute_force,
    exact_gamma_dr,
    exact_gamma_r,
    is_drdf,
    is_rdf,
    weight,
)
from .graph import Graph, complete_graph, emit_graph, independence_number, parse_graph
from .sierpinski import SierpinskiGraph, extreme_vertices, sierpinski

__version__ = "0.1.0"
