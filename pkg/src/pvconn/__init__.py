"""Exact proper vertex-connection parameters of small graphs."""

from .graph import Graph, build_graph, parse_graph6, encode_graph6
from .coloring import VertexColoring, EdgeColoring, Verdict
from .solvers import (
    SolveResult,
    chromatic_number_exact,
    pc_k_exact,
    pvc_exact,
    pvc_k_exact,
    spvc_exact,
    srvc_exact,
)

__all__ = [
    "Graph", "build_graph", "parse_graph6", "encode_graph6",
    "VertexColoring", "EdgeColoring", "Verdict", "SolveResult",
    "chromatic_number_exact", "pc_k_exact", "pvc_exact", "pvc_k_exact", "spvc_exact", "srvc_exact",
]
