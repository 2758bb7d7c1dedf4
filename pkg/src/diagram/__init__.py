"""Generalized Dynkin diagrams of diagonal type."""

from .dynkin import (
    BraidingMatrix,
    DynkinDiagram,
    DegreeVector,
    edge_pairs,
    simple_root,
    to_diagram,
    standard_rep,
    subdiagram,
    is_connected,
    degree_q,
    dot,
    height,
)
from .text import parse_diagram, format_diagram
from .symmetry import (
    permute,
    reverse,
    galois,
    galois_conjugates,
    all_permutations,
    canonical_key,
    line_key,
    same_up_to,
)

__all__ = [
    "BraidingMatrix",
    "DynkinDiagram",
    "DegreeVector",
    "edge_pairs",
    "simple_root",
    "to_diagram",
    "standard_rep",
    "subdiagram",
    "is_connected",
    "degree_q",
    "dot",
    "height",
    "parse_diagram",
    "format_diagram",
    "permute",
    "reverse",
    "galois",
    "galois_conjugates",
    "all_permutations",
    "canonical_key",
    "line_key",
    "same_up_to",
]
