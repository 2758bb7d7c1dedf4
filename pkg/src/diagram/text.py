"""
Text grammar for diagrams.

One line: ``θ; v1 v2 ... vθ; ij:label ...`` with scalar literals as labels.
Vertex indices in edge keys are 1-based, written ``12`` or ``1,2``.
Unlisted edges mean q̃ = 1.
"""

import re
from typing import Dict, List, Tuple

from ..errors import ParseError
from ..scalar import UnityRoot, format_scalar, parse_scalar
from .dynkin import DynkinDiagram

_EDGE_KEY = re.compile(r"^(?:(\d),?(\d)|(\d+),(\d+))$")


def _tokens(section: str, offset: int) -> List[Tuple[str, int]]:
    return [(m.group(0), offset + m.start()) for m in re.finditer(r"\S+", section)]


def parse_diagram(text: str) -> DynkinDiagram:
    """
    Parse the one-line diagram grammar.

    Raises:
        ParseError: malformed literal, rank mismatch or bad edge key
    """
    parts = text.split(";")
    if len(parts) not in (2, 3):
        raise ParseError("expected 'rank; vertices; edges'", text)

    rank_text = parts[0].strip()
    if not rank_text.isdigit() or int(rank_text) < 1:
        raise ParseError("rank must be a positive integer", text, 0)
    rank = int(rank_text)

    vertex_offset = len(parts[0]) + 1
    vertices = [parse_scalar(tok, pos) for tok, pos in _tokens(parts[1], vertex_offset)]
    if len(vertices) != rank:
        raise ParseError(f"rank {rank} but {len(vertices)} vertex labels", text, vertex_offset)

    edges: Dict[Tuple[int, int], UnityRoot] = {}
    if len(parts) == 3:
        edge_offset = vertex_offset + len(parts[1]) + 1
        for token, position in _tokens(parts[2], edge_offset):
            key, sep, label = token.partition(":")
            match = _EDGE_KEY.match(key)
            if not sep or match is None:
                raise ParseError("malformed edge", token, position)
            a, b = (match.group(1), match.group(2)) if match.group(1) else (match.group(3), match.group(4))
            i, j = int(a) - 1, int(b) - 1
            if i == j or not (0 <= i < rank and 0 <= j < rank):
                raise ParseError(f"edge vertex out of range for rank {rank}", token, position)
            pair = (min(i, j), max(i, j))
            if pair in edges:
                raise ParseError("edge given twice", token, position)
            edges[pair] = parse_scalar(label, position + len(key) + 1)

    return DynkinDiagram.from_labels(vertices, edges)


def format_diagram(d: DynkinDiagram) -> str:
    """Canonical print; parse_diagram(format_diagram(d)) == d."""
    vertices = " ".join(format_scalar(q) for q in d.vertices)
    joiner = "" if d.rank <= 9 else ","
    edges = " ".join(
        f"{i + 1}{joiner}{j + 1}:{format_scalar(q)}"
        for i, j, q in d.labeled_edges()
        if not q.is_one()
    )
    return f"{d.rank}; {vertices};" + (f" {edges}" if edges else "")
