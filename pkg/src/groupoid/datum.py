"""
Basic datum (Weyl groupoid graph) exploration and real-root closure.

Nodes are labeled diagrams reached from the start by reflections, in BFS
order with vertices tried in increasing index; node 0 is the start. Real roots
are transported along edges by s_i until every node's set is closed.
"""

from __future__ import annotations

import json
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple, Union

from ..cartan import Blocked, cartan_row
from ..config import Bounds, DEFAULT_BOUNDS
from ..diagram import DynkinDiagram, format_diagram, simple_root
from ..errors import PreconditionViolation
from .reflection import reflect, s_map

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]


# ============================================================================
# STATUS
# ============================================================================

@dataclass(frozen=True)
class Complete:
    def describe(self) -> str:
        return "complete"


@dataclass(frozen=True)
class BlockedAt:
    node: int
    vertex: int
    reason: str

    def describe(self) -> str:
        return f"blocked at node {self.node}, vertex {self.vertex + 1} ({self.reason})"


@dataclass(frozen=True)
class BoundExceeded:
    which: str

    def describe(self) -> str:
        return f"bound exceeded: {self.which}"


DatumStatus = Union[Complete, BlockedAt, BoundExceeded]


# ============================================================================
# BASIC DATUM
# ============================================================================

@dataclass
class BasicDatum:
    """
    Explored Weyl groupoid.

    Attributes:
        nodes: Diagrams in discovery order (node 0 is the start)
        edges: (node, vertex) -> node; involutive
        depth: BFS distance from node 0
        parent: (previous node, vertex) on a BFS spanning tree, None for node 0
        roots: Positive real roots per node (empty when not computed)
        status: Complete, BlockedAt or BoundExceeded
        graph_complete: every node has all its reflections explored
    """
    nodes: List[DynkinDiagram] = field(default_factory=list)
    index: Dict[DynkinDiagram, int] = field(default_factory=dict)
    edges: Dict[Tuple[int, int], int] = field(default_factory=dict)
    depth: List[int] = field(default_factory=list)
    parent: List[Optional[Tuple[int, int]]] = field(default_factory=list)
    roots: List[Set[Root]] = field(default_factory=list)
    status: DatumStatus = field(default_factory=Complete)
    graph_complete: bool = False

    @property
    def rank(self) -> int:
        return self.nodes[0].rank

    @property
    def is_complete(self) -> bool:
        return isinstance(self.status, Complete)

    def add(self, d: DynkinDiagram, depth: int, parent: Optional[Tuple[int, int]]) -> int:
        self.index[d] = len(self.nodes)
        self.nodes.append(d)
        self.depth.append(depth)
        self.parent.append(parent)
        return len(self.nodes) - 1

    def path_to(self, x: int) -> Tuple[int, ...]:
        """Vertex labels of the spanning-tree path from node 0 to node x."""
        labels = []
        while self.parent[x] is not None:
            x, label = self.parent[x]
            labels.append(label)
        return tuple(reversed(labels))

    def edge_list(self) -> List[Tuple[int, int, int]]:
        """Each undirected edge once, as (x, vertex, y) with x <= y."""
        return sorted((x, i, y) for (x, i), y in self.edges.items() if x <= y)

    def total_roots(self) -> int:
        return sum(len(r) for r in self.roots)


def explore(d: DynkinDiagram, bounds: Bounds = None, with_roots: bool = True) -> BasicDatum:
    """
    Breadth-first closure of d under all reflections.

    Args:
        d: Start diagram
        bounds: Exploration bounds (defaults to configuration)
        with_roots: Also compute the real-root closure

    Returns:
        BasicDatum; bounds hits and blocked reflections are recorded as status
    """
    bounds = bounds or DEFAULT_BOUNDS
    datum = BasicDatum()
    datum.add(d, 0, None)
    queue = deque([0])

    while queue:
        x = queue.popleft()
        node = datum.nodes[x]
        for i in range(node.rank):
            if (x, i) in datum.edges:
                continue
            image = reflect(node, i)
            if isinstance(image, Blocked):
                datum.status = BlockedAt(x, i, image.reason.value)
                return datum
            y = datum.index.get(image)
            if y is None:
                if len(datum.nodes) >= bounds.max_nodes:
                    datum.status = BoundExceeded("max_nodes")
                    logger.debug("explore: max_nodes=%d reached", bounds.max_nodes)
                    return transport_roots(datum, bounds) if with_roots else datum
                y = datum.add(image, datum.depth[x] + 1, (x, i))
                queue.append(y)
            datum.edges[(x, i)] = y
            datum.edges[(y, i)] = x

    datum.graph_complete = True
    return transport_roots(datum, bounds) if with_roots else datum


def transport_roots(datum: BasicDatum, bounds: Bounds = None) -> BasicDatum:
    """
    Transport real roots along explored edges until closed or bounded.

    Raises:
        PreconditionViolation: s_i sent a real root other than α_i to a
            non-positive vector; the edges do not belong to one groupoid
    """
    bounds = bounds or DEFAULT_BOUNDS
    rank = datum.rank
    simple = [simple_root(rank, i) for i in range(rank)]
    datum.roots = [set(simple) for _ in datum.nodes]
    rows = [[cartan_row(node, i) for i in range(rank)] for node in datum.nodes]

    pending = deque((x, r) for x in range(len(datum.nodes)) for r in simple)
    total = rank * len(datum.nodes)
    while pending:
        x, root = pending.popleft()
        for i in range(rank):
            y = datum.edges.get((x, i))
            if y is None or root == simple[i]:
                continue
            image = s_map(rows[x][i], i, root)
            if image in datum.roots[y]:
                continue
            if min(image) < 0:
                raise PreconditionViolation(
                    f"root {root} at node {x} maps to {image} at node {y} under s_{i + 1}"
                )
            if max(image) > bounds.max_root_height:
                datum.status = _exceeded(datum, "max_root_height")
                return datum
            datum.roots[y].add(image)
            total += 1
            if total > bounds.max_roots:
                datum.status = _exceeded(datum, "max_roots")
                return datum
            pending.append((y, image))
    return datum


def _exceeded(datum: BasicDatum, which: str) -> BoundExceeded:
    if isinstance(datum.status, BoundExceeded):
        return BoundExceeded(f"{datum.status.which}+{which}")
    return BoundExceeded(which)


# ============================================================================
# EXPORT
# ============================================================================

def to_dot(datum: BasicDatum, name: str = "basic_datum") -> str:
    """DOT text: nodes are canonical diagram prints, edge labels 1-based vertices."""
    lines = [f"graph {name} {{"]
    for x, node in enumerate(datum.nodes):
        lines.append(f'    n{x} [label="{format_diagram(node)}"];')
    for x, i, y in datum.edge_list():
        lines.append(f'    n{x} -- n{y} [label="{i + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(datum: BasicDatum) -> str:
    payload = {
        "status": datum.status.describe(),
        "nodes": [format_diagram(node) for node in datum.nodes],
        "edges": [[x, i + 1, y] for x, i, y in datum.edge_list()],
        "roots": [sorted(list(r) for r in roots) for roots in datum.roots],
    }
    return json.dumps(payload, indent=2)
