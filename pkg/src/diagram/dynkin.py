"""
Braiding matrices of diagonal type and their generalized Dynkin diagrams.

A diagram is vertex labeled: two diagrams are equal iff every q_ii and every
q̃_ij agrees, with no quotient by vertex permutations. Edges with q̃_ij = 1 are
stored as 1; absence is only a text convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..errors import InvalidArgument
from ..scalar import ONE, UnityRoot

DegreeVector = Tuple[int, ...]


def edge_pairs(rank: int) -> List[Tuple[int, int]]:
    """Index pairs i < j in lexicographic order."""
    return list(combinations(range(rank), 2))


def simple_root(rank: int, i: int) -> DegreeVector:
    return tuple(1 if k == i else 0 for k in range(rank))


@dataclass(frozen=True)
class BraidingMatrix:
    """θ×θ matrix (q_ij) of roots of unity."""

    entries: Tuple[Tuple[UnityRoot, ...], ...]

    def __post_init__(self):
        rank = len(self.entries)
        if rank < 1 or any(len(row) != rank for row in self.entries):
            raise InvalidArgument("braiding matrix must be square and non-empty")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[UnityRoot]]) -> "BraidingMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> UnityRoot:
        i, j = index
        return self.entries[i][j]

    def transpose(self) -> "BraidingMatrix":
        return BraidingMatrix(tuple(zip(*self.entries)))


@dataclass(frozen=True)
class DynkinDiagram:
    """
    Twist class of a braiding matrix.

    Attributes:
        vertices: q_ii for each vertex
        edges: q̃_ij for i < j, in ``edge_pairs`` order
    """

    vertices: Tuple[UnityRoot, ...]
    edges: Tuple[UnityRoot, ...]

    def __post_init__(self):
        rank = len(self.vertices)
        if rank < 1:
            raise InvalidArgument("diagram must have at least one vertex")
        if len(self.edges) != rank * (rank - 1) // 2:
            raise InvalidArgument(
                f"rank {rank} diagram needs {rank * (rank - 1) // 2} edge labels, "
                f"got {len(self.edges)}"
            )

    @classmethod
    def from_labels(cls, vertices: Sequence[UnityRoot], edges: dict) -> "DynkinDiagram":
        """
        Build from vertex labels and a sparse ``{(i, j): q̃}`` map (0-based).

        Missing pairs mean q̃ = 1.
        """
        rank = len(vertices)
        normalized = {}
        for (i, j), value in edges.items():
            if i == j or not (0 <= i < rank and 0 <= j < rank):
                raise InvalidArgument(f"bad edge ({i}, {j}) for rank {rank}")
            normalized[(min(i, j), max(i, j))] = value
        return cls(
            tuple(vertices),
            tuple(normalized.get(pair, ONE) for pair in edge_pairs(rank)),
        )

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> UnityRoot:
        return self.vertices[i]

    def edge(self, i: int, j: int) -> UnityRoot:
        """q̃_ij for i != j (symmetric)."""
        if i == j:
            raise InvalidArgument("edge label needs two distinct vertices")
        if i > j:
            i, j = j, i
        n = self.rank
        if not (0 <= i and j < n):
            raise InvalidArgument(f"vertex index out of range for rank {n}")
        # position of (i, j) in lexicographic pair order
        return self.edges[i * (2 * n - i - 1) // 2 + (j - i - 1)]

    def labeled_edges(self) -> Iterator[Tuple[int, int, UnityRoot]]:
        for (i, j), value in zip(edge_pairs(self.rank), self.edges):
            yield i, j, value

    def neighbours(self, i: int) -> List[int]:
        return [j for j in range(self.rank) if j != i and not self.edge(i, j).is_one()]

    def __str__(self) -> str:
        from .text import format_diagram
        return format_diagram(self)


def to_diagram(m: BraidingMatrix) -> DynkinDiagram:
    """q_ii copied, q̃_ij = q_ij·q_ji."""
    rank = m.rank
    return DynkinDiagram(
        tuple(m[i, i] for i in range(rank)),
        tuple(m[i, j] * m[j, i] for i, j in edge_pairs(rank)),
    )


def standard_rep(d: DynkinDiagram) -> BraidingMatrix:
    """Upper-triangular representative: q_ij = q̃_ij for i < j, q_ji = 1."""
    rank = d.rank
    rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            if i == j:
                row.append(d.vertex(i))
            elif i < j:
                row.append(d.edge(i, j))
            else:
                row.append(ONE)
        rows.append(tuple(row))
    return BraidingMatrix(tuple(rows))


def subdiagram(d: DynkinDiagram, indices: Iterable[int]) -> DynkinDiagram:
    """Restriction to the given vertices, order preserved (0-based)."""
    chosen = sorted(set(indices))
    if not chosen:
        raise InvalidArgument("subdiagram needs at least one vertex")
    if chosen[0] < 0 or chosen[-1] >= d.rank:
        raise InvalidArgument(f"subdiagram index out of range for rank {d.rank}")
    return DynkinDiagram(
        tuple(d.vertex(i) for i in chosen),
        tuple(d.edge(chosen[a], chosen[b]) for a, b in edge_pairs(len(chosen))),
    )


def is_connected(d: DynkinDiagram) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in d.neighbours(i):
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    return len(seen) == d.rank


def degree_q(
    d: DynkinDiagram, a: Sequence[int], b: Sequence[int]
) -> Tuple[UnityRoot, UnityRoot, UnityRoot]:
    """
    Bilinear extension of the braiding to degree vectors.

    Returns:
        (q_aa, q̃_ab, q_bb), i.e. the rank-2 diagram spanned by degrees a and b
    """
    rank = d.rank
    if len(a) != rank or len(b) != rank:
        raise InvalidArgument(f"degree vectors must have length {rank}")
    return _self_pairing(d, a), _cross_pairing(d, a, b), _self_pairing(d, b)


def _self_pairing(d: DynkinDiagram, a: Sequence[int]) -> UnityRoot:
    value = ONE
    for i, q in enumerate(d.vertices):
        if a[i]:
            value = value * q ** (a[i] * a[i])
    for i, j, q in d.labeled_edges():
        if a[i] and a[j]:
            value = value * q ** (a[i] * a[j])
    return value


def _cross_pairing(d: DynkinDiagram, a: Sequence[int], b: Sequence[int]) -> UnityRoot:
    value = ONE
    for i, q in enumerate(d.vertices):
        if a[i] and b[i]:
            value = value * q ** (2 * a[i] * b[i])
    for i, j, q in d.labeled_edges():
        exponent = a[i] * b[j] + a[j] * b[i]
        if exponent:
            value = value * q ** exponent
    return value


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    """Euclidean pairing (α|ω) on Z^θ."""
    return sum(x * y for x, y in zip(a, b))


def height(a: Sequence[int]) -> int:
    return sum(a)
