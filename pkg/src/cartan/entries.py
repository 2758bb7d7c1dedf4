"""
Cartan integers of a diagram and the Cartan / standard type tests.

c_ij = -min{n >= 0 : (n+1)_{q_ii} = 0 or q_ii^n q̃_ij = 1}; when no such n
exists the vertex cannot be reflected and a ``Blocked`` value is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import TYPE_CHECKING, Optional, Tuple, Union

from ..config import DEFAULT_BOUNDS
from ..diagram import DynkinDiagram
from ..errors import InvalidArgument, PreconditionViolation
from ..scalar import qnum_is_zero
from .matrix import GCM

if TYPE_CHECKING:
    from ..groupoid.datum import BasicDatum


class BlockedReason(Enum):
    NO_SOLUTION = "no_solution"  # q_ii = 1 and q̃_ij != 1
    SEARCH_CAP = "search_cap"    # order of q_ii beyond the fallback cap


@dataclass(frozen=True)
class Blocked:
    """Vertex ``vertex`` admits no Cartan integer towards ``partner``."""
    vertex: int
    partner: Optional[int] = None
    reason: BlockedReason = BlockedReason.NO_SOLUTION

    def describe(self) -> str:
        return f"vertex {self.vertex + 1} blocked ({self.reason.value})"


def cartan_entry(
    d: DynkinDiagram, i: int, j: int, search_cap: int = None
) -> Union[int, Blocked]:
    """
    Cartan integer c_ij (0-based vertices).

    Args:
        d: Diagram
        i, j: Distinct vertices
        search_cap: Fallback cap on n (defaults to the configured bound)

    Returns:
        Non-positive integer, or Blocked
    """
    if i == j:
        raise InvalidArgument("c_ii is 2 by definition")
    qii = d.vertex(i)
    edge = d.edge(i, j)
    if qii.is_one():
        return 0 if edge.is_one() else Blocked(i, j, BlockedReason.NO_SOLUTION)

    cap = search_cap if search_cap is not None else DEFAULT_BOUNDS.cartan_search_cap
    if qii.den > cap:
        return Blocked(i, j, BlockedReason.SEARCH_CAP)

    power = edge
    for n in range(qii.den):
        if power.is_one() or qnum_is_zero(n + 1, qii):
            return -n
        power = power * qii
    # unreachable: (ord q_ii)_{q_ii} = 0
    return Blocked(i, j, BlockedReason.NO_SOLUTION)


@lru_cache(maxsize=1 << 16)
def cartan_row(d: DynkinDiagram, i: int) -> Union[Tuple[int, ...], Blocked]:
    """Row i of the Cartan matrix, or Blocked."""
    row = []
    for j in range(d.rank):
        if j == i:
            row.append(2)
            continue
        entry = cartan_entry(d, i, j)
        if isinstance(entry, Blocked):
            return entry
        row.append(entry)
    return tuple(row)


def cartan_matrix(d: DynkinDiagram) -> Union[GCM, Blocked]:
    """Assemble C^q; Blocked reports the first vertex that cannot be reflected."""
    rows = []
    for i in range(d.rank):
        row = cartan_row(d, i)
        if isinstance(row, Blocked):
            return row
        rows.append(row)
    return GCM(tuple(rows))


def is_cartan_type(d: DynkinDiagram) -> bool:
    """q_ii^{c_ij} = q̃_ij for every ordered pair i != j."""
    for i in range(d.rank):
        row = cartan_row(d, i)
        if isinstance(row, Blocked):
            return False
        for j in range(d.rank):
            if j != i and d.vertex(i) ** row[j] != d.edge(i, j):
                return False
    return True


def is_standard(datum: "BasicDatum") -> bool:
    """All nodes of a fully explored basic datum share one Cartan matrix."""
    if not datum.graph_complete:
        raise PreconditionViolation(
            f"is_standard needs a complete basic datum (status: {datum.status.describe()})"
        )
    matrices = {cartan_matrix(node) for node in datum.nodes}
    return len(matrices) == 1 and not isinstance(next(iter(matrices)), Blocked)
