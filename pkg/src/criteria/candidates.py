"""
Candidate (ω, α, β) triples of the three criteria.

Each candidate names two degrees α, β orthogonal to a functional ω; the
induced rank-2 diagram degree_q(d, α, β) must lie in the rank-2 list whenever
the Nichols algebra has finite GK dimension. Vertices are 0-based; the
applicability strings print them 1-based.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from ..cartan import Blocked, cartan_entry
from ..diagram import DegreeVector, DynkinDiagram, dot, format_diagram
from ..errors import InvalidArgument
from ..groupoid import BlockedReflection

logger = logging.getLogger(__name__)

CRITERIA = ("1", "2", "3", "3ext")


@dataclass(frozen=True)
class CriterionCandidate:
    """
    One choice of functional and degree pair.

    Attributes:
        criterion: 1, 2, 3 or 3ext
        omega: The functional, as a vector of Z^θ
        alpha, beta: Degrees of the two primitive elements
        applicability: The conditions that held when the candidate was emitted
    """
    criterion: str
    omega: DegreeVector
    alpha: DegreeVector
    beta: DegreeVector
    applicability: Tuple[str, ...] = ()

    def __post_init__(self):
        if dot(self.alpha, self.omega) != 0 or dot(self.beta, self.omega) != 0:
            raise InvalidArgument(
                f"criterion {self.criterion}: degrees {self.alpha}, {self.beta} "
                f"are not orthogonal to {self.omega}"
            )


def _combo(*terms: Tuple[int, int]) -> DegreeVector:
    """Sum of coefficient * α_index over (index, coefficient) terms."""
    v = [0, 0, 0]
    for index, coefficient in terms:
        v[index] += coefficient
    return tuple(v)


def _require_rank3(d: DynkinDiagram) -> None:
    if d.rank != 3:
        raise InvalidArgument(f"criteria apply to rank 3 diagrams, got rank {d.rank}")


def blocked_shortcut(d: DynkinDiagram, path: Sequence[int] = ()) -> Optional[BlockedReflection]:
    """
    The first vertex of d without a Cartan entry, as a BlockedReflection.

    The criteria ranges need m_ij at every pair, so a blocked vertex ends the
    search with this record instead of an empty range.
    """
    for i, j in permutations(range(d.rank), 2):
        entry = cartan_entry(d, i, j)
        if isinstance(entry, Blocked):
            return BlockedReflection(
                node=format_diagram(d), vertex=i, path=tuple(path), reason=entry.reason.value
            )
    return None


def _m(d: DynkinDiagram, i: int, j: int) -> int:
    """-c_ij; 0 when vertex i is blocked towards j (see blocked_shortcut)."""
    entry = cartan_entry(d, i, j)
    if isinstance(entry, Blocked):
        logger.debug("m_%d%d undefined: %s", i + 1, j + 1, entry.describe())
        return 0
    return -entry


def criterion1(d: DynkinDiagram) -> List[CriterionCandidate]:
    """α = α_i, β = ℓα_j + α_k, ω = α_j - ℓα_k for 1 <= ℓ <= m_jk."""
    _require_rank3(d)
    found = []
    for i, j, k in permutations(range(3)):
        m = _m(d, j, k)
        for ell in range(1, m + 1):
            found.append(CriterionCandidate(
                criterion="1",
                omega=_combo((j, 1), (k, -ell)),
                alpha=_combo((i, 1)),
                beta=_combo((j, ell), (k, 1)),
                applicability=(f"1<=l={ell}<=m_{j + 1}{k + 1}={m}",),
            ))
    return found


def criterion2(d: DynkinDiagram) -> List[CriterionCandidate]:
    """
    α = α_1 + α_2 + α_3, β = ℓα_i + α_j for 2 <= ℓ <= m_ij.

    Emitted when all three edges are nonzero, or exactly one is trivial.
    """
    _require_rank3(d)
    trivial = [(a, b) for a, b in ((0, 1), (0, 2), (1, 2)) if d.edge(a, b).is_one()]
    if len(trivial) > 1:
        return []
    branch = "all edges nontrivial" if not trivial else (
        f"only q~_{trivial[0][0] + 1}{trivial[0][1] + 1} = 1"
    )

    found = []
    for i, j in permutations(range(3), 2):
        k = 3 - i - j
        m = _m(d, i, j)
        for ell in range(2, m + 1):
            found.append(CriterionCandidate(
                criterion="2",
                omega=_combo((j, ell), (i, -1), (k, -(ell - 1))),
                alpha=(1, 1, 1),
                beta=_combo((i, ell), (j, 1)),
                applicability=(branch, f"2<=l={ell}<=m_{i + 1}{j + 1}={m}"),
            ))
    return found


def criterion3(d: DynkinDiagram) -> List[CriterionCandidate]:
    """
    Base: α = α_i + α_k, β = α_j + α_k, ω = α_i + α_j - α_k.
    Extended: α = nα_i + α_k, β = α_j + α_k, ω = α_i - nα_k + nα_j, 2 <= n <= m_ik.
    """
    _require_rank3(d)
    found = []
    for i, j in permutations(range(3), 2):
        k = 3 - i - j
        if d.edge(i, k).is_one() or d.edge(j, k).is_one():
            continue
        conditions = (f"q~_{i + 1}{k + 1} != 1", f"q~_{j + 1}{k + 1} != 1")
        if i < j:
            found.append(CriterionCandidate(
                criterion="3",
                omega=_combo((i, 1), (j, 1), (k, -1)),
                alpha=_combo((i, 1), (k, 1)),
                beta=_combo((j, 1), (k, 1)),
                applicability=conditions,
            ))
        m = _m(d, i, k)
        for n in range(2, m + 1):
            found.append(CriterionCandidate(
                criterion="3ext",
                omega=_combo((i, 1), (k, -n), (j, n)),
                alpha=_combo((i, n), (k, 1)),
                beta=_combo((j, 1), (k, 1)),
                applicability=conditions + (f"2<=n={n}<=m_{i + 1}{k + 1}={m}",),
            ))
    return found


def all_candidates(d: DynkinDiagram) -> List[CriterionCandidate]:
    """Criteria 1, 2, 3 in that order; the order fixes which witness is reported first."""
    return criterion1(d) + criterion2(d) + criterion3(d)
