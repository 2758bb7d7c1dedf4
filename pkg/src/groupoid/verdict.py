"""
Classification outcomes and their certificates.

Every InfiniteGK verdict carries a certificate that ``src.quality.replay`` can
re-check from the diagram alone. Certificates store diagrams and scalars in
canonical text so they serialise to JSON unchanged.
"""

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union


class Outcome(Enum):
    FINITE_ROOTS = "FiniteRoots"
    INFINITE_GK = "InfiniteGK"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class BlockedReflection:
    """Vertex ``vertex`` of ``node`` (reached by ``path``) cannot be reflected."""
    node: str
    vertex: int
    path: Tuple[int, ...] = ()
    reason: str = "no_solution"
    kind: str = field(default="BlockedReflection", init=False)


@dataclass(frozen=True)
class StandardAffine:
    gcm: str
    name: Optional[str] = None
    kind: str = field(default="StandardAffine", init=False)


@dataclass(frozen=True)
class StandardIndefiniteIsotropic:
    """Standard datum, indefinite GCM and a real root gamma with q_γγ = 1."""
    gcm: str
    gamma: Tuple[int, ...]
    kind: str = field(default="StandardIndefiniteIsotropic", init=False)


@dataclass(frozen=True)
class CriterionWitness:
    """
    A criterion candidate at ``node`` whose induced rank-2 diagram misses the list.

    ``derived`` is (q_αα, q̃_αβ, q_ββ) in canonical scalar text.
    """
    node: str
    path: Tuple[int, ...]
    criterion: str
    omega: Tuple[int, ...]
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    derived: Tuple[str, str, str]
    kind: str = field(default="CriterionWitness", init=False)


@dataclass(frozen=True)
class SixPointGroupoid:
    node: str
    kind: str = field(default="SixPointGroupoid", init=False)


@dataclass(frozen=True)
class RankTwoSubdiagram:
    """The subdiagram on vertices ``pair`` (0-based) is not in the rank-2 list."""
    pair: Tuple[int, int]
    derived: Tuple[str, str, str]
    kind: str = field(default="RankTwoSubdiagram", init=False)


@dataclass(frozen=True)
class RankThreeSubdiagram:
    """A rank-3 subdiagram of a higher-rank diagram has infinite GK dimension."""
    vertices: Tuple[int, ...]
    subdiagram: str
    inner_kind: str
    kind: str = field(default="RankThreeSubdiagram", init=False)


@dataclass(frozen=True)
class RootGrowth:
    """
    A closed word at the base node whose s-map has infinite order.

    ``sizes`` are the max-abs coordinates of M^t·gamma for t = 0..len-1.
    """
    word: Tuple[int, ...]
    gamma: Tuple[int, ...]
    sizes: Tuple[int, ...]
    kind: str = field(default="RootGrowth", init=False)


Certificate = Union[
    BlockedReflection,
    StandardAffine,
    StandardIndefiniteIsotropic,
    CriterionWitness,
    SixPointGroupoid,
    RankTwoSubdiagram,
    RankThreeSubdiagram,
    RootGrowth,
]


@dataclass
class Verdict:
    """
    Outcome of a classification step.

    Attributes:
        outcome: FiniteRoots, InfiniteGK or Unknown
        certificate: Present iff outcome is InfiniteGK
        roots: Positive real roots per node (FiniteRoots only)
        note: Free-form detail, e.g. which bound was hit
    """
    outcome: Outcome
    certificate: Optional[Certificate] = None
    roots: Optional[Dict[str, Tuple[Tuple[int, ...], ...]]] = None
    note: str = ""

    @classmethod
    def infinite(cls, certificate: Certificate, note: str = "") -> "Verdict":
        return cls(Outcome.INFINITE_GK, certificate=certificate, note=note)

    @classmethod
    def unknown(cls, note: str = "") -> "Verdict":
        return cls(Outcome.UNKNOWN, note=note)

    @property
    def is_infinite(self) -> bool:
        return self.outcome is Outcome.INFINITE_GK

    @property
    def label(self) -> str:
        if self.certificate is None:
            return self.outcome.value
        return f"{self.outcome.value}({self.certificate.kind})"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"outcome": self.outcome.value, "note": self.note}
        if self.certificate is not None:
            data["certificate"] = asdict(self.certificate)
        if self.roots is not None:
            data["roots"] = {node: [list(r) for r in roots] for node, roots in self.roots.items()}
        return data
