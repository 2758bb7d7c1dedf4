"""
Survivor reports of the enumeration harness.

Reports from different workers merge associatively; ``finalize`` sorts
everything so the serialised report does not depend on the worker count.
"""

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

SHAPES = ("line", "triangle")
FATES = ("killed", "in_list", "survivor", "deferred")


@dataclass(frozen=True)
class CandidateOutcome:
    """
    What happened to one enumerated diagram.

    Attributes:
        diagram: Canonical text of the candidate
        fate: killed | in_list | survivor | deferred
        label: Certificate kind (killed), survivor label, or deferral reason
        certificate: Verdict dict of a kill, for replay
    """
    diagram: str
    fate: str
    label: str = ""
    certificate: Optional[Dict[str, Any]] = None


@dataclass(frozen=True)
class Survivor:
    diagram: str
    label: str
    nodes: int = 0


@dataclass
class SurvivorReport:
    """
    Aggregated outcome of one enumeration run.

    Invariant: total_candidates = sum(killed) + in_list + len(survivors) + deferred.
    """
    shape: str
    total_candidates: int = 0
    killed: Dict[str, int] = field(default_factory=dict)
    in_list: int = 0
    deferred: int = 0
    survivors: List[Survivor] = field(default_factory=list)
    kills: List[Dict[str, Any]] = field(default_factory=list)
    replay: Dict[str, Any] = field(default_factory=dict)
    runtime: Dict[str, Any] = field(default_factory=dict)

    def record(self, outcome: CandidateOutcome, nodes: int = 0) -> None:
        self.total_candidates += 1
        if outcome.fate == "killed":
            self.killed[outcome.label] = self.killed.get(outcome.label, 0) + 1
            self.kills.append({"diagram": outcome.diagram, "verdict": outcome.certificate})
        elif outcome.fate == "in_list":
            self.in_list += 1
        elif outcome.fate == "deferred":
            self.deferred += 1
        else:
            self.survivors.append(Survivor(outcome.diagram, outcome.label, nodes))

    def merge(self, other: "SurvivorReport") -> "SurvivorReport":
        merged = SurvivorReport(self.shape)
        merged.total_candidates = self.total_candidates + other.total_candidates
        merged.killed = dict(Counter(self.killed) + Counter(other.killed))
        merged.in_list = self.in_list + other.in_list
        merged.deferred = self.deferred + other.deferred
        merged.survivors = self.survivors + other.survivors
        merged.kills = self.kills + other.kills
        return merged

    def finalize(self) -> "SurvivorReport":
        self.killed = dict(sorted(self.killed.items()))
        self.survivors.sort(key=lambda s: s.diagram)
        self.kills.sort(key=lambda k: k["diagram"])
        return self

    @property
    def total_killed(self) -> int:
        return sum(self.killed.values())

    @property
    def conserved(self) -> bool:
        return self.total_candidates == (
            self.total_killed + self.in_list + len(self.survivors) + self.deferred
        )

    def label_counts(self) -> Dict[str, int]:
        return dict(sorted(Counter(s.label for s in self.survivors).items()))

    def to_dict(self, include_kills: bool = False) -> Dict[str, Any]:
        data = asdict(self)
        if not include_kills:
            data.pop("kills")
        return data

    def to_json(self, include_kills: bool = False) -> str:
        return json.dumps(self.to_dict(include_kills), indent=2, sort_keys=True)
