"""
Rank-2 list membership.

Three modes:
- ``table``: rows of the shipped table only
- ``closure``: finiteness of the rank-2 real-root closure only
- ``hybrid``: table first, every table miss confirmed by closure
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Optional, Tuple

from ..config import MEMBERSHIP_MODE, MEMBERSHIP_MODES, Bounds, DEFAULT_BOUNDS
from ..errors import ConfigurationError
from ..groupoid import Outcome, finiteness
from ..scalar import UnityRoot, format_scalar
from .table import Rank2Table, Triple, load_rank2_table, rank2

logger = logging.getLogger(__name__)


class MatchStatus(Enum):
    MATCHED = "matched"
    NO_MATCH = "no_match"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class MatchResult:
    """
    Outcome of a membership query.

    Attributes:
        status: matched, no_match or unknown (closure undecided)
        rows: Ids of the matching rows
        parameters: ``row:q=k/N`` for every parametric solution
        source: disconnected | table | closure
    """
    status: MatchStatus
    rows: Tuple[str, ...] = ()
    parameters: Tuple[str, ...] = ()
    source: str = ""

    @property
    def matched(self) -> bool:
        return self.status is MatchStatus.MATCHED

    @property
    def is_no_match(self) -> bool:
        return self.status is MatchStatus.NO_MATCH

    def describe(self) -> str:
        if self.status is not MatchStatus.MATCHED:
            return self.status.value
        detail = ", ".join(self.parameters or self.rows)
        return f"matched ({self.source}{': ' + detail if detail else ''})"


DISCONNECTED = MatchResult(MatchStatus.MATCHED, source="disconnected")
NO_MATCH = MatchResult(MatchStatus.NO_MATCH)


class RankTwoOracle:
    """Membership oracle with a per-instance cache keyed by the unordered triple."""

    def __init__(
        self,
        table: Optional[Rank2Table] = None,
        mode: str = MEMBERSHIP_MODE,
        bounds: Bounds = None,
    ):
        if mode not in MEMBERSHIP_MODES:
            raise ConfigurationError(f"unknown membership mode {mode!r}")
        self.mode = mode
        self.bounds = bounds or DEFAULT_BOUNDS
        self._table = table
        self._cache: Dict[Triple, MatchResult] = {}
        self.table_misses = 0

    @property
    def table(self) -> Rank2Table:
        if self._table is None:
            self._table = load_rank2_table()
        return self._table

    def match(self, v1: UnityRoot, e: UnityRoot, v2: UnityRoot) -> MatchResult:
        if e.is_one():
            return DISCONNECTED
        key = min((v1, e, v2), (v2, e, v1))
        result = self._cache.get(key)
        if result is None:
            result = self._decide(key)
            self._cache[key] = result
        return result

    def _decide(self, triple: Triple) -> MatchResult:
        if self.mode == "closure":
            return self._by_closure(triple)

        result = self._by_table(triple)
        if result.matched or self.mode == "table":
            return result

        confirmed = self._by_closure(triple)
        if confirmed.matched:
            self.table_misses += 1
            logger.warning(
                "table miss: (%s) has a finite rank-2 closure",
                ", ".join(format_scalar(x) for x in triple),
            )
        return confirmed

    def _by_table(self, triple: Triple) -> MatchResult:
        v1, e, v2 = triple
        rows = set(self.table.finite.get(triple, ()))
        parameters = set()
        for row in self.table.parametric_rows:
            for oriented in ((v1, e, v2), (v2, e, v1)):
                for q, zeta in row.solve(oriented):
                    rows.add(row.id)
                    suffix = f",z3={format_scalar(zeta)}" if len(row.zetas()) > 1 else ""
                    parameters.add(f"{row.id}:q={format_scalar(q)}{suffix}")
        if not rows:
            return NO_MATCH
        return MatchResult(MatchStatus.MATCHED, tuple(sorted(rows)), tuple(sorted(parameters)), "table")

    def _by_closure(self, triple: Triple) -> MatchResult:
        verdict = finiteness(rank2(*triple), self.bounds)
        if verdict.outcome is Outcome.FINITE_ROOTS:
            return MatchResult(MatchStatus.MATCHED, source="closure")
        if verdict.outcome is Outcome.INFINITE_GK:
            return NO_MATCH
        return MatchResult(MatchStatus.UNKNOWN, source="closure")


@lru_cache(maxsize=None)
def default_oracle(mode: str = MEMBERSHIP_MODE) -> RankTwoOracle:
    return RankTwoOracle(mode=mode)


def in_list_rank2(
    v1: UnityRoot, e: UnityRoot, v2: UnityRoot, oracle: Optional[RankTwoOracle] = None
) -> MatchResult:
    """
    Is the rank-2 diagram (v1, e, v2) in the list?

    e = 1 is always matched; the answer is symmetric in v1 and v2.
    """
    return (oracle or default_oracle()).match(v1, e, v2)
