"""
Applying the criteria across a basic datum.

Nodes are visited in BFS order and candidates in generation order, so the
first witness found is deterministic.
"""

import logging
from typing import Iterator, Optional, Tuple, Union

from ..config import Bounds, DEFAULT_BOUNDS
from ..diagram import DynkinDiagram, degree_q, format_diagram
from ..errors import InvalidArgument
from ..groupoid import (
    BasicDatum,
    BlockedAt,
    BlockedReflection,
    CriterionWitness,
    RankTwoSubdiagram,
    SixPointGroupoid,
    Verdict,
    datum_verdict,
    explore,
    six_point_rule,
    standard_verdict,
)
from ..ranktwo import MatchStatus, RankTwoOracle, default_oracle
from ..scalar import format_scalar
from .candidates import CriterionCandidate, all_candidates, blocked_shortcut

logger = logging.getLogger(__name__)


def _derived_text(triple) -> Tuple[str, str, str]:
    return tuple(format_scalar(x) for x in triple)


def subdiagram_verdict(d: DynkinDiagram, oracle: RankTwoOracle) -> Optional[Verdict]:
    """InfiniteGK when some two-vertex subdiagram of d misses the rank-2 list."""
    for a in range(d.rank):
        for b in range(a + 1, d.rank):
            triple = (d.vertex(a), d.edge(a, b), d.vertex(b))
            if oracle.match(*triple).is_no_match:
                return Verdict.infinite(RankTwoSubdiagram(pair=(a, b), derived=_derived_text(triple)))
    return None


def node_subdiagram_candidates(rank: int) -> Iterator[CriterionCandidate]:
    for a in range(rank):
        for b in range(a + 1, rank):
            omega = tuple(1 if k not in (a, b) else 0 for k in range(rank))
            yield CriterionCandidate(
                criterion="subdiagram",
                omega=omega,
                alpha=tuple(1 if k == a else 0 for k in range(rank)),
                beta=tuple(1 if k == b else 0 for k in range(rank)),
            )


def evaluate_candidate(node: DynkinDiagram, candidate: CriterionCandidate, oracle: RankTwoOracle):
    """(derived triple, match result) for one candidate at one node."""
    derived = degree_q(node, candidate.alpha, candidate.beta)
    return derived, oracle.match(*derived)


def criteria_witness(
    datum: BasicDatum,
    oracle: RankTwoOracle,
    reflection_depth: Optional[int] = None,
    node_subdiagrams: bool = False,
) -> Optional[Union[CriterionWitness, BlockedReflection]]:
    """
    First candidate over the explored nodes whose derived diagram is a NoMatch.

    A node with a blocked vertex (an unexplored frontier node) yields its
    BlockedReflection instead, since its candidate ranges are undefined.
    """
    unknown = 0
    for x, node in enumerate(datum.nodes):
        if reflection_depth is not None and datum.depth[x] > reflection_depth:
            continue
        shortcut = blocked_shortcut(node, datum.path_to(x))
        if shortcut is not None:
            return shortcut
        candidates = list(all_candidates(node))
        if node_subdiagrams and x > 0:
            candidates.extend(node_subdiagram_candidates(node.rank))
        for candidate in candidates:
            derived, result = evaluate_candidate(node, candidate, oracle)
            if result.status is MatchStatus.UNKNOWN:
                unknown += 1
                continue
            if result.is_no_match:
                return CriterionWitness(
                    node=format_diagram(node),
                    path=datum.path_to(x),
                    criterion=candidate.criterion,
                    omega=candidate.omega,
                    alpha=candidate.alpha,
                    beta=candidate.beta,
                    derived=_derived_text(derived),
                )
    if unknown:
        logger.debug("%d candidate diagrams had undecided membership", unknown)
    return None


def apply_criteria(
    d: DynkinDiagram,
    reflection_depth: Optional[int] = None,
    structural: bool = True,
    oracle: Optional[RankTwoOracle] = None,
    bounds: Bounds = None,
    datum: Optional[BasicDatum] = None,
) -> Verdict:
    """
    Run criteria 1-3 on d and on the nodes of its basic datum.

    Args:
        d: Rank-3 diagram
        reflection_depth: Only nodes at most this many reflections away
            (None: every explored node)
        structural: Also apply the rank-2 subdiagram, six-point and standard
            rules; with False only the criteria (and blocked reflections) kill
        oracle: Membership oracle (defaults to the configured one)
        bounds: Exploration bounds
        datum: An already explored datum of d

    Returns:
        InfiniteGK with a certificate, or Unknown; never FiniteRoots
    """
    if d.rank != 3:
        raise InvalidArgument(f"criteria apply to rank 3 diagrams, got rank {d.rank}")
    bounds = bounds or DEFAULT_BOUNDS
    oracle = oracle or default_oracle()

    if structural:
        verdict = subdiagram_verdict(d, oracle)
        if verdict is not None:
            return verdict
        if six_point_rule(d):
            return Verdict.infinite(SixPointGroupoid(node=format_diagram(d)))

    if datum is None:
        datum = explore(d, bounds, with_roots=False)
    if isinstance(datum.status, BlockedAt):
        return datum_verdict(datum)

    witness = criteria_witness(datum, oracle, reflection_depth, node_subdiagrams=structural)
    if witness is not None:
        return Verdict.infinite(witness)

    if structural:
        certificate = standard_verdict(d, bounds, datum)
        if isinstance(certificate, Verdict):
            return certificate
        if certificate is not None:
            return Verdict.infinite(certificate)

    return Verdict.unknown(f"no rule fired on {len(datum.nodes)} nodes ({datum.status.describe()})")
