"""Per-candidate decision shared by line and triangle enumeration."""

import logging
from typing import Optional

from ..cartan import Blocked, GCMType, affine_type_name, cartan_matrix, gcm_class, is_standard
from ..config import Bounds
from ..criteria import apply_criteria
from ..diagram import DynkinDiagram, format_diagram
from ..groupoid import (
    BasicDatum,
    Outcome,
    StandardIndefiniteIsotropic,
    datum_verdict,
    explore,
    six_point_rule,
    standard_verdict,
)
from ..ranktwo import RankTwoOracle
from .report import CandidateOutcome

logger = logging.getLogger(__name__)


def is_line(d: DynkinDiagram) -> bool:
    """Rank 3 with exactly one trivial edge (a connected path)."""
    return sum(1 for _, _, e in d.labeled_edges() if e.is_one()) == 1


def reduces_to_line(datum: BasicDatum) -> bool:
    return any(is_line(node) for node in datum.nodes)


def survivor_label(d: DynkinDiagram, datum: BasicDatum, bounds: Bounds) -> str:
    """Why a candidate the criteria could not kill still has infinite GK dimension."""
    if any(six_point_rule(node) for node in datum.nodes):
        return "SixPointGroupoid"
    if not datum.graph_complete or not is_standard(datum):
        return "Unknown"

    c = cartan_matrix(d)
    if isinstance(c, Blocked):
        return "Unknown"
    kind = gcm_class(c).kind
    if kind is GCMType.AFFINE:
        return f"StandardAffine({affine_type_name(c) or c})"
    if kind is GCMType.INDEFINITE:
        if isinstance(standard_verdict(d, bounds, datum), StandardIndefiniteIsotropic):
            return "StandardIndefiniteIsotropic"
        return "StandardIndefinite"
    return "StandardFinite"


def judge(
    d: DynkinDiagram,
    oracle: RankTwoOracle,
    bounds: Bounds,
    defer_lines: bool = False,
    reflection_depth: Optional[int] = None,
) -> CandidateOutcome:
    """
    Kill by criteria, else recognise list members, else label the survivor.

    Args:
        d: Rank-3 candidate
        oracle: Rank-2 membership oracle
        bounds: Exploration bounds for this candidate
        defer_lines: Triangles whose datum contains a line are deferred
        reflection_depth: Passed through to apply_criteria
    """
    text = format_diagram(d)
    datum = explore(d, bounds, with_roots=False)

    if defer_lines and reduces_to_line(datum):
        return CandidateOutcome(text, "deferred", "reflects to a line")

    verdict = apply_criteria(
        d, reflection_depth=reflection_depth, structural=False,
        oracle=oracle, bounds=bounds, datum=datum,
    )
    if verdict.is_infinite:
        return CandidateOutcome(text, "killed", verdict.certificate.kind, verdict.to_dict())

    # six-point data are complete with unbounded real roots and escape every criterion
    if any(six_point_rule(node) for node in datum.nodes):
        return CandidateOutcome(text, "survivor", "SixPointGroupoid")

    rooted = explore(d, bounds, with_roots=True)
    if datum_verdict(rooted).outcome is Outcome.FINITE_ROOTS:
        return CandidateOutcome(text, "in_list", "FiniteRoots")

    label = survivor_label(d, rooted, bounds)
    logger.debug("survivor %s: %s", text, label)
    return CandidateOutcome(text, "survivor", label)
