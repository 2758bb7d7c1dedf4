"""Criteria 1-3, their application over a basic datum, and the full pipeline."""

from .candidates import (
    CRITERIA,
    CriterionCandidate,
    criterion1,
    criterion2,
    criterion3,
    all_candidates,
    blocked_shortcut,
)
from .apply import (
    apply_criteria,
    criteria_witness,
    evaluate_candidate,
    node_subdiagram_candidates,
    subdiagram_verdict,
)
from .pipeline import classify, MAX_RANK

__all__ = [
    "CRITERIA",
    "CriterionCandidate",
    "criterion1",
    "criterion2",
    "criterion3",
    "all_candidates",
    "blocked_shortcut",
    "apply_criteria",
    "criteria_witness",
    "evaluate_candidate",
    "node_subdiagram_candidates",
    "subdiagram_verdict",
    "classify",
    "MAX_RANK",
]
