"""Rank-3 enumeration harness and the compactly hyperbolic sweep."""

from .report import SHAPES, FATES, CandidateOutcome, Survivor, SurvivorReport
from .judge import is_line, reduces_to_line, survivor_label, judge
from .lines import enumerate_lines, glue_line, line_candidates, oriented_atoms
from .triangles import enumerate_triangles, glue_triangle, triangle_candidates
from .sa1 import SA1Disagreement, is_all_sa1, sa1_cross_check, sa1_triangle, sa1_triangle_rule
from .expected import (
    ExpectedSurvivor,
    compare_survivors,
    expected_lines,
    expected_triangles,
    symmetry_key,
)
from .sweep import (
    PrintedWitness,
    ROW_STATUSES,
    SweepInstance,
    SweepReport,
    SweepRow,
    census_outcomes,
    census_summary,
    check_witness,
    hyperbolic_sweep,
    outcome_key,
)

__all__ = [
    "SHAPES",
    "FATES",
    "CandidateOutcome",
    "Survivor",
    "SurvivorReport",
    "is_line",
    "reduces_to_line",
    "survivor_label",
    "judge",
    "enumerate_lines",
    "glue_line",
    "line_candidates",
    "oriented_atoms",
    "enumerate_triangles",
    "glue_triangle",
    "triangle_candidates",
    "SA1Disagreement",
    "is_all_sa1",
    "sa1_cross_check",
    "sa1_triangle",
    "sa1_triangle_rule",
    "ExpectedSurvivor",
    "compare_survivors",
    "expected_lines",
    "expected_triangles",
    "symmetry_key",
    "ROW_STATUSES",
    "SweepInstance",
    "SweepReport",
    "SweepRow",
    "census_outcomes",
    "census_summary",
    "hyperbolic_sweep",
    "PrintedWitness",
    "check_witness",
    "outcome_key",
]
