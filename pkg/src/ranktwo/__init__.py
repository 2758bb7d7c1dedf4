"""Rank-2 list membership: table, oracle and gluing atoms."""

from .expr import ScalarExpr, parse_expr, Z3
from .table import Rank2Row, Rank2Table, Triple, rank2, as_triple, rows_from_frame, load_rank2_table
from .oracle import MatchResult, MatchStatus, RankTwoOracle, default_oracle, in_list_rank2
from .atoms import Atom, enumerate_rank2_atoms, enumerate_closure_atoms

__all__ = [
    "ScalarExpr",
    "parse_expr",
    "Z3",
    "Rank2Row",
    "Rank2Table",
    "Triple",
    "rank2",
    "as_triple",
    "rows_from_frame",
    "load_rank2_table",
    "MatchResult",
    "MatchStatus",
    "RankTwoOracle",
    "default_oracle",
    "in_list_rank2",
    "Atom",
    "enumerate_rank2_atoms",
    "enumerate_closure_atoms",
]
