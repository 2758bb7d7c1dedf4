"""
The full classification pipeline.

Rules run in a fixed order and the first one that decides wins:
rank-2 subdiagrams, six-point table, blocked reflection, finite real
roots, standard type, criteria, root growth, rank-3 subdiagrams.
"""

import logging
from itertools import combinations
from typing import Optional

from ..config import Bounds, DEFAULT_BOUNDS
from ..diagram import DynkinDiagram, format_diagram, subdiagram
from ..errors import InvalidArgument
from ..groupoid import (
    Outcome,
    RankThreeSubdiagram,
    SixPointGroupoid,
    Verdict,
    datum_verdict,
    explore,
    find_root_growth,
    six_point_rule,
    standard_verdict,
)
from ..ranktwo import RankTwoOracle, default_oracle
from .apply import criteria_witness, subdiagram_verdict

logger = logging.getLogger(__name__)

MAX_RANK = 5


def classify(
    d: DynkinDiagram, bounds: Bounds = None, oracle: Optional[RankTwoOracle] = None
) -> Verdict:
    """
    Classify d as FiniteRoots, InfiniteGK (with certificate) or Unknown.

    Args:
        d: Diagram of rank 1 to 5
        bounds: Exploration bounds
        oracle: Rank-2 membership oracle
    """
    if not 1 <= d.rank <= MAX_RANK:
        raise InvalidArgument(f"classify supports rank 1..{MAX_RANK}, got {d.rank}")
    bounds = bounds or DEFAULT_BOUNDS
    oracle = oracle or default_oracle()

    if d.rank >= 3:
        verdict = subdiagram_verdict(d, oracle)
        if verdict is not None:
            return verdict
    if six_point_rule(d):
        return Verdict.infinite(SixPointGroupoid(node=format_diagram(d)))

    datum = explore(d, bounds, with_roots=True)
    verdict = datum_verdict(datum)
    if verdict.outcome is not Outcome.UNKNOWN:
        return verdict

    if datum.graph_complete:
        certificate = standard_verdict(d, bounds, datum)
        if certificate is not None and not isinstance(certificate, Verdict):
            return Verdict.infinite(certificate)

    if d.rank == 3:
        witness = criteria_witness(datum, oracle, node_subdiagrams=True)
        if witness is not None:
            return Verdict.infinite(witness)

    certificate = find_root_growth(datum, bounds)
    if certificate is not None:
        return Verdict.infinite(certificate, note=verdict.note)

    if d.rank >= 4:
        for vertices in combinations(range(d.rank), 3):
            inner = classify(subdiagram(d, vertices), bounds, oracle)
            if inner.is_infinite:
                return Verdict.infinite(RankThreeSubdiagram(
                    vertices=vertices,
                    subdiagram=format_diagram(subdiagram(d, vertices)),
                    inner_kind=inner.certificate.kind,
                ))

    logger.debug("classify: no rule decided %s (%s)", format_diagram(d), verdict.note)
    return Verdict.unknown(verdict.note)
