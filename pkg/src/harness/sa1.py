"""
Triangles with three -1 vertices.

For the triangle with vertices -1 and edges s (1-2), r (2-3), q (1-3),
reflecting at vertex 1 turns the 2-3 edge into qrs. When qrs = 1 the datum
is of finite type and reflects to a line, already covered by line
enumeration. Every other all -1 triangle takes the general path.
"""

import logging
import random
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import DEFAULT_BOUNDS, Bounds, config
from ..criteria import apply_criteria
from ..diagram import DynkinDiagram, format_diagram
from ..groupoid import explore
from ..ranktwo import RankTwoOracle, default_oracle
from ..scalar import MINUS_ONE, UnityRoot, gf_domain
from .judge import reduces_to_line
from .lines import candidate_bounds

logger = logging.getLogger(__name__)


def is_all_sa1(d: DynkinDiagram) -> bool:
    return (
        d.rank == 3
        and all(v == MINUS_ONE for v in d.vertices)
        and not any(e.is_one() for e in d.edges)
    )


def sa1_triangle(q: UnityRoot, r: UnityRoot, s: UnityRoot) -> DynkinDiagram:
    """Edges: s between 1 and 2, r between 2 and 3, q between 1 and 3."""
    return DynkinDiagram((MINUS_ONE,) * 3, (s, q, r))


def sa1_triangle_rule(q: UnityRoot, r: UnityRoot, s: UnityRoot) -> Optional[str]:
    """"deferred" when qrs = 1; None means the triangle needs the general path."""
    return "deferred" if (q * r * s).is_one() else None


@dataclass(frozen=True)
class SA1Disagreement:
    diagram: str
    rule: Optional[str]
    criteria: str
    reflects_to_line: bool


def _draw(rng: random.Random, values: List[UnityRoot], on_surface: bool) -> Tuple[UnityRoot, ...]:
    """(q, r, s) uniformly, or with s = (qr)^-1 when ``on_surface`` and that value is allowed."""
    if on_surface:
        allowed = set(values)
        for _ in range(20):
            q, r = rng.choice(values), rng.choice(values)
            s = (q * r).inverse()
            if s in allowed:
                return q, r, s
    return tuple(rng.choice(values) for _ in range(3))


def sa1_cross_check(
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    domain: Optional[Sequence[UnityRoot]] = None,
    oracle: Optional[RankTwoOracle] = None,
    bounds: Bounds = None,
) -> Dict[str, object]:
    """
    Check the rule against apply_criteria on random (q, r, s) with q, r, s != ±1.

    Half of the samples are drawn with qrs = 1. A deferred triangle disagrees
    when the criteria kill it or its datum has no line node; triangles left to
    the general path are only counted by outcome.

    Returns:
        {"samples": n, "deferred": k, "general": {label: count}, "disagreements": [...]}
    """
    samples = samples if samples is not None else config.harness.sa1_samples
    rng = random.Random(seed if seed is not None else config.harness.replay_seed)
    values = [
        x for x in (domain or gf_domain(config.ranktwo.gf_generators))
        if not x.is_one() and x != MINUS_ONE
    ]
    oracle = oracle or default_oracle()
    bounds = candidate_bounds(bounds or DEFAULT_BOUNDS)

    deferred = 0
    general: Counter = Counter()
    disagreements: List[SA1Disagreement] = []
    for n in range(samples):
        q, r, s = _draw(rng, values, on_surface=n % 2 == 0)
        d = sa1_triangle(q, r, s)
        rule = sa1_triangle_rule(q, r, s)
        datum = explore(d, bounds, with_roots=False)
        verdict = apply_criteria(d, structural=False, oracle=oracle, bounds=bounds, datum=datum)
        outcome = verdict.certificate.kind if verdict.is_infinite else verdict.label
        line = reduces_to_line(datum)
        if rule != "deferred":
            general[outcome] += 1
            continue
        deferred += 1
        if verdict.is_infinite or not line:
            disagreements.append(SA1Disagreement(format_diagram(d), rule, outcome, line))

    if disagreements:
        logger.warning("sA1 rule disagrees with the criteria on %d of %d samples", len(disagreements), samples)
    return {"samples": samples, "deferred": deferred, "general": dict(general), "disagreements": disagreements}
