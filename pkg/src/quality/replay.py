"""
Certificate replay.

Every InfiniteGK certificate is re-checked from the diagram text alone: paths
are walked again with fresh reflections, derived rank-2 diagrams recomputed
and membership asked again. Nothing from the run that produced the
certificate is trusted.
"""

import logging
import random
from dataclasses import asdict, dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy import eye

from ..cartan import Blocked, cartan_row
from ..config import DEFAULT_BOUNDS, Bounds, config
from ..criteria import all_candidates, apply_criteria, classify, node_subdiagram_candidates
from ..diagram import DynkinDiagram, degree_q, format_diagram, parse_diagram, subdiagram
from ..errors import NicholsError
from ..groupoid import (
    Verdict,
    explore,
    has_infinite_order,
    orbit_sizes,
    reflect,
    s_matrix,
    six_point_rule,
    standard_verdict,
)
from ..ranktwo import RankTwoOracle, default_oracle
from ..scalar import format_scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReplayResult:
    diagram: str
    kind: str
    verified: bool
    reason: str = ""


def walk(d: DynkinDiagram, path: Sequence[int]) -> Tuple[Optional[DynkinDiagram], Any]:
    """
    Reflect along ``path`` composing the s-maps.

    Returns:
        (end node, sympy matrix), or (None, Blocked) if a step is blocked
    """
    node, m = d, eye(d.rank)
    for label in path:
        row = cartan_row(node, label)
        if isinstance(row, Blocked):
            return None, row
        m = m * s_matrix(row, label)
        node = reflect(node, label)
    return node, m


def _triple_text(triple) -> Tuple[str, ...]:
    return tuple(format_scalar(x) for x in triple)


def _replay_blocked(d, cert, oracle, bounds) -> str:
    node, _ = walk(d, cert["path"])
    if node is None:
        return "path is blocked before its end"
    if format_diagram(node) != cert["node"]:
        return "path does not reach the recorded node"
    if not isinstance(cartan_row(node, cert["vertex"]), Blocked):
        return f"vertex {cert['vertex'] + 1} reflects"
    return ""


def _replay_criterion(d, cert, oracle, bounds) -> str:
    node, _ = walk(d, cert["path"])
    if node is None or format_diagram(node) != cert["node"]:
        return "path does not reach the recorded node"
    shape = (cert["criterion"], tuple(cert["omega"]), tuple(cert["alpha"]), tuple(cert["beta"]))
    pool = node_subdiagram_candidates(node.rank) if cert["criterion"] == "subdiagram" else all_candidates(node)
    if not any((c.criterion, c.omega, c.alpha, c.beta) == shape for c in pool):
        return "candidate is not admissible at the node"
    derived = degree_q(node, cert["alpha"], cert["beta"])
    if _triple_text(derived) != tuple(cert["derived"]):
        return f"derived diagram is {_triple_text(derived)}"
    if not oracle.match(*derived).is_no_match:
        return "derived diagram is not a NoMatch"
    return ""


def _replay_subdiagram(d, cert, oracle, bounds) -> str:
    a, b = cert["pair"]
    triple = (d.vertex(a), d.edge(a, b), d.vertex(b))
    if _triple_text(triple) != tuple(cert["derived"]):
        return "subdiagram differs from the recorded one"
    if not oracle.match(*triple).is_no_match:
        return "subdiagram is in the list"
    return ""


def _replay_six_point(d, cert, oracle, bounds) -> str:
    node = parse_diagram(cert["node"])
    if not six_point_rule(node):
        return "node is not in the six-point table"
    if node != d and node not in explore(d, bounds, with_roots=False).index:
        return "node is not reachable from the diagram"
    return ""


def _replay_standard(d, cert, oracle, bounds) -> str:
    again = standard_verdict(d, bounds)
    if isinstance(again, Verdict):
        return f"standard rules undecided: {again.note}"
    if again is None or again.kind != cert["kind"]:
        return "standard rules do not fire"
    if again.gcm != cert["gcm"]:
        return f"Cartan matrix is {again.gcm}"
    if cert["kind"] == "StandardIndefiniteIsotropic":
        gamma = tuple(cert["gamma"])
        if not degree_q(d, gamma, gamma)[0].is_one():
            return "recorded root is not isotropic"
    return ""


def _replay_growth(d, cert, oracle, bounds) -> str:
    node, m = walk(d, cert["word"])
    if node is None or node != d:
        return "word is not closed at the diagram"
    if not has_infinite_order(m):
        return "word has finite order"
    sizes = orbit_sizes(m, tuple(cert["gamma"]), len(cert["sizes"]))
    if sizes != tuple(cert["sizes"]):
        return "orbit sizes differ"
    return ""


def _replay_rank_three(d, cert, oracle, bounds) -> str:
    sub = subdiagram(d, cert["vertices"])
    if format_diagram(sub) != cert["subdiagram"]:
        return "subdiagram differs from the recorded one"
    verdict = classify(sub, bounds, oracle)
    if not verdict.is_infinite:
        return f"subdiagram is {verdict.label}"
    return ""


REPLAYERS: Dict[str, Callable[..., str]] = {
    "BlockedReflection": _replay_blocked,
    "CriterionWitness": _replay_criterion,
    "RankTwoSubdiagram": _replay_subdiagram,
    "SixPointGroupoid": _replay_six_point,
    "StandardAffine": _replay_standard,
    "StandardIndefiniteIsotropic": _replay_standard,
    "RootGrowth": _replay_growth,
    "RankThreeSubdiagram": _replay_rank_three,
}


def replay_certificate(
    diagram: str,
    verdict: Dict[str, Any],
    oracle: Optional[RankTwoOracle] = None,
    bounds: Optional[Bounds] = None,
) -> ReplayResult:
    """
    Re-verify the certificate of one InfiniteGK verdict.

    Args:
        diagram: Diagram text
        verdict: ``Verdict.to_dict()`` output (possibly read back from JSON)
    """
    oracle = oracle or default_oracle()
    bounds = bounds or DEFAULT_BOUNDS
    cert = verdict.get("certificate") or {}
    kind = cert.get("kind", "")
    replayer = REPLAYERS.get(kind)
    if replayer is None:
        return ReplayResult(diagram, kind, False, "no certificate to replay")
    try:
        reason = replayer(parse_diagram(diagram), cert, oracle, bounds)
    except (NicholsError, KeyError, TypeError, IndexError) as exc:
        reason = f"{type(exc).__name__}: {exc}"
    if reason:
        logger.warning("replay failed for %s (%s): %s", diagram, kind, reason)
    return ReplayResult(diagram, kind, not reason, reason)


def replay_sample(
    kills: Sequence[Dict[str, Any]],
    sample: Optional[int] = None,
    seed: Optional[int] = None,
    oracle: Optional[RankTwoOracle] = None,
    bounds: Optional[Bounds] = None,
) -> Dict[str, Any]:
    """Replay a seeded sample of ``{"diagram", "verdict"}`` kill records."""
    sample = config.harness.replay_sample if sample is None else sample
    rng = random.Random(config.harness.replay_seed if seed is None else seed)
    chosen = list(kills) if len(kills) <= sample else rng.sample(list(kills), sample)
    results = [replay_certificate(k["diagram"], k["verdict"], oracle, bounds) for k in chosen]
    return {
        "sampled": len(results),
        "verified": sum(r.verified for r in results),
        "failures": [asdict(r) for r in results if not r.verified],
    }


def survivor_coherence(
    survivors: Sequence[str],
    nodes: int = 3,
    seed: Optional[int] = None,
    oracle: Optional[RankTwoOracle] = None,
    bounds: Optional[Bounds] = None,
) -> Dict[str, Any]:
    """
    Re-run the criteria from random nodes of each survivor's datum.

    A survivor is incoherent when the criteria kill it from another node of
    the same Weyl groupoid.
    """
    oracle = oracle or default_oracle()
    bounds = bounds or DEFAULT_BOUNDS
    rng = random.Random(config.harness.replay_seed if seed is None else seed)
    incoherent: List[Dict[str, str]] = []
    for text in survivors:
        datum = explore(parse_diagram(text), bounds, with_roots=False)
        picks = rng.sample(datum.nodes, min(nodes, len(datum.nodes)))
        for node in picks:
            verdict = apply_criteria(node, structural=False, oracle=oracle, bounds=bounds)
            if verdict.is_infinite:
                incoherent.append({"diagram": text, "node": format_diagram(node), "verdict": verdict.label})
                break
    return {"checked": len(survivors), "incoherent": incoherent}
